#include "mzeta/json_io.hpp"

#include "mzeta/errors.hpp"

namespace mz {

using nlohmann::json;

json series_to_json(const DirichletPoly& f) {
    json out = json::array();
    for (const auto& [n, a] : f.terms())
        out.push_back({n, numerator(a).str(), denominator(a).str()});
    return out;
}

DirichletPoly series_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("series JSON must be an array of [n, num, den]");
    DirichletPoly f;
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 3)
            throw ParseError("series term must be [n, \"num\", \"den\"]");
        const auto n = entry[0].get<std::uint64_t>();
        const Integer num(entry[1].get<std::string>());
        const Integer den(entry[2].get<std::string>());
        if (den == 0) throw ParseError("zero denominator in series term");
        f.add_coeff(n, Rational(num) / Rational(den));
    }
    return f;
}

json lattice_to_json(const SubgroupLattice& lattice) {
    json subs = json::array();
    for (const auto& rec : lattice.subgroups()) {
        json members = json::array();
        rec.members.for_each([&](std::size_t x) { members.push_back(x); });
        subs.push_back({{"id", rec.id}, {"order", rec.order}, {"members", members}});
    }
    json leq = json::array();
    for (std::uint32_t a = 0; a < lattice.size(); ++a) {
        lattice.supersets_of(a).for_each([&](std::size_t b) {
            if (b != a) leq.push_back({a, b});
        });
    }
    json maximal = json::array();
    for (const auto id : lattice.maximal_ids()) maximal.push_back(id);
    json moebius = json::object();
    const auto& mu = lattice.moebius();
    for (std::uint32_t id = 0; id < lattice.size(); ++id)
        moebius[std::to_string(id)] = mu[id];
    return {{"degree", lattice.universe().group().degree()},
            {"order", lattice.universe().size()},
            {"subgroups", subs},
            {"leq", leq},
            {"maximal", maximal},
            {"moebius", moebius}};
}

json factorization_to_json(const SubgroupLattice& lattice,
                           const std::vector<ChiefFactorReport>& reports,
                           const std::string& group_name, unsigned hall_t,
                           std::uint64_t tuple_cap) {
    const DirichletPoly pg = pg_series(lattice);
    json factors = json::array();
    for (const auto& rep : reports) {
        json f = {{"kind", rep.step.abelian ? "abelian" : "nonabelian"},
                  {"S", rep.step.simple.name},
                  {"r", rep.step.rank},
                  {"frattini", rep.is_frattini},
                  {"local", series_to_json(rep.local_series)}};
        if (rep.step.abelian && !rep.is_frattini) f["c"] = rep.complement_count;
        factors.push_back(std::move(f));
    }
    json hall;
    const Rational lhs = pg.evaluate(hall_t);
    const Rational rhs = probgen(lattice.universe(), hall_t, tuple_cap);
    hall = {{"t", hall_t},
            {"lhs", rational_to_string(lhs)},
            {"rhs", rational_to_string(rhs)},
            {"equal", lhs == rhs}};
    return {{"group", group_name},
            {"order", lattice.universe().size()},
            {"pg", series_to_json(pg)},
            {"factors", factors},
            {"hall_check", hall}};
}

json profile_to_json(const UsefulIndexProfile& profile) {
    json omega = json::array();
    for (const auto& m : profile.omega) omega.push_back(m.str());
    json primes = json::array();
    for (const auto p : profile.signature_primes) primes.push_back(p);
    json out = {{"group", profile.group_name},
                {"omega", omega},
                {"source", omega_source_name(profile.source)},
                {"signature_primes", primes}};
    if (profile.has_w) out["w"] = profile.w.str();
    return out;
}

json ladder_to_json(const LadderReport& report) {
    json rows = json::array();
    for (const auto& row : report.rows)
        rows.push_back({{"prime", row.prime}, {"groups", row.groups}});
    return rows;
}

json catalog_to_json(const std::vector<SimpleGroupDescriptor>& catalog) {
    json out = json::array();
    for (const auto& d : catalog) {
        json params = json::array();
        if (d.param != 0) params.push_back(d.param);
        json indices = json::array();
        // Only families with a tabulated minimal odd useful index carry one.
        if (d.family != SimpleFamily::sporadic) {
            const auto profile = w_of(d);
            if (profile.has_w) indices.push_back(profile.w.str());
        }
        json primes = json::array();
        for (const auto p : d.signature_primes) primes.push_back(p);
        out.push_back({{"name", d.name},
                       {"family", family_name(d.family)},
                       {"params", params},
                       {"order", d.order.str()},
                       {"useful_odd_indices", indices},
                       {"signature_primes", primes},
                       {"source", d.source}});
    }
    return out;
}

} // namespace mz
