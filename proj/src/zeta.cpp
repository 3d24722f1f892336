#include "mzeta/zeta.hpp"

#include "mzeta/errors.hpp"

#include <algorithm>
#include <unordered_map>

namespace mz {

DirichletPoly pg_series(const SubgroupLattice& lattice) {
    const auto& mu = lattice.moebius();
    DirichletPoly p;
    for (const auto& rec : lattice.subgroups()) {
        if (mu[rec.id] == 0) continue;
        p.add_coeff(lattice.subgroup_index(rec.id), Rational(mu[rec.id]));
    }
    return p;
}

Rational probgen(const GroupUniverse& universe, unsigned t, std::uint64_t tuple_cap) {
    if (t == 0) throw std::invalid_argument("probgen requires t >= 1");
    const Integer n = universe.size();
    const Integer total = integer_pow(n, t);
    if (total > tuple_cap)
        throw CapExceeded("tuple space of size " + total.str() + " exceeds tuple cap " +
                          std::to_string(tuple_cap));

    // States are the subgroups reachable as closures of partial tuples,
    // discovered on the fly.  The closure of a tuple depends only on the
    // closure so far and the next element, so the |G|^t scan collapses to
    // one memoized transition per (state, element).  No Moebius values are
    // involved: this stays an independent count of generating tuples.
    struct State {
        DynBitset members;
        std::vector<std::uint32_t> gens;
        std::vector<std::uint32_t> transition; // element -> state, UINT32_MAX unset
    };
    std::vector<State> states;
    std::unordered_map<DynBitset, std::uint32_t, DynBitsetHash> by_members;

    auto intern = [&](DynBitset bits, std::vector<std::uint32_t> gens) -> std::uint32_t {
        const auto it = by_members.find(bits);
        if (it != by_members.end()) return it->second;
        const auto id = static_cast<std::uint32_t>(states.size());
        by_members.emplace(bits, id);
        states.push_back(State{std::move(bits), std::move(gens),
                               std::vector<std::uint32_t>(universe.size(), UINT32_MAX)});
        return id;
    };

    DynBitset trivial(universe.size());
    trivial.set(0);
    intern(std::move(trivial), {});

    std::vector<Integer> dist(1, Integer(1)); // tuple counts per closure state
    for (unsigned step = 0; step < t; ++step) {
        std::vector<Integer> next(states.size(), Integer(0));
        for (std::uint32_t s = 0; s < dist.size(); ++s) {
            if (dist[s] == 0) continue;
            for (std::uint32_t x = 0; x < universe.size(); ++x) {
                std::uint32_t& slot = states[s].transition[x];
                if (slot == UINT32_MAX) {
                    if (states[s].members.test(x)) {
                        slot = s; // element already inside: closure unchanged
                    } else {
                        auto gens = states[s].gens;
                        gens.push_back(x);
                        DynBitset closed = universe.close_subgroup(gens);
                        slot = intern(std::move(closed), std::move(gens));
                    }
                }
                if (slot >= next.size()) next.resize(slot + 1, Integer(0));
                next[slot] += dist[s];
            }
        }
        dist.swap(next);
    }

    DynBitset full(universe.size());
    for (std::uint32_t i = 0; i < universe.size(); ++i) full.set(i);
    const auto it = by_members.find(full);
    Integer generating = 0;
    if (it != by_members.end() && it->second < dist.size()) generating = dist[it->second];
    return Rational(generating) / Rational(total);
}

namespace {

// sum over supplements of soc: c_n = sum mu(H), |X:H| = n, X = soc * H.
// No shape validation; used both for almost simple X and for monolithic
// quotients whose socle is a power S^r.
DirichletPoly supplement_series(const SubgroupLattice& lattice, std::uint32_t socle_id) {
    const auto& soc = lattice.subgroups()[socle_id];
    const std::uint64_t full = lattice.universe().size();
    const auto& mu = lattice.moebius();
    DirichletPoly p;
    for (const auto& rec : lattice.subgroups()) {
        if (mu[rec.id] == 0) continue;
        // X = S H iff |S||H| / |S meet H| = |X|.
        const std::uint64_t inter = (soc.members & rec.members).count();
        if (static_cast<std::uint64_t>(soc.order) * rec.order != full * inter) continue;
        p.add_coeff(full / rec.order, Rational(mu[rec.id]));
    }
    return p;
}

} // namespace

bool is_almost_simple(const SubgroupLattice& lattice, std::uint32_t socle_id) {
    const auto& soc = lattice.subgroups()[socle_id];
    if (soc.order == 1 || lattice.subgroup_is_abelian(socle_id)) return false;
    // soc must be simple: no proper nontrivial subgroup of soc normal in soc.
    // Conjugation by soc's generators is enough (they generate, and the
    // conjugation maps are bijections of any finite invariant set).
    const GroupUniverse& U = lattice.universe();
    for (const auto& rec : lattice.subgroups()) {
        if (rec.order == 1 || rec.order == soc.order) continue;
        if (!rec.members.is_subset_of(soc.members)) continue;
        bool normal_in_soc = true;
        for (const auto g : soc.generators) {
            const auto gi = U.inv(g);
            bool same = true;
            rec.members.for_each([&](std::size_t x) {
                if (same &&
                    !rec.members.test(U.mul(U.mul(gi, static_cast<std::uint32_t>(x)), g)))
                    same = false;
            });
            if (!same) {
                normal_in_soc = false;
                break;
            }
        }
        if (normal_in_soc) return false;
    }
    return lattice.subgroups()[lattice.centralizer_id(socle_id)].order == 1;
}

DirichletPoly pxs_series(const SubgroupLattice& x_lattice, std::uint32_t socle_id) {
    if (x_lattice.socle_id() != socle_id)
        throw std::invalid_argument("given subgroup is not the socle");
    if (!is_almost_simple(x_lattice, socle_id))
        throw std::invalid_argument("group is not almost simple over the given socle");
    return supplement_series(x_lattice, socle_id);
}

bool factor_is_frattini(const SubgroupLattice& lattice, std::uint32_t upper_id,
                        std::uint32_t lower_id) {
    // Frat(G/N) pulls back to the intersection of the maximal subgroups of G
    // containing N; the factor is Frattini iff upper lands inside it.
    DynBitset acc(lattice.universe().size());
    bool any = false;
    for (const auto m : lattice.maximal_ids()) {
        if (!lattice.leq(lower_id, m)) continue;
        if (!any) {
            acc = lattice.subgroups()[m].members;
            any = true;
        } else {
            acc &= lattice.subgroups()[m].members;
        }
    }
    if (!any) return true; // lower = G: nothing above it, vacuously Frattini
    return lattice.subgroups()[upper_id].members.is_subset_of(acc);
}

std::uint64_t gaschutz_count(const SubgroupLattice& lattice, std::uint32_t upper_id,
                             std::uint32_t lower_id) {
    const auto& upper = lattice.subgroups()[upper_id];
    const auto& lower = lattice.subgroups()[lower_id];
    {
        ChiefStep probe;
        identify_chief_factor(lattice, upper_id, lower_id, probe);
        if (!probe.abelian)
            throw std::invalid_argument("complement counting is for abelian chief factors");
    }
    // Complements of upper/lower in G/lower pull back to subgroups K >= lower
    // with K meet upper = lower and K upper = G.
    const std::uint64_t full = lattice.universe().size();
    std::uint64_t count = 0;
    for (const auto& rec : lattice.subgroups()) {
        if (!lattice.leq(lower_id, rec.id)) continue;
        const std::uint64_t inter = (rec.members & upper.members).count();
        if (inter != lower.order) continue;
        if (static_cast<std::uint64_t>(rec.order) * upper.order == full * lower.order) ++count;
    }
    return count;
}

Quotient monolithic_quotient(const SubgroupLattice& lattice, std::uint32_t upper_id,
                             std::uint32_t lower_id) {
    const GroupUniverse& U = lattice.universe();
    const auto& upper = lattice.subgroups()[upper_id];
    const auto& lower = lattice.subgroups()[lower_id];
    // C_G(upper/lower) = { g : [g, x] in lower for the generators x of upper }.
    DynBitset cent(U.size());
    const auto& gens = upper.generators;
    for (std::uint32_t g = 0; g < U.size(); ++g) {
        bool ok = true;
        const auto gi = U.inv(g);
        for (const auto x : gens) {
            // commutator g^-1 x^-1 g x
            const auto comm = U.mul(U.mul(U.mul(gi, U.inv(x)), g), x);
            if (!lower.members.test(comm)) {
                ok = false;
                break;
            }
        }
        if (ok) cent.set(g);
    }
    return make_quotient(U, cent);
}

std::vector<ChiefFactorReport> chief_factorization(const SubgroupLattice& lattice,
                                                   std::uint64_t seed) {
    const auto series = chief_series(lattice, seed);
    std::vector<ChiefFactorReport> reports;
    reports.reserve(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto& step = series[i];
        ChiefFactorReport rep;
        rep.index_in_series = i;
        rep.step = step;
        rep.is_frattini = factor_is_frattini(lattice, step.upper_id, step.lower_id);
        const std::uint64_t factor_order =
            lattice.subgroups()[step.upper_id].order / lattice.subgroups()[step.lower_id].order;
        if (rep.is_frattini) {
            rep.local_series = DirichletPoly::one();
        } else if (step.abelian) {
            rep.complement_count = gaschutz_count(lattice, step.upper_id, step.lower_id);
            rep.local_series = DirichletPoly::one();
            rep.local_series.add_coeff(factor_order, -Rational(rep.complement_count));
        } else {
            // Supplement-restricted Moebius series of the monolithic
            // quotient L = G/C_G(factor), whose socle is the factor.
            const Quotient q = monolithic_quotient(lattice, step.upper_id, step.lower_id);
            if (q.index == lattice.universe().size()) {
                const auto soc = lattice.socle_id();
                if (lattice.subgroups()[soc].order != factor_order)
                    throw std::logic_error("monolithic socle does not match the chief factor");
                rep.local_series = supplement_series(lattice, soc);
            } else {
                SubgroupLattice l_lattice(q.group);
                const auto soc = l_lattice.socle_id();
                if (l_lattice.subgroups()[soc].order != factor_order)
                    throw std::logic_error("monolithic socle does not match the chief factor");
                rep.local_series = supplement_series(l_lattice, soc);
            }
        }
        reports.push_back(std::move(rep));
    }
    return reports;
}

} // namespace mz
