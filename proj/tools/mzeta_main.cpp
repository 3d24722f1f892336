// Command-line front end: group-spec parsing, series computations, lattice
// dumps, useful-index queries, and the elimination ladder.  Results go to
// stdout, diagnostics to stderr.  Exit codes: 0 ok, 1 parse/usage error,
// 2 cap exceeded, 3 reference-table mismatch.

#include "mzeta/errors.hpp"
#include "mzeta/group.hpp"
#include "mzeta/indices.hpp"
#include "mzeta/json_io.hpp"
#include "mzeta/ladder.hpp"
#include "mzeta/lattice.hpp"
#include "mzeta/primes.hpp"
#include "mzeta/zeta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;

struct Options {
    std::string format = "text";
    std::uint64_t element_cap = mz::kDefaultElementCap;
    std::uint64_t tuple_cap = mz::kDefaultTupleCap;
    std::uint64_t index_cap = 1'000'000;
    std::uint64_t seed = 0;
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

mz::DirichletPoly load_series(const std::string& operand) {
    std::string text = operand;
    if (!operand.empty() && operand.front() != '[') {
        std::ifstream in(operand);
        if (!in) throw mz::ParseError("cannot open series file '" + operand + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw mz::ParseError(std::string("series JSON: ") + e.what());
    }
    return mz::series_from_json(j);
}

void print_series(const mz::DirichletPoly& f, const std::string& format) {
    if (format == "json")
        emit(mz::series_to_json(f));
    else if (format == "latex")
        std::cout << f.to_latex() << "\n";
    else
        std::cout << f.to_text() << "\n";
}

std::string ladder_text(const mz::LadderReport& report) {
    std::size_t width = 0;
    for (const auto& row : report.rows)
        width = std::max(width, std::to_string(row.prime).size());
    std::string out;
    for (const auto& row : report.rows) {
        std::string p = std::to_string(row.prime);
        out += std::string(width - p.size(), ' ') + p + " | ";
        for (std::size_t i = 0; i < row.groups.size(); ++i) {
            if (i) out += ", ";
            out += row.groups[i];
        }
        out += "\n";
    }
    if (!report.leftovers.empty()) {
        out += "never eliminated:";
        for (const auto& name : report.leftovers) out += " " + name;
        out += "\n";
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"probabilistic zeta functions of finite groups: Moebius series, "
                 "chief-series factorization, useful indices, elimination ladder"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    Options opt;
    app.add_option("--format", opt.format, "output format: text, json or latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    app.add_option("--element-cap", opt.element_cap, "largest group order to enumerate")
        ->envname("MZ_ELEMENT_CAP");
    app.add_option("--tuple-cap", opt.tuple_cap, "largest tuple space for probgen")
        ->envname("MZ_TUPLE_CAP");
    app.add_option("--index-cap", opt.index_cap, "index bound for series division")
        ->envname("MZ_INDEX_CAP");
    app.add_option("--seed", opt.seed, "chief-series tie-break seed");

    std::string spec;
    unsigned t = 2;
    std::string desc_spec;
    std::uint64_t lo = 1, hi = 1'000'000;
    bool diff_paper = false;
    std::string op;
    std::vector<std::string> operands;
    std::string primes_csv;
    unsigned shift_r = 1;

    auto* zeta = app.add_subcommand("zeta", "P_G(s) from the full subgroup lattice");
    zeta->add_option("group", spec, "group spec")->required();

    auto* factorize = app.add_subcommand("factorize", "chief-series factorization of P_G(s)");
    factorize->add_option("group", spec, "group spec")->required();
    factorize->add_option("--t", t, "exponent for the Hall check");

    auto* moebius = app.add_subcommand("moebius", "Moebius values on the subgroup lattice");
    moebius->add_option("group", spec, "group spec")->required();

    auto* subgroups = app.add_subcommand("subgroups", "full subgroup lattice dump");
    subgroups->add_option("group", spec, "group spec")->required();

    auto* probgen = app.add_subcommand("probgen", "exact generation probability");
    probgen->add_option("group", spec, "group spec")->required();
    probgen->add_option("--t", t, "tuple length");

    auto* omega = app.add_subcommand("omega", "odd useful indices from the lattice");
    omega->add_option("group", spec, "group spec")->required();

    auto* wx = app.add_subcommand("wx", "minimal odd useful index by family rule");
    wx->add_option("descriptor", desc_spec,
                   "alt:<n> | alt2t:<t> | psl2:<p> | sporadic name")
        ->required();

    auto* ladder = app.add_subcommand("ladder", "descending prime elimination table");
    ladder->add_flag("--diff-paper", diff_paper,
                     "compare against the embedded reference table; exit 3 on mismatch");

    auto* nagura = app.add_subcommand("nagura", "scan for x with no prime in [x, 6x/5]");
    nagura->add_option("--lo", lo, "interval start");
    nagura->add_option("--hi", hi, "interval end");

    auto* series = app.add_subcommand("series", "finite Dirichlet series arithmetic");
    series->add_option("op", op, "mul | pi | shift | eval | divide")->required();
    series->add_option("operands", operands, "series as JSON files or inline JSON");
    series->add_option("--primes", primes_csv, "comma-separated primes for pi");
    series->add_option("--r", shift_r, "shift parameter");
    series->add_option("--t", t, "evaluation point");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    auto build_lattice = [&]() {
        return mz::SubgroupLattice(mz::catalog_group(spec, opt.element_cap));
    };

    if (zeta->parsed()) {
        print_series(mz::pg_series(build_lattice()), opt.format);
        return 0;
    }
    if (factorize->parsed()) {
        const auto lattice = build_lattice();
        const auto reports = mz::chief_factorization(lattice, opt.seed);
        const json j = mz::factorization_to_json(lattice, reports,
                                                 mz::group_display_name(spec), t, opt.tuple_cap);
        if (opt.format == "text") {
            std::cout << "group " << j["group"].get<std::string>() << ", order "
                      << j["order"].get<std::uint64_t>() << "\n";
            for (const auto& rep : reports) {
                std::cout << "  " << rep.step.simple.name << "^" << rep.step.rank
                          << (rep.is_frattini ? " (Frattini)" : "") << ": "
                          << rep.local_series.to_text() << "\n";
            }
            std::cout << "P_G = " << mz::pg_series(lattice).to_text() << "\n";
            std::cout << "Hall check at t=" << t << ": "
                      << (j["hall_check"]["equal"].get<bool>() ? "equal" : "MISMATCH") << "\n";
        } else {
            emit(j);
        }
        return 0;
    }
    if (moebius->parsed()) {
        const auto lattice = build_lattice();
        const auto& mu = lattice.moebius();
        if (opt.format == "text") {
            for (const auto& rec : lattice.subgroups())
                std::cout << rec.id << "\torder " << rec.order << "\tindex "
                          << lattice.subgroup_index(rec.id) << "\tmu " << mu[rec.id] << "\n";
        } else {
            json by_id = json::object();
            for (const auto& rec : lattice.subgroups())
                by_id[std::to_string(rec.id)] = mu[rec.id];
            json by_index = json::object();
            const auto pg = mz::pg_series(lattice);
            for (const auto& [n, a] : pg.terms())
                by_index[std::to_string(n)] = mz::rational_to_string(a);
            emit({{"group", mz::group_display_name(spec)},
                  {"order", lattice.universe().size()},
                  {"moebius", by_id},
                  {"by_index", by_index}});
        }
        return 0;
    }
    if (subgroups->parsed()) {
        const auto lattice = build_lattice();
        if (opt.format == "text") {
            std::cout << lattice.size() << " subgroups of order "
                      << lattice.universe().size() << " group\n";
            for (const auto& rec : lattice.subgroups())
                std::cout << rec.id << "\torder " << rec.order
                          << (lattice.is_normal(rec.id) ? "\tnormal" : "") << "\n";
        } else {
            emit(mz::lattice_to_json(lattice));
        }
        return 0;
    }
    if (probgen->parsed()) {
        const mz::GroupUniverse universe(mz::catalog_group(spec, opt.element_cap));
        const mz::Rational value = mz::probgen(universe, t, opt.tuple_cap);
        if (opt.format == "json")
            emit({{"group", mz::group_display_name(spec)},
                  {"t", t},
                  {"value", mz::rational_to_string(value)}});
        else
            std::cout << mz::rational_to_string(value) << "\n";
        return 0;
    }
    if (omega->parsed()) {
        auto profile = mz::omega_set_lattice(build_lattice());
        profile.group_name = mz::group_display_name(spec);
        if (opt.format == "json") {
            emit(mz::profile_to_json(profile));
        } else {
            std::cout << "omega = {";
            bool first = true;
            for (const auto& m : profile.omega) {
                if (!first) std::cout << ", ";
                std::cout << m.str();
                first = false;
            }
            std::cout << "}";
            if (profile.has_w) std::cout << ", w = " << profile.w.str();
            std::cout << " [" << mz::omega_source_name(profile.source) << "]\n";
        }
        return 0;
    }
    if (wx->parsed()) {
        const auto desc = mz::parse_descriptor_spec(desc_spec);
        const auto profile = mz::w_of(desc);
        if (opt.format == "json") {
            auto j = mz::profile_to_json(profile);
            j["group"] = desc.name;
            emit(j);
        } else if (profile.has_w) {
            std::cout << profile.w.str() << "\n";
        } else {
            std::cout << desc.name << ": index not tabulated; signature primes:";
            for (const auto p : profile.signature_primes) std::cout << " " << p;
            std::cout << "\n";
        }
        return 0;
    }
    if (ladder->parsed()) {
        const auto report = mz::eliminate(mz::full_catalog());
        if (opt.format == "json")
            emit(mz::ladder_to_json(report));
        else
            std::cout << ladder_text(report);
        if (diff_paper && !mz::matches_reference(report)) {
            std::cerr << "elimination table deviates from the reference table\n";
            return 3;
        }
        return 0;
    }
    if (nagura->parsed()) {
        const auto failures = mz::nagura_check(lo, hi);
        if (opt.format == "json") {
            emit({{"lo", lo}, {"hi", hi}, {"failures", failures}});
        } else if (failures.empty()) {
            std::cout << "none\n";
        } else {
            for (std::size_t i = 0; i < failures.size(); ++i)
                std::cout << failures[i] << (i + 1 < failures.size() ? " " : "\n");
        }
        return 0;
    }
    if (series->parsed()) {
        if (op == "mul" || op == "divide") {
            if (operands.size() != 2)
                throw mz::ParseError("series " + op + " needs exactly two operands");
        } else if (operands.size() != 1) {
            throw mz::ParseError("series " + op + " needs exactly one operand");
        }
        const mz::DirichletPoly a = load_series(operands[0]);
        if (op == "mul") {
            print_series(a * load_series(operands[1]), opt.format);
        } else if (op == "divide") {
            const auto q = mz::try_divide(a, load_series(operands[1]), opt.index_cap);
            if (!q) {
                std::cerr << "no finite quotient within index cap " << opt.index_cap << "\n";
                return 2;
            }
            print_series(*q, opt.format);
        } else if (op == "pi") {
            std::set<std::uint64_t> primes;
            std::stringstream ss(primes_csv);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) primes.insert(std::stoull(item));
            print_series(a.pi_part(primes), opt.format);
        } else if (op == "shift") {
            print_series(a.shift_transform(shift_r), opt.format);
        } else if (op == "eval") {
            std::cout << mz::rational_to_string(a.evaluate(t)) << "\n";
        } else {
            throw mz::ParseError("unknown series operation '" + op + "'");
        }
        return 0;
    }
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const mz::CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 2;
    } catch (const mz::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
