#include "mzeta/errors.hpp"
#include "mzeta/lattice.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

using namespace mz;

namespace {

// Reference enumerator: seed with every cyclic subgroup and keep joining
// every known subgroup with every cyclic generator until nothing changes.
// No conjugacy shortcuts, no ordering tricks; deliberately dumb.
std::unordered_set<DynBitset, DynBitsetHash> naive_subgroups(const GroupUniverse& u) {
    struct Rec {
        DynBitset bits;
        std::vector<std::uint32_t> gens;
    };
    std::vector<Rec> recs;
    std::unordered_set<DynBitset, DynBitsetHash> seen;
    auto add = [&](DynBitset bits, std::vector<std::uint32_t> gens) {
        if (seen.insert(bits).second) recs.push_back(Rec{std::move(bits), std::move(gens)});
    };
    DynBitset triv(u.size());
    triv.set(0);
    add(std::move(triv), {});
    for (std::uint32_t x = 1; x < u.size(); ++x) add(u.close_subgroup({x}), {x});

    bool changed = true;
    while (changed) {
        changed = false;
        const std::size_t frozen = recs.size();
        for (std::size_t i = 0; i < frozen; ++i) {
            for (std::uint32_t x = 1; x < u.size(); ++x) {
                if (recs[i].bits.test(x)) continue;
                auto gens = recs[i].gens;
                gens.push_back(x);
                DynBitset joined = u.close_subgroup(gens);
                if (!seen.contains(joined)) {
                    changed = true;
                    add(std::move(joined), std::move(gens));
                }
            }
        }
    }
    return seen;
}

std::map<std::uint32_t, std::size_t> order_histogram(const SubgroupLattice& lattice) {
    std::map<std::uint32_t, std::size_t> hist;
    for (const auto& rec : lattice.subgroups()) ++hist[rec.order];
    return hist;
}

const char* kQ8 = "gens:(1 3 2 4)(5 8 6 7);(1 5 2 6)(3 7 4 8)";

} // namespace

TEST_SUITE_BEGIN("lattice");

TEST_CASE("subgroup counts of small groups") {
    CHECK(SubgroupLattice(catalog_group("cyclic:6")).size() == 4);
    CHECK(SubgroupLattice(catalog_group("alt:4")).size() == 10);
    CHECK(SubgroupLattice(catalog_group("sym:4")).size() == 30);
    CHECK(SubgroupLattice(catalog_group("dihedral:4")).size() == 10);
    CHECK(SubgroupLattice(catalog_group(kQ8)).size() == 6); // 1, Z, three C4, Q8
    const SubgroupLattice a5(catalog_group("alt:5"));
    CHECK(a5.size() == 59);
    // class sizes 1+15+10+5+6+10+6+5+1 by order
    const auto hist = order_histogram(a5);
    CHECK(hist.at(1) == 1);
    CHECK(hist.at(2) == 15);
    CHECK(hist.at(3) == 10);
    CHECK(hist.at(4) == 5);
    CHECK(hist.at(5) == 6);
    CHECK(hist.at(6) == 10);
    CHECK(hist.at(10) == 6);
    CHECK(hist.at(12) == 5);
    CHECK(hist.at(60) == 1);
    CHECK(SubgroupLattice(catalog_group("sym:5")).size() == 156);
}

TEST_CASE("agrees with the naive enumerator") {
    for (const auto* spec :
         {"cyclic:6", "dihedral:4", kQ8, "alt:4", "sym:4", "cyclic:4", "alt:5"}) {
        const SubgroupLattice lattice(catalog_group(spec));
        const auto expected = naive_subgroups(lattice.universe());
        REQUIRE(lattice.size() == expected.size());
        for (const auto& rec : lattice.subgroups()) CHECK(expected.contains(rec.members));
    }
}

TEST_CASE("member sets are closed and orders divide") {
    const SubgroupLattice lattice(catalog_group("sym:4"));
    const auto& u = lattice.universe();
    for (const auto& rec : lattice.subgroups()) {
        CHECK(u.size() % rec.order == 0);
        CHECK(rec.members.test(0));
        const auto members = rec.members.to_indices();
        for (const auto a : members) {
            CHECK(rec.members.test(u.inv(a)));
            for (const auto b : members) CHECK(rec.members.test(u.mul(a, b)));
        }
    }
}

TEST_CASE("leq is inclusion and maximal ids are the coatoms") {
    const SubgroupLattice lattice(catalog_group("alt:5"));
    for (const auto& a : lattice.subgroups())
        for (const auto& b : lattice.subgroups()) {
            const bool expected = a.members.is_subset_of(b.members);
            CHECK(lattice.leq(a.id, b.id) == expected);
            if (expected && a.id != b.id) CHECK(a.order < b.order);
        }
    // A5 maximals: five A4, six D10, ten S3
    CHECK(lattice.maximal_ids().size() == 21);
    for (const auto m : lattice.maximal_ids()) {
        const auto ord = lattice.subgroups()[m].order;
        CHECK((ord == 12 || ord == 10 || ord == 6));
    }
}

TEST_CASE("moebius satisfies the defining recursion") {
    for (const auto* spec : {"cyclic:6", "sym:4", "alt:5", "psl2:7"}) {
        const SubgroupLattice lattice(catalog_group(spec));
        const auto& mu = lattice.moebius();
        CHECK(mu[lattice.top_id()] == 1);
        for (const auto& rec : lattice.subgroups()) {
            std::int64_t sum = 0;
            lattice.supersets_of(rec.id).for_each([&](std::size_t k) { sum += mu[k]; });
            if (rec.id == lattice.top_id())
                CHECK(sum == 1);
            else
                CHECK(sum == 0);
        }
    }
}

TEST_CASE("moebius pinned values") {
    const SubgroupLattice c5(catalog_group("cyclic:5"));
    CHECK(c5.moebius()[c5.bottom_id()] == -1);

    const SubgroupLattice a5(catalog_group("alt:5"));
    // mu(A4) = -1 for each maximal A4 (two-element interval)
    for (const auto& rec : a5.subgroups())
        if (rec.order == 12) CHECK(a5.moebius()[rec.id] == -1);
}

TEST_CASE("moebius support lies inside the meet-closure of maximals") {
    for (const auto* spec : {"sym:4", "alt:5", "dihedral:6"}) {
        const SubgroupLattice lattice(catalog_group(spec));
        std::unordered_set<DynBitset, DynBitsetHash> closure;
        std::vector<DynBitset> work;
        DynBitset full = lattice.subgroups()[lattice.top_id()].members;
        closure.insert(full);
        work.push_back(full);
        while (!work.empty()) {
            const DynBitset current = work.back();
            work.pop_back();
            for (const auto m : lattice.maximal_ids()) {
                DynBitset meet = current & lattice.subgroups()[m].members;
                if (closure.insert(meet).second) work.push_back(meet);
            }
        }
        const auto& mu = lattice.moebius();
        for (const auto& rec : lattice.subgroups())
            if (mu[rec.id] != 0) CHECK(closure.contains(rec.members));
    }
}

TEST_CASE("total moebius sum vanishes for nontrivial groups") {
    for (const auto* spec : {"cyclic:2", "cyclic:6", "sym:3", "sym:4", "alt:5"}) {
        const SubgroupLattice lattice(catalog_group(spec));
        std::int64_t total = 0;
        for (const auto v : lattice.moebius()) total += v;
        CHECK(total == 0);
    }
}

TEST_CASE("frattini subgroups") {
    const SubgroupLattice c4(catalog_group("cyclic:4"));
    CHECK(c4.subgroups()[c4.frattini_id()].order == 2);

    const SubgroupLattice s4(catalog_group("sym:4"));
    CHECK(s4.frattini_id() == s4.bottom_id());

    const SubgroupLattice q8(catalog_group(kQ8));
    const auto frat = q8.frattini_id();
    CHECK(q8.subgroups()[frat].order == 2);
    CHECK(frat == q8.centralizer_id(q8.top_id())); // the center
}

TEST_CASE("frattini equals the non-generator set") {
    // x is a non-generator iff <H, x> = G forces H = G, checked over all
    // lattice subgroups H.
    for (const auto* spec :
         {"cyclic:4", "cyclic:6", "dihedral:4", "sym:3", kQ8, "alt:4", "sym:4"}) {
        const SubgroupLattice lattice(catalog_group(spec));
        const auto& u = lattice.universe();
        DynBitset nongen(u.size());
        for (std::uint32_t x = 0; x < u.size(); ++x) {
            bool non_generator = true;
            for (const auto& rec : lattice.subgroups()) {
                if (rec.id == lattice.top_id()) continue;
                auto gens = rec.generators;
                gens.push_back(x);
                if (u.close_subgroup(gens).count() == u.size()) {
                    non_generator = false;
                    break;
                }
            }
            if (non_generator) nongen.set(x);
        }
        CHECK(lattice.subgroups()[lattice.frattini_id()].members == nongen);
    }
}

TEST_CASE("normal subgroups and socle") {
    const SubgroupLattice s4(catalog_group("sym:4"));
    CHECK(s4.normal_ids().size() == 4); // 1, V4, A4, S4
    const auto socle = s4.socle_id();
    CHECK(s4.subgroups()[socle].order == 4);

    const SubgroupLattice a5(catalog_group("alt:5"));
    CHECK(a5.socle_id() == a5.top_id());

    const SubgroupLattice s5(catalog_group("sym:5"));
    CHECK(s5.subgroups()[s5.socle_id()].order == 60);
}

TEST_CASE("quotients act faithfully") {
    const SubgroupLattice s4(catalog_group("sym:4"));
    const auto socle = s4.socle_id(); // V4
    const auto q = make_quotient(s4.universe(), s4.subgroups()[socle].members);
    CHECK(q.index == 6);
    CHECK(q.group.order() == 6);
    // the image of A4 is the C3 inside S3
    for (const auto& rec : s4.subgroups())
        if (rec.order == 12) {
            std::unordered_set<Permutation, PermHash> images;
            rec.members.for_each([&](std::size_t x) {
                images.insert(q.image_of(s4.universe(), static_cast<std::uint32_t>(x)));
            });
            CHECK(images.size() == 3);
        }
}

TEST_CASE("chief series of Sym(4) is the unique refinement") {
    const SubgroupLattice s4(catalog_group("sym:4"));
    for (const std::uint64_t seed : {0ull, 1ull, 7ull}) {
        const auto series = chief_series(s4, seed);
        REQUIRE(series.size() == 3);
        CHECK(series[0].abelian);
        CHECK(series[0].simple.param == 2);
        CHECK(series[0].rank == 1);
        CHECK(series[1].simple.param == 3);
        CHECK(series[1].rank == 1);
        CHECK(series[2].simple.param == 2);
        CHECK(series[2].rank == 2); // V4 = C2^2
    }
}

TEST_CASE("chief series of a simple group is one step") {
    const SubgroupLattice a5(catalog_group("alt:5"));
    const auto series = chief_series(a5);
    REQUIRE(series.size() == 1);
    CHECK_FALSE(series[0].abelian);
    CHECK(series[0].simple.name == "Alt(5)");
    CHECK(series[0].rank == 1);
}

TEST_CASE("chief series of C6 depends on the seed only in order") {
    const SubgroupLattice c6(catalog_group("cyclic:6"));
    std::set<std::vector<std::uint64_t>> seen;
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const auto series = chief_series(c6, seed);
        REQUIRE(series.size() == 2);
        seen.insert({series[0].simple.param, series[1].simple.param});
        // multiset of factors fixed
        std::multiset<std::uint64_t> factors{series[0].simple.param, series[1].simple.param};
        CHECK(factors == std::multiset<std::uint64_t>{2, 3});
    }
    CHECK(seen.size() == 2); // both orders show up across seeds
}

TEST_CASE("chief factor orders are prime powers or simple-order powers") {
    for (const auto* spec : {"sym:4", "cyclic:12", "dihedral:6", "sym:5", "psl2:5"}) {
        const SubgroupLattice lattice(catalog_group(spec));
        for (const auto& step : chief_series(lattice, 3)) {
            CHECK(step.rank >= 1);
            const Integer expected = integer_pow(step.simple.order, step.rank);
            const Integer actual = Integer(lattice.subgroups()[step.upper_id].order) /
                                   Integer(lattice.subgroups()[step.lower_id].order);
            CHECK(expected == actual);
        }
    }
}

TEST_CASE("identify_simple names and collisions") {
    CHECK(identify_simple(Integer(60))->name == "Alt(5)");
    CHECK(identify_simple(Integer(168))->name == "PSL(2,7)");
    CHECK(identify_simple(Integer(660))->name == "PSL(2,11)");
    CHECK(identify_simple(Integer(360))->name == "Alt(6)");
    CHECK(identify_simple(Integer(7))->name == "C7");
    CHECK(identify_simple(Integer(2))->name == "C2");
    CHECK_FALSE(identify_simple(Integer(100)).has_value());
    CHECK_FALSE(identify_simple(Integer(1)).has_value());

    CHECK_THROWS_AS(identify_simple(Integer(20160)), std::invalid_argument);
    // Alt(8) carries its 2-power catalog name
    CHECK(identify_simple(Integer(20160), {1, 2, 3, 4, 5, 6, 7, 15})->name == "Alt(2^3)");
    CHECK(identify_simple(Integer(20160), {1, 2, 3, 4, 5, 7})->name == "PSL(3,4)");
    CHECK(identify_simple(Integer(20160), {7})->name == "PSL(3,4)");
}

TEST_CASE("element order spectrum of Alt(8) backs the tiebreak data") {
    // Needs a raised cap; 20160 elements is still quick to enumerate.
    const auto g = catalog_group("alt:8", 25'000);
    std::set<std::uint64_t> orders;
    for (const auto& e : g.elements()) orders.insert(e.order());
    CHECK(orders == std::set<std::uint64_t>{1, 2, 3, 4, 5, 6, 7, 15});
}

TEST_CASE("lattice construction respects the element cap") {
    CHECK_THROWS_AS(SubgroupLattice(catalog_group("sym:5", 100)), CapExceeded);
}

TEST_SUITE_END();
