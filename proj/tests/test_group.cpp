#include "mzeta/errors.hpp"
#include "mzeta/group.hpp"
#include "mzeta/universe.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace mz;

TEST_SUITE_BEGIN("group");

TEST_CASE("catalog orders") {
    CHECK(catalog_group("cyclic:6").order() == 6);
    CHECK(catalog_group("cyclic:6").degree() == 6);
    CHECK(catalog_group("alt:5").order() == 60);
    CHECK(catalog_group("alt:5").degree() == 5);
    CHECK(catalog_group("sym:4").order() == 24);
    CHECK(catalog_group("dihedral:4").order() == 8);
    CHECK(catalog_group("alt:1").order() == 1);
    CHECK(catalog_group("alt:2").order() == 1);
    CHECK(catalog_group("sym:2").order() == 2);
    CHECK(catalog_group("alt:8").order() == 20160);
    // Large enough that enumeration would be hopeless; the chain is not.
    CHECK(catalog_group("sym:12").order() == Integer("479001600"));
}

TEST_CASE("psl2 construction") {
    // order p(p^2-1)/2, transitive on p+1 points, point stabilizer p(p-1)/2
    for (const std::uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
        const auto g = catalog_group("psl2:" + std::to_string(p));
        const Integer expected = Integer(p) * (Integer(p) * p - 1) / 2;
        CHECK(g.order() == expected);
        CHECK(g.degree() == p + 1);

        // Transitivity: orbit of 0 under the generators reaches every point.
        std::set<Point> orbit{0};
        std::vector<Point> work{0};
        while (!work.empty()) {
            const Point x = work.back();
            work.pop_back();
            for (const auto& gen : g.generators()) {
                const Point y = gen.apply(x);
                if (orbit.insert(y).second) work.push_back(y);
            }
        }
        CHECK(orbit.size() == g.degree());
        // Orbit-stabilizer gives the point stabilizer order.
        CHECK(g.order() / Integer(g.degree()) == Integer(p) * (p - 1) / 2);
    }
    CHECK(catalog_group("psl2:7").order() == 168);
    CHECK(catalog_group("psl2:7").degree() == 8);
}

TEST_CASE("psl2 element enumeration agrees with the chain") {
    const auto g = catalog_group("psl2:5");
    const auto elems = g.elements();
    CHECK(elems.size() == 60);
    std::set<Permutation> uniq(elems.begin(), elems.end());
    CHECK(uniq.size() == 60);
    for (const auto& e : elems) CHECK(g.contains(e));
}

TEST_CASE("elements respect the cap") {
    const auto g = catalog_group("sym:5", 100);
    CHECK(g.order() == 120); // order itself is fine
    CHECK_THROWS_AS(g.elements(), CapExceeded);
    CHECK(g.with_element_cap(200).elements().size() == 120);
}

TEST_CASE("closure under product and inverse") {
    const auto g = catalog_group("alt:5");
    const GroupUniverse u(g);
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::uint32_t> pick(0, u.size() - 1);
    for (int i = 0; i < 100; ++i) {
        const auto x = pick(rng), y = pick(rng);
        CHECK(u.mul(x, y) < u.size());      // throws if the product left the set
        CHECK(u.inv(x) < u.size());
        CHECK(u.mul(x, u.inv(x)) == 0);     // identity has index 0
    }
}

TEST_CASE("gens grammar") {
    const auto s3 = catalog_group("gens:(1 2 3);(1 2)");
    CHECK(s3.order() == 6);
    CHECK(s3.degree() == 3);
    const auto q8 = catalog_group("gens:(1 3 2 4)(5 8 6 7);(1 5 2 6)(3 7 4 8)");
    CHECK(q8.order() == 8);
    CHECK_THROWS_AS(catalog_group("gens:(1 2 2)"), ParseError);
    CHECK_THROWS_AS(catalog_group("psl2:4"), ParseError);
    CHECK_THROWS_AS(catalog_group("psl2:9"), ParseError);
    CHECK_THROWS_AS(catalog_group("wat:3"), ParseError);
    CHECK_THROWS_AS(catalog_group("alt"), ParseError);
}

TEST_CASE("element count equals order whenever the cap allows both") {
    for (const auto* spec : {"cyclic:12", "dihedral:7", "sym:4", "alt:6", "psl2:7"}) {
        const auto g = catalog_group(spec);
        CHECK(Integer(g.elements().size()) == g.order());
    }
}

TEST_SUITE_END();
