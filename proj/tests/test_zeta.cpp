#include "mzeta/zeta.hpp"

#include "mzeta/errors.hpp"

#include <doctest.h>

#include <map>

using namespace mz;

namespace {

const char* kQ8 = "gens:(1 3 2 4)(5 8 6 7);(1 5 2 6)(3 7 4 8)";

// SL(2,p) acting on the nonzero vectors of F_p^2, generated by
// [[0,-1],[1,0]] and [[1,1],[0,1]].
PermGroup sl2(std::uint64_t p) {
    const auto point = [p](std::uint64_t x, std::uint64_t y) {
        return static_cast<Point>(x * p + y - 1);
    };
    const std::size_t degree = static_cast<std::size_t>(p * p - 1);
    std::vector<Point> s(degree), t(degree);
    for (std::uint64_t x = 0; x < p; ++x)
        for (std::uint64_t y = 0; y < p; ++y) {
            if (x == 0 && y == 0) continue;
            s[point(x, y)] = point((p - y) % p, x);
            t[point(x, y)] = point((x + y) % p, y);
        }
    return PermGroup(degree, {Permutation(std::move(s)), Permutation(std::move(t))});
}

DirichletPoly poly(std::initializer_list<std::pair<std::uint64_t, long>> terms) {
    DirichletPoly f;
    for (const auto& [n, a] : terms) f.add_coeff(n, Rational(a));
    return f;
}

// Literal tuple scan: no state compression, every tuple closed from scratch.
Rational probgen_literal(const GroupUniverse& u, unsigned t) {
    std::vector<std::uint32_t> tuple(t, 0);
    Integer generating = 0;
    while (true) {
        std::vector<std::uint32_t> gens(tuple.begin(), tuple.end());
        if (u.close_subgroup(gens).count() == u.size()) ++generating;
        std::size_t pos = 0;
        while (pos < t && ++tuple[pos] == u.size()) tuple[pos++] = 0;
        if (pos == t) break;
    }
    return Rational(generating) / Rational(integer_pow(Integer(u.size()), t));
}

std::multiset<std::map<std::uint64_t, std::string>> local_series_multiset(
    const std::vector<ChiefFactorReport>& reports) {
    std::multiset<std::map<std::uint64_t, std::string>> out;
    for (const auto& rep : reports) {
        std::map<std::uint64_t, std::string> poly;
        for (const auto& [n, a] : rep.local_series.terms())
            poly[n] = rational_to_string(a);
        out.insert(std::move(poly));
    }
    return out;
}

} // namespace

TEST_SUITE_BEGIN("zeta");

TEST_CASE("pg series of cyclic prime groups") {
    for (const std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        const SubgroupLattice lattice(catalog_group("cyclic:" + std::to_string(p)));
        CHECK(pg_series(lattice) == poly({{1, 1}, {p, -1}}));
    }
}

TEST_CASE("pg series of Sym(4) matches the factored form") {
    const SubgroupLattice lattice(catalog_group("sym:4"));
    const auto expected =
        poly({{1, 1}, {2, -1}}) * poly({{1, 1}, {3, -3}}) * poly({{1, 1}, {4, -4}});
    CHECK(pg_series(lattice) == expected);
}

TEST_CASE("pg series of Alt(5)") {
    const SubgroupLattice lattice(catalog_group("alt:5"));
    const auto pg = pg_series(lattice);
    CHECK(pg.support() == std::set<std::uint64_t>{1, 5, 6, 10, 20, 30, 60});
    CHECK(pg.coeff(1) == 1);
    CHECK(pg.coeff(5) < 0);
    CHECK(pg.coeff(6) < 0);
    CHECK(pg.coeff(10) < 0);
    // full classical polynomial
    CHECK(pg == poly({{1, 1}, {5, -5}, {6, -6}, {10, -10}, {20, 20}, {30, 60}, {60, -60}}));
}

TEST_CASE("probgen basics") {
    CHECK(probgen(GroupUniverse(catalog_group("cyclic:2")), 1) == Rational(1) / 2);
    CHECK(probgen(GroupUniverse(catalog_group("sym:4")), 2) == Rational(3) / 8);
    CHECK(probgen(GroupUniverse(catalog_group("alt:5")), 2) == Rational(19) / 30);
}

TEST_CASE("probgen matches a literal tuple scan") {
    const std::pair<const char*, unsigned> cases[] = {
        {"cyclic:6", 3}, {"sym:3", 2}, {"dihedral:4", 2}, {"alt:4", 2}};
    for (const auto& [spec, t] : cases) {
        const GroupUniverse u(catalog_group(spec));
        for (unsigned i = 1; i <= t; ++i) CHECK(probgen(u, i) == probgen_literal(u, i));
    }
}

TEST_CASE("probgen respects the tuple cap") {
    const GroupUniverse u(catalog_group("sym:5"));
    CHECK_THROWS_AS(probgen(u, 2, 100), CapExceeded);
}

TEST_CASE("Hall equality on the fixture set") {
    for (const auto* spec :
         {"cyclic:6", "sym:3", "dihedral:4", kQ8, "alt:4", "sym:4", "alt:5"}) {
        const SubgroupLattice lattice(catalog_group(spec));
        const auto pg = pg_series(lattice);
        for (const unsigned t : {1u, 2u})
            CHECK(pg.evaluate(t) == probgen(lattice.universe(), t));
    }
}

TEST_CASE("pxs degenerates to pg when X equals the socle") {
    for (const auto* spec : {"alt:5", "psl2:7"}) {
        const SubgroupLattice lattice(catalog_group(spec));
        CHECK(pxs_series(lattice, lattice.socle_id()) == pg_series(lattice));
    }
}

TEST_CASE("pxs of Sym(5) over Alt(5)") {
    const SubgroupLattice s5(catalog_group("sym:5"));
    const auto socle = s5.socle_id();
    const auto pxs = pxs_series(s5, socle);
    // supplements meet the odd half, so the index-2 term vanishes
    CHECK(pxs.coeff(1) == 1);
    CHECK(pxs.coeff(2) == 0);
    CHECK(pxs.coeff(5) == -5); // the five Sym(4) point stabilizers
    // every support index comes from a subgroup not inside Alt(5)
    const auto& soc = s5.subgroups()[socle];
    for (const auto n : pxs.support()) {
        bool witness = false;
        for (const auto& rec : s5.subgroups())
            if (s5.subgroup_index(rec.id) == n && !rec.members.is_subset_of(soc.members))
                witness = true;
        CHECK(witness);
    }
}

TEST_CASE("pxs rejects groups that are not almost simple") {
    const SubgroupLattice s4(catalog_group("sym:4"));
    CHECK_THROWS_AS(pxs_series(s4, s4.socle_id()), std::invalid_argument);
}

TEST_CASE("factorization of Sym(4): Gaschuetz counts 1, 3, 4") {
    const SubgroupLattice s4(catalog_group("sym:4"));
    const auto reports = chief_factorization(s4);
    REQUIRE(reports.size() == 3);
    std::multiset<std::uint64_t> counts;
    for (const auto& rep : reports) {
        CHECK_FALSE(rep.is_frattini);
        counts.insert(rep.complement_count);
        const std::uint64_t pr = static_cast<std::uint64_t>(
            s4.subgroups()[rep.step.upper_id].order / s4.subgroups()[rep.step.lower_id].order);
        CHECK(rep.local_series ==
              poly({{1, 1}, {pr, -static_cast<long>(rep.complement_count)}}));
    }
    CHECK(counts == std::multiset<std::uint64_t>{1, 3, 4});

    DirichletPoly product = DirichletPoly::one();
    for (const auto& rep : reports) product = product * rep.local_series;
    CHECK(product == pg_series(s4));
}

TEST_CASE("factorization of C4 has a Frattini bottom") {
    const SubgroupLattice c4(catalog_group("cyclic:4"));
    const auto reports = chief_factorization(c4);
    REQUIRE(reports.size() == 2);
    CHECK_FALSE(reports[0].is_frattini); // top factor C4/C2
    CHECK(reports[0].local_series == poly({{1, 1}, {2, -1}}));
    CHECK(reports[1].is_frattini); // bottom C2 inside Frat(C4)
    CHECK(reports[1].local_series == DirichletPoly::one());

    DirichletPoly product = DirichletPoly::one();
    for (const auto& rep : reports) product = product * rep.local_series;
    CHECK(product == pg_series(c4));
    // P_G = P_{G/Frat(G)}
    CHECK(pg_series(c4) == pg_series(SubgroupLattice(catalog_group("cyclic:2"))));
}

TEST_CASE("factorization of SL(2,5): Frattini center, Alt(5) on top") {
    const SubgroupLattice sl(sl2(5));
    REQUIRE(sl.universe().size() == 120);
    const auto reports = chief_factorization(sl);
    REQUIRE(reports.size() == 2);

    const SubgroupLattice a5(catalog_group("alt:5"));
    const auto pg_a5 = pg_series(a5);
    bool saw_center = false, saw_top = false;
    for (const auto& rep : reports) {
        if (rep.step.abelian) {
            CHECK(rep.is_frattini);
            CHECK(rep.local_series == DirichletPoly::one());
            saw_center = true;
        } else {
            CHECK(rep.step.simple.name == "Alt(5)");
            CHECK(rep.step.rank == 1);
            CHECK(rep.local_series == pg_a5);
            saw_top = true;
        }
    }
    CHECK(saw_center);
    CHECK(saw_top);

    DirichletPoly product = DirichletPoly::one();
    for (const auto& rep : reports) product = product * rep.local_series;
    CHECK(product == pg_series(sl));
    CHECK(pg_series(sl) == pg_a5); // Frattini quotient identity
}

TEST_CASE("factor multisets are independent of the seed") {
    for (const auto* spec : {"cyclic:6", "sym:4", "dihedral:6", "cyclic:12"}) {
        const SubgroupLattice lattice(catalog_group(spec));
        const auto base = local_series_multiset(chief_factorization(lattice, 0));
        const auto pg = pg_series(lattice);
        for (const std::uint64_t seed : {1ull, 2ull, 3ull}) {
            const auto reports = chief_factorization(lattice, seed);
            CHECK(local_series_multiset(reports) == base);
            DirichletPoly product = DirichletPoly::one();
            for (const auto& rep : reports) product = product * rep.local_series;
            CHECK(product == pg);
        }
    }
}

TEST_CASE("gaschutz_count pinned values") {
    const SubgroupLattice s4(catalog_group("sym:4"));
    // V4 complemented by the four point stabilizers
    std::uint32_t v4 = 0, a4 = 0;
    for (const auto& rec : s4.subgroups()) {
        if (rec.order == 4 && s4.is_normal(rec.id)) v4 = rec.id;
        if (rec.order == 12) a4 = rec.id;
    }
    CHECK(gaschutz_count(s4, v4, s4.bottom_id()) == 4);
    CHECK(gaschutz_count(s4, a4, v4) == 3);        // C3 in S3
    CHECK(gaschutz_count(s4, s4.top_id(), a4) == 1); // C2 on top

    const SubgroupLattice c4(catalog_group("cyclic:4"));
    std::uint32_t c2 = 0;
    for (const auto& rec : c4.subgroups())
        if (rec.order == 2) c2 = rec.id;
    CHECK(gaschutz_count(c4, c2, c4.bottom_id()) == 0); // Frattini factor

    const SubgroupLattice a5(catalog_group("alt:5"));
    CHECK_THROWS_AS(gaschutz_count(a5, a5.top_id(), a5.bottom_id()), std::invalid_argument);
}

TEST_CASE("pg series of Q8 equals its Frattini quotient's") {
    const SubgroupLattice q8(catalog_group(kQ8));
    const auto pg = pg_series(q8);
    CHECK(pg == poly({{1, 1}, {2, -3}, {4, 2}}));
    // G/Frat(Q8) = V4; same series
    const auto q = make_quotient(q8.universe(), q8.subgroups()[q8.frattini_id()].members);
    CHECK(pg == pg_series(SubgroupLattice(q.group)));
}

TEST_SUITE_END();
