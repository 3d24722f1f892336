#include "mzeta/json_io.hpp"

#include <doctest.h>

#include <random>

using namespace mz;
using nlohmann::json;

TEST_SUITE_BEGIN("json");

TEST_CASE("series round trip through the wire format") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<std::uint64_t> index(1, 50);
    std::uniform_int_distribution<int> numer(-20, 20);
    std::uniform_int_distribution<int> denom(1, 12);
    for (int trial = 0; trial < 300; ++trial) {
        DirichletPoly f;
        for (int i = 0; i < trial % 6; ++i)
            f.add_coeff(index(rng), Rational(numer(rng)) / Rational(denom(rng)));
        CHECK(series_from_json(series_to_json(f)) == f);
    }
    // big coefficients survive as strings
    DirichletPoly big;
    big.add_coeff(2, Rational(Integer("123456789012345678901234567890")) / Rational(7));
    CHECK(series_from_json(series_to_json(big)) == big);
}

TEST_CASE("series json shape") {
    DirichletPoly f;
    f.add_coeff(6, Rational(-6));
    f.add_coeff(1, Rational(1));
    const json j = series_to_json(f);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);
    CHECK(j[0][0] == 1); // sorted by index
    CHECK(j[0][1] == "1");
    CHECK(j[0][2] == "1");
    CHECK(j[1][0] == 6);
    CHECK(j[1][1] == "-6");
}

TEST_CASE("series json rejects malformed input") {
    CHECK_THROWS_AS(series_from_json(json::object()), ParseError);
    CHECK_THROWS_AS(series_from_json(json::parse("[[1, \"1\"]]")), ParseError);
    CHECK_THROWS_AS(series_from_json(json::parse("[[1, \"1\", \"0\"]]")), ParseError);
}

TEST_CASE("lattice export carries the full structure") {
    const SubgroupLattice lattice(catalog_group("sym:3"));
    const json j = lattice_to_json(lattice);
    CHECK(j["degree"] == 3);
    CHECK(j["order"] == 6);
    CHECK(j["subgroups"].size() == 6); // 1, three C2, C3, S3
    CHECK(j["maximal"].size() == 4);
    CHECK(j["moebius"].size() == 6);
    // leq holds the proper inclusions: 1 below everything (5), each proper
    // subgroup below the top (4), so 9 pairs.
    CHECK(j["leq"].size() == 9);
    std::size_t order_sum = 0;
    for (const auto& sub : j["subgroups"])
        order_sum += sub["members"].size();
    CHECK(order_sum == 1 + 2 + 2 + 2 + 3 + 6);
}

TEST_CASE("factorization report format") {
    const SubgroupLattice lattice(catalog_group("sym:4"));
    const auto reports = chief_factorization(lattice, 0);
    const json j = factorization_to_json(lattice, reports, "Sym(4)", 2, kDefaultTupleCap);
    CHECK(j["group"] == "Sym(4)");
    CHECK(j["order"] == 24);
    CHECK(j["hall_check"]["t"] == 2);
    CHECK(j["hall_check"]["equal"] == true);
    CHECK(j["hall_check"]["lhs"] == "3/8");
    CHECK(j["factors"].size() == 3);
    for (const auto& f : j["factors"]) {
        CHECK(f["kind"] == "abelian");
        CHECK(f["frattini"] == false);
        CHECK(f.contains("c"));
    }
    CHECK(series_from_json(j["pg"]) == pg_series(lattice));
}

TEST_CASE("catalog json shape") {
    const auto j = catalog_to_json(full_catalog());
    REQUIRE(j.is_array());
    CHECK(j.size() == 66);
    for (const auto& row : j) {
        CHECK(row.contains("name"));
        CHECK(row.contains("family"));
        CHECK(row.contains("order"));
        CHECK(row.contains("signature_primes"));
        CHECK((row["source"] == "formula" || row["source"] == "paper-table"));
        if (row["family"] == "sporadic") CHECK(row["useful_odd_indices"].empty());
    }
}

TEST_SUITE_END();
