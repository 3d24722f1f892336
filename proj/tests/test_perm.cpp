#include "mzeta/perm.hpp"

#include <doctest.h>

#include <random>

using namespace mz;

TEST_SUITE_BEGIN("perm");

TEST_CASE("identity and composition conventions") {
    const auto id = Permutation::identity(5);
    CHECK(id.is_identity());
    const auto a = parse_cycles("(1 2 3)", 5);
    const auto b = parse_cycles("(3 4)", 5);
    // Left-to-right: (a*b)(x) = b(a(x)); point 2 (0-based) goes 2 -> 0 under
    // a? no: a maps 0->1, 1->2, 2->0.  Then b fixes 0.
    CHECK((a * b).apply(2) == 0);
    CHECK((a * b).apply(1) == 3); // 1 -> 2 under a, 2 -> 3 under b
    CHECK((a * id) == a);
    CHECK((id * a) == a);
}

TEST_CASE("inverse and conjugation") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Point> im(8);
        for (Point i = 0; i < 8; ++i) im[i] = i;
        std::shuffle(im.begin(), im.end(), rng);
        const Permutation p(std::move(im));
        CHECK((p * p.inverse()).is_identity());
        CHECK((p.inverse() * p).is_identity());

        std::vector<Point> im2(8);
        for (Point i = 0; i < 8; ++i) im2[i] = i;
        std::shuffle(im2.begin(), im2.end(), rng);
        const Permutation g(std::move(im2));
        CHECK(p.conjugated_by(g) == g.inverse() * p * g);
    }
}

TEST_CASE("orders from cycle type") {
    CHECK(Permutation::identity(4).order() == 1);
    CHECK(parse_cycles("(1 2)", 4).order() == 2);
    CHECK(parse_cycles("(1 2 3)(4 5)", 5).order() == 6);
    CHECK(parse_cycles("(1 2 3 4 5)(6 7 8)", 8).order() == 15);
}

TEST_CASE("cycle notation round trip") {
    const auto p = parse_cycles("(1 2 3)(4 5)", 6);
    CHECK(p.to_cycle_string() == "(1 2 3)(4 5)");
    CHECK(parse_cycles(p.to_cycle_string(), 6) == p);
    CHECK(Permutation::identity(3).to_cycle_string() == "()");
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_cycles("(1 2 2)", 3), ParseError);
    CHECK_THROWS_AS(parse_cycles("(1 2", 3), ParseError);
    CHECK_THROWS_AS(parse_cycles("(0 1)", 3), ParseError);
    CHECK_THROWS_AS(parse_cycles("(1 4)", 3), ParseError);
    CHECK_THROWS_AS(parse_cycles("", 3), ParseError);
    CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
}

TEST_SUITE_END();
