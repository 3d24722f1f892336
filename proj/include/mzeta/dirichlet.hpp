#pragma once

#include "mzeta/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

namespace mz {

/// A finite Dirichlet series sum a_n / n^s with exact rational coefficients.
/// Only nonzero coefficients are stored; equality is exact and
/// coefficient-wise.  Multiplication convolves along index products, so the
/// ring is the usual one for these series.
class DirichletPoly {
public:
    DirichletPoly() = default;

    static DirichletPoly one();

    /// Single term a / n^s.
    static DirichletPoly term(std::uint64_t n, Rational a);

    const std::map<std::uint64_t, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coeff(std::uint64_t n) const;
    void set_coeff(std::uint64_t n, const Rational& a);
    void add_coeff(std::uint64_t n, const Rational& a);

    std::set<std::uint64_t> support() const;

    bool operator==(const DirichletPoly&) const = default;

    friend DirichletPoly operator+(const DirichletPoly& f, const DirichletPoly& g);
    friend DirichletPoly operator-(const DirichletPoly& f, const DirichletPoly& g);
    friend DirichletPoly operator*(const DirichletPoly& f, const DirichletPoly& g);

    /// Deletes every term whose index is divisible by a prime in pi.
    DirichletPoly pi_part(const std::set<std::uint64_t>& pi) const;

    /// The substitution s -> r*s - r + 1: a term a/m^s becomes
    /// (a * m^(r-1)) / (m^r)^s.  A ring homomorphism for every r >= 1.
    DirichletPoly shift_transform(unsigned r) const;

    /// Exact value at an integer point t >= 1.
    Rational evaluate(unsigned t) const;

    /// Plain-text rendering like "1 - 5/5^s + 2/3 * 6^-s" (exact rationals).
    std::string to_text() const;
    /// LaTeX rendering of sum a_n / n^s.
    std::string to_latex() const;

private:
    std::map<std::uint64_t, Rational> terms_;
};

/// Long division in the index-multiplicative ring, smallest index first.
/// Succeeds iff the remainder vanishes while the quotient support stays
/// within index_cap; returns nullopt when no finite quotient exists within
/// the cap.  Throws std::invalid_argument when g has no constant term
/// (coefficient at index 1), since division is undefined there.
std::optional<DirichletPoly> try_divide(const DirichletPoly& f, const DirichletPoly& g,
                                        std::uint64_t index_cap);

/// Primes dividing at least one support index with nonzero coefficient: the
/// prime support of the series.
std::set<std::uint64_t> prime_support(const DirichletPoly& f);

} // namespace mz
