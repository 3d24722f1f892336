#include "mzeta/dirichlet.hpp"

#include <stdexcept>

namespace mz {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("Dirichlet series index exceeds 64 bits");
    return r;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

} // namespace

DirichletPoly DirichletPoly::one() { return term(1, Rational(1)); }

DirichletPoly DirichletPoly::term(std::uint64_t n, Rational a) {
    DirichletPoly p;
    p.set_coeff(n, a);
    return p;
}

Rational DirichletPoly::coeff(std::uint64_t n) const {
    const auto it = terms_.find(n);
    return it == terms_.end() ? Rational(0) : it->second;
}

void DirichletPoly::set_coeff(std::uint64_t n, const Rational& a) {
    if (n == 0) throw std::invalid_argument("Dirichlet series indices start at 1");
    if (a == 0)
        terms_.erase(n);
    else
        terms_[n] = a;
}

void DirichletPoly::add_coeff(std::uint64_t n, const Rational& a) {
    if (n == 0) throw std::invalid_argument("Dirichlet series indices start at 1");
    const auto it = terms_.find(n);
    if (it == terms_.end()) {
        if (a != 0) terms_.emplace(n, a);
        return;
    }
    it->second += a;
    if (it->second == 0) terms_.erase(it);
}

std::set<std::uint64_t> DirichletPoly::support() const {
    std::set<std::uint64_t> s;
    for (const auto& [n, a] : terms_) s.insert(n);
    return s;
}

DirichletPoly operator+(const DirichletPoly& f, const DirichletPoly& g) {
    DirichletPoly out = f;
    for (const auto& [n, a] : g.terms_) out.add_coeff(n, a);
    return out;
}

DirichletPoly operator-(const DirichletPoly& f, const DirichletPoly& g) {
    DirichletPoly out = f;
    for (const auto& [n, a] : g.terms_) out.add_coeff(n, -a);
    return out;
}

DirichletPoly operator*(const DirichletPoly& f, const DirichletPoly& g) {
    DirichletPoly out;
    for (const auto& [n, a] : f.terms_)
        for (const auto& [m, b] : g.terms_) out.add_coeff(checked_mul(n, m), a * b);
    return out;
}

DirichletPoly DirichletPoly::pi_part(const std::set<std::uint64_t>& pi) const {
    DirichletPoly out;
    for (const auto& [n, a] : terms_) {
        bool keep = true;
        for (const auto p : pi)
            if (n % p == 0) {
                keep = false;
                break;
            }
        if (keep) out.terms_.emplace(n, a);
    }
    return out;
}

DirichletPoly DirichletPoly::shift_transform(unsigned r) const {
    if (r == 0) throw std::invalid_argument("shift parameter must be >= 1");
    if (r == 1) return *this;
    DirichletPoly out;
    for (const auto& [m, a] : terms_) {
        const Rational scaled = a * Rational(integer_pow(Integer(m), r - 1));
        out.add_coeff(checked_pow(m, r), scaled);
    }
    return out;
}

Rational DirichletPoly::evaluate(unsigned t) const {
    if (t == 0) throw std::invalid_argument("evaluation point must be >= 1");
    Rational sum(0);
    for (const auto& [n, a] : terms_) sum += a / Rational(integer_pow(Integer(n), t));
    return sum;
}

namespace {

// LaTeX for |a|/n^s; the caller emits the sign.
std::string latex_term(const Rational& a, std::uint64_t n) {
    const Rational mag = a < 0 ? Rational(-a) : a;
    const Integer num = numerator(mag);
    const Integer den = denominator(mag);
    if (n == 1) {
        if (den == 1) return num.str();
        return "\\frac{" + num.str() + "}{" + den.str() + "}";
    }
    std::string bot = std::to_string(n) + "^{s}";
    if (den != 1) bot = den.str() + " \\cdot " + bot;
    return "\\frac{" + num.str() + "}{" + bot + "}";
}

} // namespace

std::string DirichletPoly::to_text() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [n, a] : terms_) {
        const bool neg = a < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        const Rational mag = neg ? Rational(-a) : a;
        std::string c = rational_to_string(mag);
        if (n == 1)
            out += c;
        else
            out += (c == "1" ? "" : c + "*") + std::to_string(n) + "^-s";
    }
    return out;
}

std::string DirichletPoly::to_latex() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [n, a] : terms_) {
        const bool neg = a < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        out += latex_term(a, n);
    }
    return out;
}

std::optional<DirichletPoly> try_divide(const DirichletPoly& f, const DirichletPoly& g,
                                        std::uint64_t index_cap) {
    const Rational lead = g.coeff(1);
    if (lead == 0)
        throw std::invalid_argument("divisor has no coefficient at index 1; division undefined");
    DirichletPoly quotient;
    DirichletPoly remainder = f;
    while (!remainder.is_zero()) {
        const auto& [n, a] = *remainder.terms().begin();
        if (n > index_cap) return std::nullopt;
        const Rational q = a / lead;
        quotient.add_coeff(n, q);
        remainder = remainder - DirichletPoly::term(n, q) * g;
    }
    return quotient;
}

std::set<std::uint64_t> prime_support(const DirichletPoly& f) {
    std::set<std::uint64_t> primes;
    for (const auto& [n, a] : f.terms()) {
        std::uint64_t rest = n;
        for (std::uint64_t p = 2; p * p <= rest; ++p) {
            if (rest % p == 0) {
                primes.insert(p);
                while (rest % p == 0) rest /= p;
            }
        }
        if (rest > 1) primes.insert(rest);
    }
    return primes;
}

} // namespace mz
