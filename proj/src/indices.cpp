#include "mzeta/indices.hpp"

#include "mzeta/zeta.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mz {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

namespace {

std::uint64_t binom_mod_small(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
    // n, k < p here, so the straight product formula with Fermat inverses works.
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        num = num * ((n - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    std::uint64_t inv = 1, e = p - 2, b = den;
    while (e) {
        if (e & 1) inv = inv * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return num * inv % p;
}

} // namespace

std::uint64_t lucas_binom_mod(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("Lucas' theorem needs a prime modulus");
    std::uint64_t result = 1;
    while (n || k) {
        const std::uint64_t nd = n % p, kd = k % p;
        if (kd > nd) return 0;
        result = result * binom_mod_small(nd, kd, p) % p;
        n /= p;
        k /= p;
    }
    return result;
}

std::uint64_t vp_factorial(std::uint64_t n, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("valuation base must be prime");
    // Digit-sum form (n - S_p(n)) / (p - 1).
    std::uint64_t digit_sum = 0;
    for (std::uint64_t m = n; m; m /= p) digit_sum += m % p;
    const std::uint64_t by_digits = (n - digit_sum) / (p - 1);
    // Floor-sum form.
    std::uint64_t by_floors = 0;
    for (std::uint64_t q = n / p; q; q /= p) by_floors += q;
    if (by_digits != by_floors)
        throw std::logic_error("Legendre valuation mismatch between digit and floor forms");
    return by_digits;
}

Integer w_imprimitive(std::uint64_t a, std::uint64_t b) {
    if (a < 2 || b < 2) throw std::invalid_argument("w(a,b) needs a, b >= 2");
    const std::uint64_t m = a * b;
    if (m > 1u << 20) throw std::invalid_argument("block product too large");
    Integer denom = integer_pow(factorial(static_cast<unsigned>(a)), static_cast<unsigned>(b));
    denom *= factorial(static_cast<unsigned>(b));
    return factorial(static_cast<unsigned>(m)) / denom;
}

std::int64_t w_imprimitive_valuation(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    const std::uint64_t m = a * b;
    return static_cast<std::int64_t>(vp_factorial(m, p)) -
           static_cast<std::int64_t>(b) * static_cast<std::int64_t>(vp_factorial(a, p)) -
           static_cast<std::int64_t>(vp_factorial(b, p));
}

Integer w_alt_2t(unsigned t) {
    if (t < 3) throw std::invalid_argument("Alt(2^t) needs t >= 3");
    if (t == 3) return Integer(15); // |Alt(8) : 2^3:PSL(3,2)| = 3*5
    return w_imprimitive(std::uint64_t{1} << (t - 1), 2);
}

std::pair<std::uint64_t, Integer> maroti_argmin(std::uint64_t m) {
    if (m < 8) throw std::invalid_argument("minimization hypothesis needs m >= 8");
    if (is_prime(m)) throw std::invalid_argument("m must be composite");
    std::uint64_t best_b = 0;
    Integer best_w;
    for (std::uint64_t b = 2; b <= m / 2; ++b) {
        if (m % b != 0) continue;
        const std::uint64_t a = m / b;
        if (a < 2) continue;
        Integer w = w_imprimitive(a, b);
        if (best_b == 0 || w < best_w || (w == best_w && b < best_b)) {
            best_b = b;
            best_w = w;
        }
    }
    std::uint64_t smallest_prime = 2;
    while (m % smallest_prime != 0) ++smallest_prime;
    if (best_b != smallest_prime)
        throw std::logic_error("minimizing block count is not the smallest prime divisor");
    return {best_b, best_w};
}

std::string omega_source_name(OmegaSource s) {
    switch (s) {
    case OmegaSource::lattice_computed: return "lattice-computed";
    case OmegaSource::family_formula: return "family-formula";
    case OmegaSource::catalog_table: return "catalog-table";
    }
    return "?";
}

namespace {

std::set<std::uint64_t> prime_factors_u64(std::uint64_t n) {
    std::set<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.insert(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.insert(n);
    return out;
}

// Prime factors of w_alt_2t(t) without factoring the big integer: a prime
// p <= 2^t divides iff its Legendre valuation in the quotient is positive.
std::set<std::uint64_t> signature_primes_alt_2t(unsigned t) {
    if (t == 3) return {3, 5};
    const std::uint64_t n = std::uint64_t{1} << t;
    std::set<std::uint64_t> out;
    for (std::uint64_t p = 2; p <= n; ++p) {
        if (!is_prime(p)) continue;
        if (w_imprimitive_valuation(n / 2, 2, p) > 0) out.insert(p);
    }
    return out;
}

} // namespace

UsefulIndexProfile omega_set_lattice(const SubgroupLattice& x_lattice) {
    const auto socle = x_lattice.socle_id();
    if (!is_almost_simple(x_lattice, socle))
        throw std::invalid_argument("useful-index scan requires an almost simple group");

    const auto& soc = x_lattice.subgroups()[socle];
    const std::uint64_t full = x_lattice.universe().size();

    // Group supplements by index; m qualifies iff every supplement of index m
    // is maximal.  Y = X itself (index 1) never qualifies.
    std::map<std::uint64_t, bool> all_maximal;
    std::vector<char> is_max(x_lattice.size(), 0);
    for (const auto id : x_lattice.maximal_ids()) is_max[id] = 1;
    for (const auto& rec : x_lattice.subgroups()) {
        const std::uint64_t inter = (soc.members & rec.members).count();
        if (static_cast<std::uint64_t>(soc.order) * rec.order != full * inter) continue;
        const std::uint64_t m = full / rec.order;
        if (m == 1 || m % 2 == 0) continue;
        auto [it, fresh] = all_maximal.emplace(m, true);
        if (!is_max[rec.id]) it->second = false;
    }

    UsefulIndexProfile profile;
    profile.source = OmegaSource::lattice_computed;
    for (const auto& [m, ok] : all_maximal)
        if (ok) profile.omega.insert(Integer(m));
    if (!profile.omega.empty()) {
        profile.has_w = true;
        profile.w = *profile.omega.begin();
        profile.signature_primes = prime_factors_u64(profile.w.convert_to<std::uint64_t>());
    }
    return profile;
}

UsefulIndexProfile w_of(const SimpleGroupDescriptor& desc) {
    UsefulIndexProfile profile;
    profile.group_name = desc.name;
    switch (desc.family) {
    case SimpleFamily::alt_prime: {
        profile.source = OmegaSource::family_formula;
        profile.omega.insert(Integer(desc.param));
        profile.has_w = true;
        profile.w = Integer(desc.param);
        profile.signature_primes = {desc.param};
        return profile;
    }
    case SimpleFamily::alt_2power: {
        profile.source = OmegaSource::family_formula;
        const Integer w = w_alt_2t(static_cast<unsigned>(desc.param));
        profile.omega.insert(w);
        profile.has_w = true;
        profile.w = w;
        profile.signature_primes = signature_primes_alt_2t(static_cast<unsigned>(desc.param));
        return profile;
    }
    case SimpleFamily::psl2: {
        profile.source = OmegaSource::family_formula;
        const std::uint64_t p = desc.param;
        const std::uint64_t lowered = p * (p - 1) / 2;
        const std::uint64_t raised = p * (p + 1) / 2;
        // Exactly one of p(p-1)/2, p(p+1)/2 is odd; that one is designated.
        const std::uint64_t odd = (lowered % 2 == 1) ? lowered : raised;
        profile.omega.insert(Integer(odd));
        profile.has_w = true;
        profile.w = Integer(odd);
        profile.signature_primes = prime_factors_u64(odd);
        return profile;
    }
    case SimpleFamily::sporadic: {
        profile.source = OmegaSource::catalog_table;
        // The published computations pin only the signature prime; the index
        // value itself is not reproduced here.
        profile.signature_primes = desc.signature_primes;
        return profile;
    }
    default:
        throw std::invalid_argument("no useful-index rule for family " +
                                    family_name(desc.family));
    }
}

} // namespace mz
