#include "mzeta/simple_groups.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mz {

std::string family_name(SimpleFamily family) {
    switch (family) {
    case SimpleFamily::cyclic: return "cyclic";
    case SimpleFamily::alt_prime: return "alt_prime";
    case SimpleFamily::alt_2power: return "alt_2power";
    case SimpleFamily::alt_other: return "alt_other";
    case SimpleFamily::psl2: return "psl2";
    case SimpleFamily::psl3_4: return "psl3_4";
    case SimpleFamily::sporadic: return "sporadic";
    }
    return "?";
}

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_power_of_two(std::uint64_t n) { return n >= 2 && (n & (n - 1)) == 0; }

unsigned log2_exact(std::uint64_t n) {
    unsigned t = 0;
    while (n > 1) {
        n >>= 1;
        ++t;
    }
    return t;
}

} // namespace

SimpleGroupDescriptor cyclic_descriptor(std::uint64_t p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("cyclic simple groups have prime order");
    return {"C" + std::to_string(p), SimpleFamily::cyclic, p, Integer(p), {}, 0, "formula"};
}

SimpleGroupDescriptor alternating_descriptor(std::uint64_t n) {
    if (n < 5) throw std::invalid_argument("Alt(n) is simple only for n >= 5");
    SimpleFamily fam = SimpleFamily::alt_other;
    std::uint64_t param = n;
    std::string name = "Alt(" + std::to_string(n) + ")";
    if (is_prime_u64(n)) {
        fam = SimpleFamily::alt_prime;
    } else if (is_power_of_two(n)) {
        fam = SimpleFamily::alt_2power;
        param = log2_exact(n);
        name = "Alt(2^" + std::to_string(param) + ")";
    }
    return {std::move(name), fam, param, factorial(static_cast<unsigned>(n)) / 2, {}, 0,
            "formula"};
}

SimpleGroupDescriptor psl2_descriptor(std::uint64_t p) {
    if (p < 5 || !is_prime_u64(p))
        throw std::invalid_argument("PSL(2,p) requires a prime p >= 5");
    const Integer order = Integer(p) * (Integer(p) * p - 1) / 2;
    return {"PSL(2," + std::to_string(p) + ")", SimpleFamily::psl2, p, order, {}, 0, "formula"};
}

SimpleGroupDescriptor psl3_4_descriptor() {
    return {"PSL(3,4)", SimpleFamily::psl3_4, 4, Integer(20160), {}, 0, "formula"};
}

std::optional<SimpleGroupDescriptor> identify_simple(
    const Integer& order, const std::vector<std::uint64_t>& element_orders) {
    if (order <= 1) return std::nullopt;

    // Order collision Alt(8) vs PSL(3,4): their element-order spectra differ,
    // {1,2,3,4,5,6,7,15} vs {1,2,3,4,5,7}; the maximum (15 vs 7) decides.
    if (order == 20160) {
        if (element_orders.empty())
            throw std::invalid_argument(
                "order 20160 is ambiguous (Alt(8) vs PSL(3,4)); element-order witnesses required");
        const std::uint64_t max_order =
            *std::max_element(element_orders.begin(), element_orders.end());
        if (max_order == 15) return alternating_descriptor(8);
        if (max_order == 7) return psl3_4_descriptor();
        return std::nullopt;
    }

    if (order <= UINT64_MAX) {
        const auto n = order.convert_to<std::uint64_t>();
        if (is_prime_u64(n)) return cyclic_descriptor(n);
    }

    // Alt(5) = PSL(2,5) at order 60 and PSL(2,7) = PSL(3,2) at order 168 are
    // single groups; the canonical names are Alt(5) and PSL(2,7).
    for (std::uint64_t n = 5; n <= 16; ++n)
        if (order == factorial(static_cast<unsigned>(n)) / 2) return alternating_descriptor(n);
    for (std::uint64_t p = 5; p <= 71; ++p) {
        if (!is_prime_u64(p)) continue;
        if (order == Integer(p) * (Integer(p) * p - 1) / 2) return psl2_descriptor(p);
    }
    return std::nullopt;
}

const std::vector<SporadicGroup>& sporadic_groups() {
    // Orders are the standard values; the signature prime is the prime of the
    // group's elimination row, determined by its minimal odd useful index in
    // the published companion computations.
    static const std::vector<SporadicGroup> table = {
        {"M11", "7920", 11},
        {"M12", "95040", 11},
        {"M22", "443520", 11},
        {"M23", "10200960", 23},
        {"M24", "244823040", 23},
        {"J1", "175560", 19},
        {"J2", "604800", 7},
        {"J3", "50232960", 19},
        {"J4", "86775571046077562880", 43},
        {"Co1", "4157776806543360000", 13},
        {"Co2", "42305421312000", 23},
        {"Co3", "495766656000", 23},
        {"Fi22", "64561751654400", 13},
        {"Fi23", "4089470473293004800", 23},
        {"Fi24'", "1255205709190661721292800", 29},
        {"HS", "44352000", 11},
        {"McL", "898128000", 11},
        {"He", "4030387200", 17},
        {"Ru", "145926144000", 29},
        {"Suz", "448345497600", 13},
        {"O'N", "460815505920", 31},
        {"HN", "273030912000000", 19},
        {"Ly", "51765179004000000", 67},
        {"Th", "90745943887872000", 19},
        {"BM", "4154781481226426191177580544000000", 47},
        {"M", "808017424794512875886459904961710757005754368000000000", 71},
    };
    return table;
}

SimpleGroupDescriptor sporadic_descriptor(const std::string& name) {
    for (const auto& s : sporadic_groups()) {
        if (name == s.name) {
            SimpleGroupDescriptor d{s.name,         SimpleFamily::sporadic, 0, Integer(s.order),
                                    {s.signature_prime}, s.signature_prime,
                                    "paper-table"};
            return d;
        }
    }
    throw std::invalid_argument("unknown sporadic group '" + name + "'");
}

} // namespace mz
