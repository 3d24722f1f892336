#pragma once

#include "mzeta/rational.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mz {

enum class SimpleFamily : std::uint8_t {
    cyclic,     // C_p, p prime
    alt_prime,  // Alt(p), p prime
    alt_2power, // Alt(2^t), t >= 3
    alt_other,  // Alt(n), n neither prime nor a 2-power
    psl2,       // PSL(2,p), p prime >= 5
    psl3_4,     // PSL(3,4)
    sporadic,
};

std::string family_name(SimpleFamily family);

/// One simple group as catalog data.  Identification fills name/family/param/
/// order; the elimination-ladder catalog additionally fills the signature
/// primes of the group's designated odd useful index.
struct SimpleGroupDescriptor {
    std::string name;
    SimpleFamily family;
    std::uint64_t param = 0; // p (cyclic/alt_prime/psl2), t (alt_2power), n (alt_other)
    Integer order;
    std::set<std::uint64_t> signature_primes;
    std::uint64_t elimination_prime = 0;
    std::string source; // "formula" or "paper-table"

    bool operator==(const SimpleGroupDescriptor& other) const { return name == other.name; }
};

/// Names the simple group of the given order within the supported families
/// (cyclic of prime order, Alt(n) for n <= 16, PSL(2,p) for primes
/// 5 <= p <= 71, PSL(3,4)).  The single desk-scale order collision, 20160,
/// is resolved by the maximum of the supplied element-order multiset
/// (15 -> Alt(8), 7 -> PSL(3,4)); that spectrum tiebreak is shipped as data.
/// Returns nullopt for unrecognized orders; throws std::invalid_argument on
/// a collision with no witnesses.
std::optional<SimpleGroupDescriptor> identify_simple(
    const Integer& order, const std::vector<std::uint64_t>& element_orders = {});

/// Descriptor builders used by the identification tables and the ladder
/// catalog.
SimpleGroupDescriptor cyclic_descriptor(std::uint64_t p);
SimpleGroupDescriptor alternating_descriptor(std::uint64_t n);
SimpleGroupDescriptor psl2_descriptor(std::uint64_t p);
SimpleGroupDescriptor psl3_4_descriptor();

struct SporadicGroup {
    const char* name;
    const char* order;            // decimal, some exceed 64 bits
    std::uint64_t signature_prime; // prime of its elimination row
};

/// The 26 sporadic simple groups.  Orders are standard; the signature primes
/// of their useful indices are imported from the published computations and
/// never derived here.
const std::vector<SporadicGroup>& sporadic_groups();

SimpleGroupDescriptor sporadic_descriptor(const std::string& name);

} // namespace mz
