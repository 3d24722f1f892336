#pragma once

#include "mzeta/lattice.hpp"
#include "mzeta/rational.hpp"
#include "mzeta/simple_groups.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace mz {

bool is_prime(std::uint64_t n);

/// C(n,k) mod p by Lucas: the digitwise product of base-p digit binomials.
/// Throws std::invalid_argument if p is not prime.
std::uint64_t lucas_binom_mod(std::uint64_t n, std::uint64_t k, std::uint64_t p);

/// v_p(n!), computed by Legendre's digit-sum formula (n - S_p(n))/(p-1) and
/// by the floor sum over n/p^i; the two must agree and the call asserts it.
std::uint64_t vp_factorial(std::uint64_t n, std::uint64_t p);

/// Index of the imprimitive wreath-type subgroup: (ab)! / ((a!)^b * b!).
Integer w_imprimitive(std::uint64_t a, std::uint64_t b);

/// v_p of w_imprimitive(a, b), via valuations of the factorials; avoids the
/// big quotient when only prime data is wanted.
std::int64_t w_imprimitive_valuation(std::uint64_t a, std::uint64_t b, std::uint64_t p);

/// Minimal odd useful index of an almost simple group with socle Alt(2^t):
/// the imprimitive index (2^t)!/((2^(t-1))!^2 * 2) for t > 3, and the
/// exceptional 15 = |Alt(8) : 2^3:PSL(3,2)| at t = 3.  Throws for t < 3.
Integer w_alt_2t(unsigned t);

/// Brute-force minimizer of w(a,b) over factorizations m = a*b with
/// a, b >= 2, for composite m >= 8.  Ties go to the smaller b.  Asserts the
/// winner is the smallest prime divisor of m and returns (b, w).
std::pair<std::uint64_t, Integer> maroti_argmin(std::uint64_t m);

enum class OmegaSource { lattice_computed, family_formula, catalog_table };

std::string omega_source_name(OmegaSource s);

/// Odd useful indices of an almost simple group: the odd m > 1 admitting a
/// supplement of the socle of index m such that every such supplement is
/// maximal.  omega holds the known members; w = min(omega) when nonempty.
struct UsefulIndexProfile {
    std::string group_name;
    std::set<Integer> omega;
    bool has_w = false;
    Integer w;
    OmegaSource source = OmegaSource::lattice_computed;
    std::set<std::uint64_t> signature_primes; // prime factors of the designated index
};

/// Exact omega set by scanning all supplements of the socle in the lattice
/// and checking their maximality.  Throws std::invalid_argument if X is not
/// almost simple.
UsefulIndexProfile omega_set_lattice(const SubgroupLattice& x_lattice);

/// Family value of the designated odd useful index:
///   Alt(p):    w = p (the unique index-p maximal subgroup Alt(p-1));
///   Alt(2^t):  w = w_alt_2t(t);
///   PSL(2,p):  useful indices p(p-1)/2 and p(p+1)/2; the odd one of the two
///              is designated (exactly one is odd);
///   sporadic:  signature primes from the static catalog; the index value
///              itself is not tabulated here.
/// Throws std::invalid_argument for unsupported families.
UsefulIndexProfile w_of(const SimpleGroupDescriptor& desc);

} // namespace mz
