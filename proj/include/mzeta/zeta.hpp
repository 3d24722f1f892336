#pragma once

#include "mzeta/dirichlet.hpp"
#include "mzeta/lattice.hpp"

#include <cstdint>
#include <vector>

namespace mz {

inline constexpr std::uint64_t kDefaultTupleCap = 100'000'000;

/// P_G(s) = sum a_n / n^s with a_n the Moebius-weighted count of index-n
/// subgroups.  The coefficient at 1 is always 1.
DirichletPoly pg_series(const SubgroupLattice& lattice);

/// Exact probability that t uniform random elements generate the group.
/// Counts generating tuples by exhaustive scan over the tuple space,
/// compressed by the subgroup generated so far (the closure of a tuple
/// depends only on that subgroup and the next element).  No Moebius values
/// are involved anywhere: this is the independent oracle for Hall's
/// interpretation of P_G(t).
Rational probgen(const GroupUniverse& universe, unsigned t,
                 std::uint64_t tuple_cap = kDefaultTupleCap);

/// P_{X,S}(s): Moebius-weighted count over supplements of the socle,
/// c_n = sum of mu_X(H) over |X:H| = n with X = S H.  Requires X almost
/// simple: socle_id nonabelian simple with trivial centralizer; throws
/// std::invalid_argument otherwise.
DirichletPoly pxs_series(const SubgroupLattice& x_lattice, std::uint32_t socle_id);

/// Checks the almost-simple shape used by pxs_series and the useful-index
/// scan: soc(X) nonabelian simple and C_X(soc X) = 1.
bool is_almost_simple(const SubgroupLattice& x_lattice, std::uint32_t socle_id);

struct ChiefFactorReport {
    std::size_t index_in_series = 0;
    ChiefStep step;                    // factor bounds and isomorphism type S^r
    bool is_frattini = false;          // factor lies in Frat(G/N_{i+1})
    std::uint64_t complement_count = 0; // abelian non-Frattini factors only
    DirichletPoly local_series;        // P_i; 1 for Frattini factors
};

/// Chief-series factorization: one report per factor, with the Gaschuetz
/// form 1 - c/(p^r)^s on abelian non-Frattini factors and the supplement-
/// restricted Moebius series of the monolithic quotient L = G/C_G(factor)
/// on nonabelian ones.  The product of the local series is P_G(s) for every
/// seed.
std::vector<ChiefFactorReport> chief_factorization(const SubgroupLattice& lattice,
                                                   std::uint64_t seed = 0);

/// Number of complements of the abelian chief factor upper/lower in
/// G/lower.  Throws std::invalid_argument on a nonabelian factor.
std::uint64_t gaschutz_count(const SubgroupLattice& lattice, std::uint32_t upper_id,
                             std::uint32_t lower_id);

/// Whether the section upper/lower lies inside Frat(G/lower), computed on
/// the ambient lattice as upper <= intersection of the maximal subgroups
/// containing lower.
bool factor_is_frattini(const SubgroupLattice& lattice, std::uint32_t upper_id,
                        std::uint32_t lower_id);

/// The monolithic quotient L = G/C_G(upper/lower) acting on cosets.
Quotient monolithic_quotient(const SubgroupLattice& lattice, std::uint32_t upper_id,
                             std::uint32_t lower_id);

} // namespace mz
