#pragma once

#include "mzeta/perm.hpp"
#include "mzeta/rational.hpp"
#include "mzeta/stab_chain.hpp"

#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace mz {

inline constexpr std::uint64_t kDefaultElementCap = 10'000;

/// A finite permutation group given by generators.  Immutable after
/// construction; the stabilizer chain is built lazily and shared between
/// copies.  Full element enumeration is allowed only while the order stays
/// within element_cap.
class PermGroup {
public:
    PermGroup(std::size_t degree, std::vector<Permutation> generators,
              std::uint64_t element_cap = kDefaultElementCap);

    std::size_t degree() const noexcept { return degree_; }
    const std::vector<Permutation>& generators() const noexcept { return generators_; }
    std::uint64_t element_cap() const noexcept { return element_cap_; }

    /// Same group, different enumeration budget.
    PermGroup with_element_cap(std::uint64_t cap) const;

    /// Exact order via the stabilizer chain; no enumeration, no cap.
    const Integer& order() const;

    /// Order as uint64; throws CapExceeded if it does not fit.
    std::uint64_t order_u64() const;

    bool contains(const Permutation& g) const;

    /// Complete element set, sorted by image table (so the identity comes
    /// first).  Throws CapExceeded when order() > element_cap.
    std::vector<Permutation> elements() const;

    const StabChain& chain() const;

private:
    std::size_t degree_;
    std::vector<Permutation> generators_;
    std::uint64_t element_cap_;

    struct Cache {
        std::mutex mutex;
        std::shared_ptr<const StabChain> chain;
    };
    std::shared_ptr<Cache> cache_;
};

/// Builds a group from the catalog grammar:
///   alt:<n> | sym:<n> | psl2:<p> | cyclic:<n> | dihedral:<n> | gens:<cycles>
/// where <cycles> is a semicolon-separated list of permutations in cycle
/// notation with 1-based points, e.g. "gens:(1 2 3)(4 5);(1 2)".
///
/// Natural actions: Alt/Sym on n points, PSL(2,p) by fractional-linear maps
/// on the projective line (p+1 points), cyclic and dihedral on n points.
PermGroup catalog_group(const std::string& spec,
                        std::uint64_t element_cap = kDefaultElementCap);

/// Human-readable display name for a catalog spec ("alt:5" -> "Alt(5)");
/// gens specs are returned verbatim.
std::string group_display_name(const std::string& spec);

} // namespace mz
