#pragma once

#include "mzeta/bitset.hpp"
#include "mzeta/group.hpp"

#include <unordered_map>
#include <vector>

namespace mz {

/// The fully enumerated element set of a small group, with elements addressed
/// by index.  Index 0 is always the identity (elements are sorted by image
/// table and the identity sorts first).  Everything downstream of lattice
/// enumeration works on these indices.
class GroupUniverse {
public:
    explicit GroupUniverse(const PermGroup& group);

    const PermGroup& group() const noexcept { return group_; }
    std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(elements_.size()); }
    const std::vector<Permutation>& elements() const noexcept { return elements_; }
    const Permutation& element(std::uint32_t i) const { return elements_[i]; }

    std::uint32_t index_of(const Permutation& p) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const noexcept { return inverse_[a]; }

    /// Indices of the group's own generators.
    const std::vector<std::uint32_t>& generator_indices() const noexcept { return gen_indices_; }

    /// Index map of conjugation by generator g: x -> g^-1 x g.  Cached.
    const std::vector<std::uint32_t>& conjugation_by_generator(std::size_t gen) const;

    /// Subgroup generated by the given element indices: member bitset plus
    /// members in ascending index order.  Plain Cayley-graph BFS from the
    /// identity.
    DynBitset close_subgroup(const std::vector<std::uint32_t>& gens,
                             std::vector<std::uint32_t>* members = nullptr) const;

    /// <x> for every x, deduplicated; each record is (bitset, generator).
    struct CyclicSubgroup {
        DynBitset members;
        std::uint32_t generator;
    };
    std::vector<CyclicSubgroup> cyclic_subgroups() const;

    /// Conjugate of a member set by (the element with index) g.
    DynBitset conjugate_set(const DynBitset& members, std::uint32_t g) const;

    std::uint64_t element_order(std::uint32_t i) const { return elements_[i].order(); }

private:
    PermGroup group_;
    std::vector<Permutation> elements_;
    std::unordered_map<Permutation, std::uint32_t, PermHash> index_;
    std::vector<std::uint32_t> inverse_;
    std::vector<std::uint32_t> gen_indices_;
    mutable std::vector<std::vector<std::uint32_t>> conj_cache_; // per generator
};

/// G/N realized concretely: the action of G on the right cosets of a normal
/// subgroup N, which is faithful for G/N.  coset_of maps element indices of
/// the parent universe onto quotient points, and the quotient group's
/// generators are the images of the parent's generators (same order).
struct Quotient {
    PermGroup group;
    std::vector<std::uint32_t> coset_of;
    std::vector<std::uint32_t> reps; // least element index of each coset
    std::uint32_t index;             // |G : N|

    /// Image of a parent element (by universe index) in the quotient.
    Permutation image_of(const GroupUniverse& parent, std::uint32_t elem) const;
};

/// Requires N normal in the universe's group (unchecked here; callers come
/// from the lattice where normality is established).
Quotient make_quotient(const GroupUniverse& universe, const DynBitset& normal_members);

} // namespace mz
