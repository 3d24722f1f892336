#pragma once

#include "mzeta/simple_groups.hpp"
#include "mzeta/universe.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

namespace mz {

struct SubgroupRecord {
    std::uint32_t id = 0;
    DynBitset members;                     // over ambient element indices
    std::uint32_t order = 0;               // popcount of members
    std::vector<std::uint32_t> generators; // element indices, small set
};

/// The complete subgroup lattice of a small group.
///
/// Enumeration is by cyclic extension: seed with every cyclic subgroup, then
/// repeatedly join known subgroups with cyclic ones until nothing new
/// appears.  Joins are evaluated once per conjugacy class and the orbit is
/// filled by conjugating member sets, which is only an internal speedup:
/// every subgroup still appears individually, identified by its member set.
class SubgroupLattice {
public:
    /// Builds the full lattice; throws CapExceeded if the order is above the
    /// group's element cap.
    explicit SubgroupLattice(const PermGroup& group);

    const GroupUniverse& universe() const noexcept { return *universe_; }
    const std::vector<SubgroupRecord>& subgroups() const noexcept { return subgroups_; }
    std::size_t size() const noexcept { return subgroups_.size(); }

    std::uint32_t top_id() const noexcept { return static_cast<std::uint32_t>(size() - 1); }
    std::uint32_t bottom_id() const noexcept { return 0; }

    bool leq(std::uint32_t a, std::uint32_t b) const { return superset_rows_[a].test(b); }
    /// Row bitset of all k with a <= k (reflexive).
    const DynBitset& supersets_of(std::uint32_t a) const { return superset_rows_[a]; }

    const std::vector<std::uint32_t>& maximal_ids() const noexcept { return maximal_ids_; }

    std::optional<std::uint32_t> find(const DynBitset& members) const;
    std::uint32_t id_of(const DynBitset& members) const;

    std::uint64_t subgroup_index(std::uint32_t id) const {
        return universe_->size() / subgroups_[id].order;
    }

    /// mu_G on the lattice: mu(G) = 1 and sum over [H, G] vanishes for H < G.
    const std::vector<std::int64_t>& moebius() const;

    bool is_normal(std::uint32_t id) const;
    const std::vector<std::uint32_t>& normal_ids() const;

    /// Minimal normal subgroups of G/base among lattice members, i.e. normal
    /// N > base with no normal strictly between.
    std::vector<std::uint32_t> minimal_normal_over(std::uint32_t base_id) const;

    std::uint32_t join(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t meet(std::uint32_t a, std::uint32_t b) const;

    /// Intersection of all maximal subgroups (G itself if there are none).
    std::uint32_t frattini_id() const;
    /// Join of all minimal normal subgroups.
    std::uint32_t socle_id() const;
    /// Centralizer of the subgroup with the given id.
    std::uint32_t centralizer_id(std::uint32_t id) const;

    std::vector<std::uint64_t> element_orders_of(std::uint32_t id) const;
    bool subgroup_is_abelian(std::uint32_t id) const;

private:
    std::shared_ptr<GroupUniverse> universe_;
    std::vector<SubgroupRecord> subgroups_;
    std::unordered_map<DynBitset, std::uint32_t, DynBitsetHash> by_members_;
    std::vector<DynBitset> superset_rows_;
    std::vector<std::uint32_t> maximal_ids_;
    mutable std::vector<std::int64_t> moebius_;
    mutable std::vector<char> normal_flags_;
    mutable std::vector<std::uint32_t> normal_ids_;

    void enumerate();
    void finalize();
    void compute_normal_flags() const;
};

/// One step of a chief series, descending: factor = upper/lower with both
/// normal in the ambient group and nothing normal strictly between.
struct ChiefStep {
    std::uint32_t upper_id = 0;
    std::uint32_t lower_id = 0;
    bool abelian = false;
    SimpleGroupDescriptor simple; // the composition factor S
    std::uint32_t rank = 1;       // r with factor isomorphic to S^r
};

/// Descending chief series G = N_0 > N_1 > ... > N_k = 1.  The seed picks
/// among the available minimal normal subgroups at every step, so different
/// seeds can produce different series; the factor multiset never changes.
std::vector<ChiefStep> chief_series(const SubgroupLattice& lattice, std::uint64_t seed = 0);

/// Identifies the isomorphism type S^r of the section upper/lower (both from
/// the lattice, lower normal in upper).
void identify_chief_factor(const SubgroupLattice& lattice, std::uint32_t upper_id,
                           std::uint32_t lower_id, ChiefStep& out);

} // namespace mz
