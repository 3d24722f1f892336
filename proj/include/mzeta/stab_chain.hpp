#pragma once

#include "mzeta/perm.hpp"
#include "mzeta/rational.hpp"

#include <vector>

namespace mz {

/// Deterministic Schreier-Sims stabilizer chain.  Gives the group order and
/// membership tests without enumerating elements, and enumerates elements as
/// transversal products when asked.
class StabChain {
public:
    StabChain(std::size_t degree, const std::vector<Permutation>& generators);

    std::size_t degree() const noexcept { return degree_; }
    const Integer& order() const noexcept { return order_; }
    bool contains(const Permutation& g) const;

    /// All group elements, unsorted.  Intended for callers that have already
    /// checked the order against a cap.
    std::vector<Permutation> elements() const;

    /// Base points, strongest first.
    std::vector<Point> base() const;

private:
    struct Level {
        Point base_point;
        std::vector<Permutation> gens;      // generators of this level's group
        std::vector<std::int32_t> orbit_pos; // point -> index into orbit, or -1
        std::vector<Point> orbit;            // BFS order from base_point
        std::vector<Permutation> transversal; // u with base_point^u = orbit[k]
    };

    std::size_t degree_;
    std::vector<Level> levels_;
    Integer order_;

    void recompute_orbit(std::size_t li);
    void add_level(Point base_point);
    // Sifts g through levels [from, end); returns the residue.
    Permutation sift_from(std::size_t from, Permutation g) const;
    void complete_level(std::size_t li);
    void enumerate(std::size_t li, const Permutation& suffix,
                   std::vector<Permutation>& out) const;
};

} // namespace mz
