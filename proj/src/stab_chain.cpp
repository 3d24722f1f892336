#include "mzeta/stab_chain.hpp"

namespace mz {

StabChain::StabChain(std::size_t degree, const std::vector<Permutation>& generators)
    : degree_(degree) {
    for (const auto& g : generators) {
        if (g.degree() != degree_)
            throw std::invalid_argument("generator degree mismatch");
        if (g.is_identity()) continue;
        // Residues of earlier insertions already live in the chain; sift the
        // raw generator and place what survives.
        Permutation r = sift_from(0, g);
        if (r.is_identity()) continue;
        Point moved = 0;
        for (std::size_t i = 0; i < degree_; ++i)
            if (r.apply(static_cast<Point>(i)) != i) {
                moved = static_cast<Point>(i);
                break;
            }
        if (levels_.empty()) add_level(moved);
        levels_[0].gens.push_back(std::move(r));
        recompute_orbit(0);
        complete_level(0);
    }
    order_ = 1;
    for (const auto& lv : levels_) order_ *= static_cast<unsigned>(lv.orbit.size());
}

void StabChain::add_level(Point base_point) {
    Level lv;
    lv.base_point = base_point;
    lv.orbit_pos.assign(degree_, -1);
    lv.orbit = {base_point};
    lv.orbit_pos[base_point] = 0;
    lv.transversal = {Permutation::identity(degree_)};
    levels_.push_back(std::move(lv));
}

void StabChain::recompute_orbit(std::size_t li) {
    Level& lv = levels_[li];
    lv.orbit_pos.assign(degree_, -1);
    lv.orbit = {lv.base_point};
    lv.orbit_pos[lv.base_point] = 0;
    lv.transversal = {Permutation::identity(degree_)};
    for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
        for (const auto& g : lv.gens) {
            const Point img = g.apply(lv.orbit[k]);
            if (lv.orbit_pos[img] < 0) {
                lv.orbit_pos[img] = static_cast<std::int32_t>(lv.orbit.size());
                lv.orbit.push_back(img);
                lv.transversal.push_back(lv.transversal[k] * g);
            }
        }
    }
}

Permutation StabChain::sift_from(std::size_t from, Permutation g) const {
    for (std::size_t li = from; li < levels_.size(); ++li) {
        const Level& lv = levels_[li];
        const Point img = g.apply(lv.base_point);
        if (lv.orbit_pos[img] < 0) return g;
        g = g * lv.transversal[static_cast<std::size_t>(lv.orbit_pos[img])].inverse();
    }
    return g;
}

void StabChain::complete_level(std::size_t li) {
    // Schreier generators u_b * s * u_{b^s}^-1 must sift to the identity
    // through the lower chain; push any residue one level down and repair.
    // add_level() may reallocate levels_, so index on every access.
    for (std::size_t k = 0; k < levels_[li].orbit.size(); ++k) {
        for (std::size_t si = 0; si < levels_[li].gens.size(); ++si) {
            const Permutation s = levels_[li].gens[si];
            const Point img = s.apply(levels_[li].orbit[k]);
            const auto pos = static_cast<std::size_t>(levels_[li].orbit_pos[img]);
            Permutation schreier =
                levels_[li].transversal[k] * s * levels_[li].transversal[pos].inverse();
            if (schreier.is_identity()) continue;
            Permutation r = sift_from(li + 1, std::move(schreier));
            if (r.is_identity()) continue;
            if (li + 1 == levels_.size()) {
                Point moved = 0;
                for (std::size_t i = 0; i < degree_; ++i)
                    if (r.apply(static_cast<Point>(i)) != i) {
                        moved = static_cast<Point>(i);
                        break;
                    }
                add_level(moved);
            }
            levels_[li + 1].gens.push_back(std::move(r));
            recompute_orbit(li + 1);
            complete_level(li + 1);
        }
    }
}

bool StabChain::contains(const Permutation& g) const {
    if (g.degree() != degree_) return false;
    return sift_from(0, g).is_identity();
}

std::vector<Permutation> StabChain::elements() const {
    std::vector<Permutation> out;
    enumerate(0, Permutation::identity(degree_), out);
    return out;
}

void StabChain::enumerate(std::size_t li, const Permutation& suffix,
                          std::vector<Permutation>& out) const {
    if (li == levels_.size()) {
        out.push_back(suffix);
        return;
    }
    // Every element factors uniquely as h * u with h in the next stabilizer
    // and u a transversal representative of this level.
    for (const auto& u : levels_[li].transversal) enumerate(li + 1, u * suffix, out);
}

std::vector<Point> StabChain::base() const {
    std::vector<Point> b;
    b.reserve(levels_.size());
    for (const auto& lv : levels_) b.push_back(lv.base_point);
    return b;
}

} // namespace mz
