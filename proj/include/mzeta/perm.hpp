#pragma once

#include "mzeta/errors.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace mz {

using Point = std::uint16_t;

inline constexpr std::size_t kMaxDegree = 65535;

/// A permutation of {0, ..., degree-1}, stored as its full image sequence.
/// Degrees stay small here (lattice work tops out around degree 10^4), so
/// dense storage beats cycle form: composition and hashing are linear scans.
///
/// Products act left to right: (a * b)(x) = b(a(x)).
class Permutation {
public:
    Permutation() = default;

    /// Identity on `degree` points.
    static Permutation identity(std::size_t degree);

    /// Takes ownership of an image table; throws if it is not a bijection.
    explicit Permutation(std::vector<Point> images);

    std::size_t degree() const noexcept { return images_.size(); }
    Point apply(Point p) const noexcept { return images_[p]; }
    const std::vector<Point>& images() const noexcept { return images_; }

    bool is_identity() const noexcept;

    Permutation inverse() const;
    friend Permutation operator*(const Permutation& a, const Permutation& b);

    /// Conjugate a^g = g^-1 * a * g.
    Permutation conjugated_by(const Permutation& g) const;

    /// Order as a group element (lcm of cycle lengths).  Throws on uint64
    /// overflow, which cannot happen for elements of the groups handled here
    /// (the order divides the group order).
    std::uint64_t order() const;

    std::vector<std::vector<Point>> cycles() const;

    /// Cycle notation with 1-based points, e.g. "(1 2 3)(4 5)"; "()" for the
    /// identity.  Fixed points are omitted.
    std::string to_cycle_string() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<Point> images_;
};

struct PermHash {
    std::size_t operator()(const Permutation& p) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (Point x : p.images()) {
            h ^= x;
            h *= 0x100000001b3ull;
        }
        return static_cast<std::size_t>(h);
    }
};

/// Parses one permutation in cycle notation with 1-based points, e.g.
/// "(1 2 3)(4 5)".  `degree` fixes the point range; points above it are
/// rejected.  Repeated points are rejected.
Permutation parse_cycles(const std::string& text, std::size_t degree);

/// Largest point mentioned in a cycle-notation string (1-based), 0 if none.
std::size_t max_point_in_cycles(const std::string& text);

} // namespace mz
