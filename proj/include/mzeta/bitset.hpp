#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace mz {

/// Fixed-size bitset with runtime width.  Used for subgroup member sets,
/// poset rows and prime sieves; sized once, never grows.
class DynBitset {
public:
    DynBitset() = default;
    explicit DynBitset(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const noexcept { return nbits_; }

    bool test(std::size_t i) const noexcept {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool is_subset_of(const DynBitset& other) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    DynBitset& operator&=(const DynBitset& other) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }
    DynBitset& operator|=(const DynBitset& other) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    friend DynBitset operator&(DynBitset a, const DynBitset& b) { return a &= b; }
    friend DynBitset operator|(DynBitset a, const DynBitset& b) { return a |= b; }

    bool operator==(const DynBitset& other) const noexcept {
        return nbits_ == other.nbits_ && words_ == other.words_;
    }

    /// Lexicographic on the word array; any total order works for canonical
    /// sorting as long as it is deterministic.
    bool operator<(const DynBitset& other) const noexcept { return words_ < other.words_; }

    /// Calls f(i) for every set bit in ascending order.
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                const int b = std::countr_zero(w);
                f(wi * 64 + static_cast<std::size_t>(b));
                w &= w - 1;
            }
        }
    }

    std::vector<std::uint32_t> to_indices() const {
        std::vector<std::uint32_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
        return out;
    }

    std::size_t hash() const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ nbits_;
        for (auto w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

struct DynBitsetHash {
    std::size_t operator()(const DynBitset& b) const noexcept { return b.hash(); }
};

} // namespace mz
