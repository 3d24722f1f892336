#include "mzeta/universe.hpp"

#include "mzeta/errors.hpp"

#include <algorithm>

namespace mz {

GroupUniverse::GroupUniverse(const PermGroup& group) : group_(group) {
    elements_ = group_.elements(); // cap-checked, sorted, identity first
    index_.reserve(elements_.size() * 2);
    for (std::uint32_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
    inverse_.resize(elements_.size());
    for (std::uint32_t i = 0; i < elements_.size(); ++i)
        inverse_[i] = index_.at(elements_[i].inverse());
    gen_indices_.reserve(group_.generators().size());
    for (const auto& g : group_.generators()) gen_indices_.push_back(index_.at(g));
}

std::uint32_t GroupUniverse::index_of(const Permutation& p) const {
    const auto it = index_.find(p);
    if (it == index_.end()) throw std::invalid_argument("permutation is not a group element");
    return it->second;
}

std::uint32_t GroupUniverse::mul(std::uint32_t a, std::uint32_t b) const {
    return index_.find(elements_[a] * elements_[b])->second;
}

const std::vector<std::uint32_t>& GroupUniverse::conjugation_by_generator(std::size_t gen) const {
    if (conj_cache_.empty()) conj_cache_.resize(gen_indices_.size());
    auto& table = conj_cache_[gen];
    if (table.empty() && size() > 0) {
        table.resize(size());
        const Permutation& g = elements_[gen_indices_[gen]];
        const Permutation ginv = g.inverse();
        for (std::uint32_t x = 0; x < size(); ++x)
            table[x] = index_.find(ginv * elements_[x] * g)->second;
    }
    return table;
}

DynBitset GroupUniverse::close_subgroup(const std::vector<std::uint32_t>& gens,
                                        std::vector<std::uint32_t>* members) const {
    DynBitset bits(size());
    bits.set(0);
    std::vector<std::uint32_t> list;
    list.push_back(0);
    // Right-multiplication BFS from the identity covers the generated
    // subgroup (finite, so no explicit inverses needed).
    for (std::size_t k = 0; k < list.size(); ++k) {
        for (const std::uint32_t g : gens) {
            const std::uint32_t p = mul(list[k], g);
            if (!bits.test(p)) {
                bits.set(p);
                list.push_back(p);
            }
        }
    }
    if (members) {
        std::sort(list.begin(), list.end());
        *members = std::move(list);
    }
    return bits;
}

std::vector<GroupUniverse::CyclicSubgroup> GroupUniverse::cyclic_subgroups() const {
    std::vector<CyclicSubgroup> out;
    std::unordered_map<DynBitset, std::size_t, DynBitsetHash> seen;
    for (std::uint32_t x = 0; x < size(); ++x) {
        DynBitset bits(size());
        std::uint32_t y = x;
        while (!bits.test(y)) {
            bits.set(y);
            y = mul(y, x);
        }
        if (!seen.contains(bits)) {
            seen.emplace(bits, out.size());
            out.push_back(CyclicSubgroup{std::move(bits), x});
        }
    }
    return out;
}

DynBitset GroupUniverse::conjugate_set(const DynBitset& members, std::uint32_t g) const {
    DynBitset out(size());
    const std::uint32_t gi = inv(g);
    members.for_each([&](std::size_t x) {
        out.set(mul(mul(gi, static_cast<std::uint32_t>(x)), g));
    });
    return out;
}

Permutation Quotient::image_of(const GroupUniverse& parent, std::uint32_t elem) const {
    std::vector<Point> im(index);
    for (std::uint32_t c = 0; c < index; ++c)
        im[c] = static_cast<Point>(coset_of[parent.mul(reps[c], elem)]);
    return Permutation(std::move(im));
}

Quotient make_quotient(const GroupUniverse& universe, const DynBitset& normal_members) {
    const std::uint32_t n = universe.size();
    std::vector<std::uint32_t> nlist = normal_members.to_indices();
    const auto nsize = static_cast<std::uint32_t>(nlist.size());
    const std::uint32_t index = n / nsize;

    // Scan elements in ascending index order; each unseen element opens the
    // next coset, so coset ids are deterministic.  For the trivial subgroup
    // this degenerates into the regular action.
    std::vector<std::uint32_t> coset_of(n, UINT32_MAX);
    std::vector<std::uint32_t> reps;
    reps.reserve(index);
    for (std::uint32_t x = 0; x < n; ++x) {
        if (coset_of[x] != UINT32_MAX) continue;
        const auto cid = static_cast<std::uint32_t>(reps.size());
        reps.push_back(x);
        for (const std::uint32_t m : nlist) coset_of[universe.mul(m, x)] = cid;
    }

    std::vector<Permutation> gens;
    gens.reserve(universe.generator_indices().size());
    for (const auto gidx : universe.generator_indices()) {
        std::vector<Point> im(index);
        for (std::uint32_t c = 0; c < index; ++c)
            im[c] = static_cast<Point>(coset_of[universe.mul(reps[c], gidx)]);
        gens.push_back(Permutation(std::move(im)));
    }
    return Quotient{PermGroup(index, std::move(gens), universe.group().element_cap()),
                    std::move(coset_of), std::move(reps), index};
}

} // namespace mz
