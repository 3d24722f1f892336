#include "mzeta/lattice.hpp"

#include "mzeta/errors.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <unordered_set>

namespace mz {

SubgroupLattice::SubgroupLattice(const PermGroup& group)
    : universe_(std::make_shared<GroupUniverse>(group)) {
    enumerate();
    finalize();
}

void SubgroupLattice::enumerate() {
    const GroupUniverse& U = *universe_;
    const auto gen_count = U.generator_indices().size();

    struct WorkRec {
        DynBitset members;
        std::vector<std::uint32_t> gens;
    };
    std::vector<WorkRec> recs;
    std::unordered_map<DynBitset, std::uint32_t, DynBitsetHash> seen;
    std::deque<std::uint32_t> pending; // one representative per conjugacy class

    auto conjugate_gens = [&](const std::vector<std::uint32_t>& gens, std::uint32_t g) {
        std::vector<std::uint32_t> out;
        out.reserve(gens.size());
        const std::uint32_t gi = U.inv(g);
        for (auto x : gens) out.push_back(U.mul(U.mul(gi, x), g));
        return out;
    };

    // Inserts a subgroup; when new, walks its whole conjugacy orbit (cheap,
    // no closures) and queues the representative for join processing.
    auto insert_with_orbit = [&](DynBitset bits, std::vector<std::uint32_t> gens) {
        if (seen.contains(bits)) return;
        const auto rep_id = static_cast<std::uint32_t>(recs.size());
        seen.emplace(bits, rep_id);
        recs.push_back(WorkRec{std::move(bits), std::move(gens)});
        pending.push_back(rep_id);

        std::vector<std::uint32_t> orbit{rep_id};
        for (std::size_t k = 0; k < orbit.size(); ++k) {
            for (std::size_t gi = 0; gi < gen_count; ++gi) {
                const std::uint32_t g = U.generator_indices()[gi];
                DynBitset cbits = U.conjugate_set(recs[orbit[k]].members, g);
                if (seen.contains(cbits)) continue;
                const auto cid = static_cast<std::uint32_t>(recs.size());
                seen.emplace(cbits, cid);
                recs.push_back(WorkRec{std::move(cbits), conjugate_gens(recs[orbit[k]].gens, g)});
                orbit.push_back(cid);
            }
        }
    };

    // Trivial subgroup, then every cyclic subgroup.
    {
        DynBitset triv(U.size());
        triv.set(0);
        insert_with_orbit(std::move(triv), {});
    }
    const auto cyclics = U.cyclic_subgroups();
    for (const auto& c : cyclics)
        insert_with_orbit(c.members, {c.generator});

    while (!pending.empty()) {
        const std::uint32_t h = pending.front();
        pending.pop_front();
        for (const auto& c : cyclics) {
            if (c.members.is_subset_of(recs[h].members)) continue;
            std::vector<std::uint32_t> gens = recs[h].gens;
            gens.push_back(c.generator);
            DynBitset joined = U.close_subgroup(gens);
            insert_with_orbit(std::move(joined), std::move(gens));
        }
    }

    subgroups_.reserve(recs.size());
    for (auto& r : recs) {
        SubgroupRecord rec;
        rec.members = std::move(r.members);
        rec.order = static_cast<std::uint32_t>(rec.members.count());
        rec.generators = std::move(r.gens);
        subgroups_.push_back(std::move(rec));
    }
}

void SubgroupLattice::finalize() {
    std::sort(subgroups_.begin(), subgroups_.end(),
              [](const SubgroupRecord& a, const SubgroupRecord& b) {
                  if (a.order != b.order) return a.order < b.order;
                  return a.members < b.members;
              });
    by_members_.reserve(subgroups_.size() * 2);
    for (std::uint32_t i = 0; i < subgroups_.size(); ++i) {
        subgroups_[i].id = i;
        by_members_.emplace(subgroups_[i].members, i);
    }

    const auto m = static_cast<std::uint32_t>(subgroups_.size());
    superset_rows_.assign(m, DynBitset(m));
    for (std::uint32_t a = 0; a < m; ++a) {
        superset_rows_[a].set(a);
        for (std::uint32_t b = a + 1; b < m; ++b) {
            if (subgroups_[b].order % subgroups_[a].order != 0) continue;
            if (subgroups_[a].order == subgroups_[b].order) continue;
            if (subgroups_[a].members.is_subset_of(subgroups_[b].members))
                superset_rows_[a].set(b);
        }
    }

    maximal_ids_.clear();
    for (std::uint32_t a = 0; a + 1 < m; ++a)
        if (superset_rows_[a].count() == 2) maximal_ids_.push_back(a);
}

std::optional<std::uint32_t> SubgroupLattice::find(const DynBitset& members) const {
    const auto it = by_members_.find(members);
    if (it == by_members_.end()) return std::nullopt;
    return it->second;
}

std::uint32_t SubgroupLattice::id_of(const DynBitset& members) const {
    const auto found = find(members);
    if (!found) throw std::logic_error("member set is not a subgroup of the lattice");
    return *found;
}

const std::vector<std::int64_t>& SubgroupLattice::moebius() const {
    if (!moebius_.empty() || subgroups_.empty()) return moebius_;
    const auto m = static_cast<std::uint32_t>(subgroups_.size());
    moebius_.assign(m, 0);
    moebius_[top_id()] = 1;
    // Ids are sorted by order, so a strict superset always has a larger id;
    // filling from the top downward is evaluation in the right order.
    for (std::uint32_t a = m - 1; a-- > 0;) {
        std::int64_t sum = 0;
        superset_rows_[a].for_each([&](std::size_t k) {
            if (k != a) sum += moebius_[k];
        });
        moebius_[a] = -sum;
    }
    return moebius_;
}

void SubgroupLattice::compute_normal_flags() const {
    if (!normal_flags_.empty()) return;
    const GroupUniverse& U = *universe_;
    normal_flags_.assign(subgroups_.size(), 0);
    normal_ids_.clear();
    for (std::uint32_t id = 0; id < subgroups_.size(); ++id) {
        bool normal = true;
        for (std::size_t gi = 0; gi < U.generator_indices().size() && normal; ++gi) {
            const auto& conj = U.conjugation_by_generator(gi);
            bool same = true;
            subgroups_[id].members.for_each([&](std::size_t x) {
                if (same && !subgroups_[id].members.test(conj[x])) same = false;
            });
            normal = same;
        }
        normal_flags_[id] = normal ? 1 : 0;
        if (normal) normal_ids_.push_back(id);
    }
}

bool SubgroupLattice::is_normal(std::uint32_t id) const {
    compute_normal_flags();
    return normal_flags_[id] != 0;
}

const std::vector<std::uint32_t>& SubgroupLattice::normal_ids() const {
    compute_normal_flags();
    return normal_ids_;
}

std::vector<std::uint32_t> SubgroupLattice::minimal_normal_over(std::uint32_t base_id) const {
    const auto& normals = normal_ids();
    std::vector<std::uint32_t> over;
    for (auto n : normals)
        if (n != base_id && leq(base_id, n)) over.push_back(n);
    std::vector<std::uint32_t> minimal;
    for (auto n : over) {
        bool ok = true;
        for (auto m2 : over)
            if (m2 != n && leq(m2, n)) {
                ok = false;
                break;
            }
        if (ok) minimal.push_back(n);
    }
    return minimal;
}

std::uint32_t SubgroupLattice::join(std::uint32_t a, std::uint32_t b) const {
    if (leq(a, b)) return b;
    if (leq(b, a)) return a;
    std::vector<std::uint32_t> gens = subgroups_[a].generators;
    gens.insert(gens.end(), subgroups_[b].generators.begin(), subgroups_[b].generators.end());
    return id_of(universe_->close_subgroup(gens));
}

std::uint32_t SubgroupLattice::meet(std::uint32_t a, std::uint32_t b) const {
    return id_of(subgroups_[a].members & subgroups_[b].members);
}

std::uint32_t SubgroupLattice::frattini_id() const {
    if (maximal_ids_.empty()) return top_id();
    DynBitset acc = subgroups_[maximal_ids_.front()].members;
    for (std::size_t i = 1; i < maximal_ids_.size(); ++i)
        acc &= subgroups_[maximal_ids_[i]].members;
    return id_of(acc);
}

std::uint32_t SubgroupLattice::socle_id() const {
    auto minimals = minimal_normal_over(bottom_id());
    std::uint32_t acc = bottom_id();
    for (auto n : minimals) acc = join(acc, n);
    return acc;
}

std::uint32_t SubgroupLattice::centralizer_id(std::uint32_t id) const {
    const GroupUniverse& U = *universe_;
    DynBitset cent(U.size());
    const auto& gens = subgroups_[id].generators;
    for (std::uint32_t x = 0; x < U.size(); ++x) {
        bool commutes = true;
        for (auto s : gens)
            if (U.mul(x, s) != U.mul(s, x)) {
                commutes = false;
                break;
            }
        if (commutes) cent.set(x);
    }
    return id_of(cent);
}

std::vector<std::uint64_t> SubgroupLattice::element_orders_of(std::uint32_t id) const {
    std::vector<std::uint64_t> orders;
    orders.reserve(subgroups_[id].order);
    subgroups_[id].members.for_each([&](std::size_t x) {
        orders.push_back(universe_->element_order(static_cast<std::uint32_t>(x)));
    });
    return orders;
}

bool SubgroupLattice::subgroup_is_abelian(std::uint32_t id) const {
    const auto members = subgroups_[id].members.to_indices();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (universe_->mul(members[i], members[j]) != universe_->mul(members[j], members[i]))
                return false;
    return true;
}

void identify_chief_factor(const SubgroupLattice& lattice, std::uint32_t upper_id,
                           std::uint32_t lower_id, ChiefStep& out) {
    const GroupUniverse& U = lattice.universe();
    const auto& upper = lattice.subgroups()[upper_id];
    const auto& lower = lattice.subgroups()[lower_id];
    const std::uint64_t f = upper.order / lower.order;
    out.upper_id = upper_id;
    out.lower_id = lower_id;

    // Element orders and commutation checked in the section itself.  For a
    // trivial lower term the section is just the subgroup.
    std::vector<std::uint64_t> section_orders;
    bool abelian = true;
    if (lower.order == 1) {
        section_orders = lattice.element_orders_of(upper_id);
        abelian = lattice.subgroup_is_abelian(upper_id);
    } else {
        const Quotient q = make_quotient(U, lower.members);
        std::unordered_set<Permutation, PermHash> images;
        std::vector<Permutation> image_list;
        upper.members.for_each([&](std::size_t x) {
            auto img = q.image_of(U, static_cast<std::uint32_t>(x));
            if (images.insert(img).second) image_list.push_back(std::move(img));
        });
        section_orders.reserve(image_list.size());
        for (const auto& img : image_list) section_orders.push_back(img.order());
        for (std::size_t i = 0; i < image_list.size() && abelian; ++i)
            for (std::size_t j = i + 1; j < image_list.size(); ++j)
                if (image_list[i] * image_list[j] != image_list[j] * image_list[i]) {
                    abelian = false;
                    break;
                }
    }

    out.abelian = abelian;
    if (abelian) {
        // Chief factors are characteristically simple: abelian means
        // elementary abelian of order p^r.
        std::uint64_t p = 2;
        while (f % p != 0) ++p;
        std::uint32_t r = 0;
        std::uint64_t rest = f;
        while (rest > 1) {
            if (rest % p != 0) throw std::logic_error("abelian chief factor is not a p-group");
            rest /= p;
            ++r;
        }
        out.simple = cyclic_descriptor(p);
        out.rank = r;
        return;
    }

    // Nonabelian: f = |S|^r for a simple S.  Try each root; the simple-order
    // tables make the decomposition unique at this scale.
    for (std::uint32_t r = 1; (std::uint64_t{1} << r) <= f; ++r) {
        const auto m = static_cast<std::uint64_t>(std::llround(std::pow(double(f), 1.0 / r)));
        for (std::uint64_t cand = (m > 1 ? m - 1 : 1); cand <= m + 1; ++cand) {
            Integer power = integer_pow(Integer(cand), r);
            if (power != f) continue;
            std::optional<SimpleGroupDescriptor> desc;
            if (cand == 20160 && r == 1) {
                desc = identify_simple(Integer(cand), section_orders);
            } else if (cand == 20160) {
                throw std::invalid_argument(
                    "cannot disambiguate order-20160 components of a power factor");
            } else {
                desc = identify_simple(Integer(cand));
            }
            if (desc) {
                out.simple = *desc;
                out.rank = r;
                return;
            }
        }
    }
    throw std::invalid_argument("chief factor of order " + std::to_string(f) +
                                " is outside the recognized simple-group families");
}

std::vector<ChiefStep> chief_series(const SubgroupLattice& lattice, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<ChiefStep> ascending;
    std::uint32_t current = lattice.bottom_id();
    while (current != lattice.top_id()) {
        auto candidates = lattice.minimal_normal_over(current);
        if (candidates.empty())
            throw std::logic_error("no normal subgroup above a proper term of a chief series");
        std::sort(candidates.begin(), candidates.end());
        const auto pick =
            candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
        ChiefStep step;
        identify_chief_factor(lattice, pick, current, step);
        ascending.push_back(step);
        current = pick;
    }
    std::reverse(ascending.begin(), ascending.end());
    return ascending;
}

} // namespace mz
