#include "mzeta/group.hpp"

#include "mzeta/errors.hpp"

#include <algorithm>
#include <charconv>

namespace mz {

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::uint64_t element_cap)
    : degree_(degree), generators_(std::move(generators)), element_cap_(element_cap),
      cache_(std::make_shared<Cache>()) {
    if (degree_ == 0 || degree_ > kMaxDegree)
        throw std::invalid_argument("group degree out of range");
    for (const auto& g : generators_)
        if (g.degree() != degree_)
            throw std::invalid_argument("generator degree mismatch");
}

PermGroup PermGroup::with_element_cap(std::uint64_t cap) const {
    PermGroup copy = *this;
    copy.element_cap_ = cap;
    return copy;
}

const StabChain& PermGroup::chain() const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (!cache_->chain)
        cache_->chain = std::make_shared<const StabChain>(degree_, generators_);
    return *cache_->chain;
}

const Integer& PermGroup::order() const { return chain().order(); }

std::uint64_t PermGroup::order_u64() const {
    const Integer& n = order();
    if (n > UINT64_MAX) throw CapExceeded("group order exceeds 64-bit range");
    return n.convert_to<std::uint64_t>();
}

bool PermGroup::contains(const Permutation& g) const { return chain().contains(g); }

std::vector<Permutation> PermGroup::elements() const {
    if (order() > element_cap_)
        throw CapExceeded("group order " + order().str() + " exceeds element cap " +
                          std::to_string(element_cap_));
    auto elems = chain().elements();
    std::sort(elems.begin(), elems.end());
    return elems;
}

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t parse_number(const std::string& text, const std::string& what) {
    std::uint64_t value = 0;
    const auto* begin = text.data();
    const auto* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw ParseError("malformed " + what + " parameter: '" + text + "'");
    return value;
}

std::vector<Permutation> alternating_generators(std::size_t n) {
    if (n < 3) return {};
    std::vector<Permutation> gens;
    gens.push_back(parse_cycles("(1 2 3)", n));
    if (n == 3) return gens;
    std::string big = "(";
    if (n % 2 == 1) { // n-cycle is even
        for (std::size_t i = 1; i <= n; ++i) big += (i > 1 ? " " : "") + std::to_string(i);
    } else { // (n-1)-cycle on 2..n is even
        for (std::size_t i = 2; i <= n; ++i) big += (i > 2 ? " " : "") + std::to_string(i);
    }
    big += ")";
    gens.push_back(parse_cycles(big, n));
    return gens;
}

std::vector<Permutation> symmetric_generators(std::size_t n) {
    if (n < 2) return {};
    std::vector<Permutation> gens;
    gens.push_back(parse_cycles("(1 2)", n));
    if (n == 2) return gens;
    std::string big = "(";
    for (std::size_t i = 1; i <= n; ++i) big += (i > 1 ? " " : "") + std::to_string(i);
    big += ")";
    gens.push_back(parse_cycles(big, n));
    return gens;
}

// PSL(2,p) on the projective line F_p + {inf}, points 0..p-1 then inf = p.
// Generated by z -> z+1 and z -> -1/z.
std::vector<Permutation> psl2_generators(std::uint64_t p) {
    const std::size_t degree = static_cast<std::size_t>(p) + 1;
    const Point inf = static_cast<Point>(p);

    std::vector<Point> shift(degree);
    for (std::uint64_t z = 0; z < p; ++z) shift[z] = static_cast<Point>((z + 1) % p);
    shift[inf] = inf;

    // Modular inverses by Fermat.
    auto pow_mod = [&](std::uint64_t b, std::uint64_t e) {
        std::uint64_t r = 1;
        b %= p;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    std::vector<Point> neg_inv(degree);
    neg_inv[0] = inf;
    neg_inv[inf] = 0;
    for (std::uint64_t z = 1; z < p; ++z)
        neg_inv[z] = static_cast<Point>((p - pow_mod(z, p - 2)) % p);

    return {Permutation(std::move(shift)), Permutation(std::move(neg_inv))};
}

std::vector<Permutation> cyclic_generators(std::size_t n) {
    if (n < 2) return {};
    std::vector<Point> rot(n);
    for (std::size_t i = 0; i < n; ++i) rot[i] = static_cast<Point>((i + 1) % n);
    return {Permutation(std::move(rot))};
}

std::vector<Permutation> dihedral_generators(std::size_t n) {
    auto gens = cyclic_generators(n);
    std::vector<Point> refl(n);
    for (std::size_t i = 0; i < n; ++i) refl[i] = static_cast<Point>((n - i) % n);
    gens.push_back(Permutation(std::move(refl)));
    return gens;
}

std::vector<Permutation> parse_generator_list(const std::string& body) {
    if (body.empty()) throw ParseError("gens spec has no permutations");
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto semi = body.find(';', start);
        parts.push_back(body.substr(start, semi == std::string::npos ? semi : semi - start));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    std::size_t degree = 0;
    for (const auto& part : parts) degree = std::max(degree, max_point_in_cycles(part));
    if (degree == 0) throw ParseError("gens spec moves no points");
    std::vector<Permutation> gens;
    gens.reserve(parts.size());
    for (const auto& part : parts) gens.push_back(parse_cycles(part, degree));
    return gens;
}

} // namespace

PermGroup catalog_group(const std::string& spec, std::uint64_t element_cap) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw ParseError("group spec must look like 'family:param'");
    const std::string family = spec.substr(0, colon);
    const std::string param = spec.substr(colon + 1);

    if (family == "gens") {
        auto gens = parse_generator_list(param);
        const std::size_t degree = gens.front().degree();
        return PermGroup(degree, std::move(gens), element_cap);
    }

    if (family == "alt" || family == "sym" || family == "cyclic" || family == "dihedral") {
        const std::uint64_t n = parse_number(param, family);
        if (n == 0) throw ParseError("parameter must be positive");
        if (n > kMaxDegree) throw CapExceeded("degree exceeds limit");
        if (family == "dihedral" && n < 3)
            throw ParseError("dihedral:n requires n >= 3 for a faithful action on n points");
        const auto degree = static_cast<std::size_t>(n);
        if (family == "alt") return PermGroup(degree, alternating_generators(degree), element_cap);
        if (family == "sym") return PermGroup(degree, symmetric_generators(degree), element_cap);
        if (family == "cyclic") return PermGroup(degree, cyclic_generators(degree), element_cap);
        return PermGroup(degree, dihedral_generators(degree), element_cap);
    }

    if (family == "psl2") {
        const std::uint64_t p = parse_number(param, "psl2");
        if (p < 5 || !is_prime_u64(p))
            throw ParseError("psl2 parameter must be a prime >= 5");
        if (p + 1 > kMaxDegree) throw CapExceeded("degree exceeds limit");
        return PermGroup(static_cast<std::size_t>(p) + 1, psl2_generators(p), element_cap);
    }

    throw ParseError("unknown group family '" + family + "'");
}

std::string group_display_name(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) return spec;
    const std::string family = spec.substr(0, colon);
    const std::string param = spec.substr(colon + 1);
    if (family == "alt") return "Alt(" + param + ")";
    if (family == "sym") return "Sym(" + param + ")";
    if (family == "psl2") return "PSL(2," + param + ")";
    if (family == "cyclic") return "C" + param;
    if (family == "dihedral") return "D" + param + " (order 2*" + param + ")";
    return spec;
}

} // namespace mz
