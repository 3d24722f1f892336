#include "mzeta/perm.hpp"

#include <algorithm>
#include <numeric>

namespace mz {

Permutation Permutation::identity(std::size_t degree) {
    std::vector<Point> im(degree);
    std::iota(im.begin(), im.end(), Point{0});
    return Permutation(std::move(im));
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
    if (images_.size() > kMaxDegree)
        throw std::invalid_argument("permutation degree exceeds limit");
    std::vector<bool> seen(images_.size(), false);
    for (Point x : images_) {
        if (x >= images_.size() || seen[x])
            throw std::invalid_argument("image table is not a bijection");
        seen[x] = true;
    }
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<Point> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        inv[images_[i]] = static_cast<Point>(i);
    Permutation p;
    p.images_ = std::move(inv);
    return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("degree mismatch in permutation product");
    std::vector<Point> im(a.degree());
    for (std::size_t i = 0; i < im.size(); ++i) im[i] = b.images_[a.images_[i]];
    Permutation p;
    p.images_ = std::move(im);
    return p;
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
    // (g^-1 a g)(x): y = g^-1(x) via scan-free route: image of g(i) is g(a(i)).
    std::vector<Point> im(degree());
    for (std::size_t i = 0; i < degree(); ++i)
        im[g.images_[i]] = g.images_[images_[i]];
    Permutation p;
    p.images_ = std::move(im);
    return p;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
    std::vector<std::vector<Point>> out;
    std::vector<bool> seen(degree(), false);
    for (std::size_t i = 0; i < degree(); ++i) {
        if (seen[i] || images_[i] == i) {
            seen[i] = true;
            continue;
        }
        std::vector<Point> cyc;
        Point x = static_cast<Point>(i);
        while (!seen[x]) {
            seen[x] = true;
            cyc.push_back(x);
            x = images_[x];
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

std::uint64_t Permutation::order() const {
    std::uint64_t ord = 1;
    for (const auto& cyc : cycles()) {
        const std::uint64_t len = cyc.size();
        const std::uint64_t g = std::gcd(ord, len);
        const std::uint64_t factor = len / g;
        if (ord > UINT64_MAX / factor)
            throw std::overflow_error("permutation order exceeds uint64");
        ord *= factor;
    }
    return ord;
}

std::string Permutation::to_cycle_string() const {
    const auto cs = cycles();
    if (cs.empty()) return "()";
    std::string out;
    for (const auto& cyc : cs) {
        out += '(';
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(cyc[i] + 1);
        }
        out += ')';
    }
    return out;
}

namespace {

struct CycleScanner {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    std::size_t read_point() {
        skip_ws();
        if (pos >= text.size() || !isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected point number", pos);
        std::size_t v = 0;
        while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + static_cast<std::size_t>(text[pos] - '0');
            if (v > kMaxDegree) throw ParseError("point out of range", pos);
            ++pos;
        }
        if (v == 0) throw ParseError("points are 1-based", pos);
        return v;
    }
};

} // namespace

std::size_t max_point_in_cycles(const std::string& text) {
    CycleScanner sc{text};
    std::size_t maxp = 0;
    while (!sc.at_end()) {
        if (sc.text[sc.pos] != '(') throw ParseError("expected '('", sc.pos);
        ++sc.pos;
        sc.skip_ws();
        while (sc.pos < sc.text.size() && sc.text[sc.pos] != ')') {
            maxp = std::max(maxp, sc.read_point());
            sc.skip_ws();
            if (sc.pos < sc.text.size() && sc.text[sc.pos] == ',') ++sc.pos;
        }
        if (sc.pos >= sc.text.size()) throw ParseError("unterminated cycle", sc.pos);
        ++sc.pos; // ')'
    }
    return maxp;
}

Permutation parse_cycles(const std::string& text, std::size_t degree) {
    std::vector<Point> im(degree);
    std::iota(im.begin(), im.end(), Point{0});
    std::vector<bool> used(degree, false);

    CycleScanner sc{text};
    bool any_cycle = false;
    while (!sc.at_end()) {
        if (sc.text[sc.pos] != '(') throw ParseError("expected '('", sc.pos);
        ++sc.pos;
        any_cycle = true;
        std::vector<Point> cyc;
        sc.skip_ws();
        while (sc.pos < sc.text.size() && sc.text[sc.pos] != ')') {
            const std::size_t errpos = sc.pos;
            const std::size_t v1 = sc.read_point();
            if (v1 > degree) throw ParseError("point exceeds degree", errpos);
            const Point p = static_cast<Point>(v1 - 1);
            if (used[p]) throw ParseError("repeated point in cycle notation", errpos);
            used[p] = true;
            cyc.push_back(p);
            sc.skip_ws();
            if (sc.pos < sc.text.size() && sc.text[sc.pos] == ',') ++sc.pos;
        }
        if (sc.pos >= sc.text.size()) throw ParseError("unterminated cycle", sc.pos);
        ++sc.pos; // ')'
        for (std::size_t i = 0; i + 1 < cyc.size(); ++i) im[cyc[i]] = cyc[i + 1];
        if (cyc.size() > 1) im[cyc.back()] = cyc.front();
    }
    if (!any_cycle) throw ParseError("empty permutation string", 0);
    return Permutation(std::move(im));
}

} // namespace mz
