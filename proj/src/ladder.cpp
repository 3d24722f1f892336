#include "mzeta/ladder.hpp"

#include "mzeta/errors.hpp"
#include "mzeta/indices.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

namespace mz {

void assign_signature(SimpleGroupDescriptor& desc) {
    const auto profile = w_of(desc);
    desc.signature_primes = profile.signature_primes;
    if (desc.signature_primes.empty())
        throw std::invalid_argument("no signature primes for " + desc.name);
    desc.elimination_prime = *desc.signature_primes.rbegin();
    desc.source = profile.source == OmegaSource::catalog_table ? "paper-table" : "formula";
}

std::set<std::uint64_t> signature_primes(const SimpleGroupDescriptor& desc) {
    SimpleGroupDescriptor copy = desc;
    assign_signature(copy);
    return copy.signature_primes;
}

std::vector<SimpleGroupDescriptor> full_catalog() {
    std::vector<SimpleGroupDescriptor> catalog;
    for (std::uint64_t p = 5; p <= 71; ++p) {
        if (!is_prime(p)) continue;
        catalog.push_back(psl2_descriptor(p));
        catalog.push_back(alternating_descriptor(p));
    }
    for (unsigned t = 3; t <= 6; ++t)
        catalog.push_back(alternating_descriptor(std::uint64_t{1} << t));
    for (const auto& s : sporadic_groups()) catalog.push_back(sporadic_descriptor(s.name));
    for (auto& d : catalog) assign_signature(d);
    return catalog;
}

namespace {

// Canonical in-row order: PSL(2,p), Alt(p), Alt(2^t), then sporadics by
// catalog order.
int family_rank(const SimpleGroupDescriptor& d) {
    switch (d.family) {
    case SimpleFamily::psl2: return 0;
    case SimpleFamily::alt_prime: return 1;
    case SimpleFamily::alt_2power: return 2;
    case SimpleFamily::sporadic: return 3;
    default: return 4;
    }
}

int sporadic_rank(const std::string& name) {
    const auto& table = sporadic_groups();
    for (std::size_t i = 0; i < table.size(); ++i)
        if (name == table[i].name) return static_cast<int>(i);
    return -1;
}

} // namespace

LadderReport eliminate(std::vector<SimpleGroupDescriptor> catalog) {
    LadderReport report;
    std::vector<SimpleGroupDescriptor> remaining;
    for (auto& d : catalog) {
        if (d.elimination_prime == 0 && !d.signature_primes.empty())
            d.elimination_prime = *d.signature_primes.rbegin();
        if (d.elimination_prime == 0)
            report.leftovers.push_back(d.name);
        else
            remaining.push_back(std::move(d));
    }
    while (!remaining.empty()) {
        std::uint64_t q = 0;
        for (const auto& d : remaining) q = std::max(q, d.elimination_prime);
        LadderRow row;
        row.prime = q;
        std::vector<SimpleGroupDescriptor> row_members;
        std::vector<SimpleGroupDescriptor> rest;
        for (auto& d : remaining) {
            if (d.elimination_prime == q)
                row_members.push_back(std::move(d));
            else
                rest.push_back(std::move(d));
        }
        std::sort(row_members.begin(), row_members.end(),
                  [](const SimpleGroupDescriptor& a, const SimpleGroupDescriptor& b) {
                      const int ra = family_rank(a), rb = family_rank(b);
                      if (ra != rb) return ra < rb;
                      if (a.family == SimpleFamily::sporadic)
                          return sporadic_rank(a.name) < sporadic_rank(b.name);
                      return a.param < b.param;
                  });
        for (const auto& d : row_members) row.groups.push_back(d.name);
        report.rows.push_back(std::move(row));
        remaining = std::move(rest);
    }
    return report;
}

const std::vector<LadderRow>& reference_table() {
    // One correction to the published row list: PSL(2,61) is part of the
    // catalog (61 is prime) and its designated odd index 1891 = 31*61 puts
    // it at prime 61, so it belongs in that row.
    static const std::vector<LadderRow> table = {
        {71, {"PSL(2,71)", "M", "Alt(71)"}},
        {67, {"PSL(2,67)", "Alt(67)", "Ly"}},
        {61, {"PSL(2,61)", "Alt(61)", "Alt(2^6)"}},
        {59, {"PSL(2,59)", "Alt(59)"}},
        {53, {"PSL(2,53)", "Alt(53)"}},
        {47, {"PSL(2,47)", "Alt(47)", "BM"}},
        {43, {"PSL(2,43)", "Alt(43)", "J4"}},
        {41, {"PSL(2,41)", "Alt(41)"}},
        {37, {"PSL(2,37)", "Alt(37)"}},
        {31, {"PSL(2,31)", "Alt(31)", "Alt(2^5)", "O'N"}},
        {29, {"PSL(2,29)", "Alt(29)", "Fi24'", "Ru"}},
        {23, {"PSL(2,23)", "Alt(23)", "M23", "M24", "Co2", "Co3", "Fi23"}},
        {19, {"PSL(2,19)", "Alt(19)", "J1", "J3", "HN", "Th"}},
        {17, {"PSL(2,17)", "Alt(17)", "He"}},
        {13, {"PSL(2,13)", "Alt(13)", "Alt(2^4)", "Suz", "Co1", "Fi22"}},
        {11, {"PSL(2,11)", "Alt(11)", "M11", "M12", "M22", "HS", "McL"}},
        {7, {"PSL(2,7)", "Alt(7)", "J2"}},
        {5, {"PSL(2,5)", "Alt(5)", "Alt(2^3)"}},
    };
    return table;
}

bool matches_reference(const LadderReport& report) {
    const auto& ref = reference_table();
    if (report.rows.size() != ref.size() || !report.leftovers.empty()) return false;
    for (std::size_t i = 0; i < ref.size(); ++i) {
        if (report.rows[i].prime != ref[i].prime) return false;
        std::set<std::string> got(report.rows[i].groups.begin(), report.rows[i].groups.end());
        std::set<std::string> want(ref[i].groups.begin(), ref[i].groups.end());
        if (got != want) return false;
    }
    return true;
}

SimpleGroupDescriptor parse_descriptor_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) {
        // bare sporadic name
        for (const auto& s : sporadic_groups()) {
            if (spec == s.name) {
                auto d = sporadic_descriptor(spec);
                assign_signature(d);
                return d;
            }
        }
        throw ParseError("unknown descriptor '" + spec + "'");
    }
    const std::string family = spec.substr(0, colon);
    const std::string param_text = spec.substr(colon + 1);
    std::uint64_t param = 0;
    {
        const auto* begin = param_text.data();
        const auto* end = begin + param_text.size();
        auto [ptr, ec] = std::from_chars(begin, end, param);
        if (ec != std::errc{} || ptr != end)
            throw ParseError("malformed parameter in '" + spec + "'");
    }
    SimpleGroupDescriptor d;
    if (family == "alt") {
        d = alternating_descriptor(param);
        if (d.family == SimpleFamily::alt_other)
            throw ParseError("alt parameter must be a prime or a 2-power for index rules");
    } else if (family == "alt2t") {
        if (param < 3) throw ParseError("alt2t parameter must be >= 3");
        d = alternating_descriptor(std::uint64_t{1} << param);
    } else if (family == "psl2") {
        d = psl2_descriptor(param);
    } else {
        throw ParseError("unknown descriptor family '" + family + "'");
    }
    assign_signature(d);
    return d;
}

} // namespace mz
