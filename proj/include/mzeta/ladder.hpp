#pragma once

#include "mzeta/simple_groups.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mz {

struct LadderRow {
    std::uint64_t prime = 0;
    std::vector<std::string> groups; // canonical order: PSL(2,p), Alt(p), Alt(2^t), sporadics
};

struct LadderReport {
    std::vector<LadderRow> rows;            // strictly decreasing primes
    std::vector<std::string> leftovers;     // descriptors with no signature prime
};

/// Fills signature_primes and elimination_prime on a descriptor:
///   PSL(2,p): prime factors of the odd one of p(p-1)/2, p(p+1)/2;
///   Alt(p):   {p};
///   Alt(2^t): prime factors of w_alt_2t(t), via Legendre valuations;
///   sporadic: the static catalog value.
/// Throws std::invalid_argument for other families.
void assign_signature(SimpleGroupDescriptor& desc);

std::set<std::uint64_t> signature_primes(const SimpleGroupDescriptor& desc);

/// The full catalog behind the finiteness theorem: PSL(2,p) and Alt(p) for
/// every prime 5 <= p <= 71, Alt(2^t) for 3 <= t <= 6, and the 26 sporadic
/// groups, all with signature data assigned.
std::vector<SimpleGroupDescriptor> full_catalog();

/// Descending elimination: repeatedly removes every remaining descriptor
/// whose elimination prime is the current maximum, emitting one row per
/// prime.  Each descriptor lands in exactly one row (or in leftovers when it
/// has no signature prime).
LadderReport eliminate(std::vector<SimpleGroupDescriptor> catalog);

/// The expected elimination table (primes 71 down to 5 with their group
/// names), against which `ladder --diff-paper` compares.
const std::vector<LadderRow>& reference_table();

/// True iff eliminate(full_catalog()) reproduces the reference table row by
/// row as sets.
bool matches_reference(const LadderReport& report);

/// Parses a descriptor spec for the wx subcommand: "alt:<n>" (n prime or a
/// 2-power), "alt2t:<t>", "psl2:<p>", or a sporadic name such as "M" or
/// "Th".
SimpleGroupDescriptor parse_descriptor_spec(const std::string& spec);

} // namespace mz
