#pragma once

#include "mzeta/dirichlet.hpp"
#include "mzeta/indices.hpp"
#include "mzeta/ladder.hpp"
#include "mzeta/lattice.hpp"
#include "mzeta/zeta.hpp"

#include <json.hpp>

#include <string>

namespace mz {

/// Series wire format: [[n, "num", "den"], ...] sorted by n; numerator and
/// denominator as decimal strings so big integers survive JSON.
nlohmann::json series_to_json(const DirichletPoly& f);
DirichletPoly series_from_json(const nlohmann::json& j);

/// Lattice export: degree, order, subgroups (id, order, members), leq pairs
/// (proper inclusions), maximal ids, moebius values keyed by id.
nlohmann::json lattice_to_json(const SubgroupLattice& lattice);

nlohmann::json factorization_to_json(const SubgroupLattice& lattice,
                                     const std::vector<ChiefFactorReport>& reports,
                                     const std::string& group_name, unsigned hall_t,
                                     std::uint64_t tuple_cap);

nlohmann::json profile_to_json(const UsefulIndexProfile& profile);

nlohmann::json ladder_to_json(const LadderReport& report);

/// Catalog rows: name, family, params, order (decimal string), odd useful
/// indices when tabulated, signature primes, provenance.
nlohmann::json catalog_to_json(const std::vector<SimpleGroupDescriptor>& catalog);

} // namespace mz
