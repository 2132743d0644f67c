#pragma once

#include <string>

#include "edgeideal/enumerate.hpp"
#include "edgeideal/invariants.hpp"

namespace edgeideal {

// Flat object with stable field names:
// n, edges, alpha, alphaPrime, cover, dim, hPoly, degH, reg, projDim,
// depth, field, boundsOk (per-inequality flags).
std::string report_to_json(const InvariantReport& rep);

std::string table_to_json(const RealizabilityTable& t);
std::string corpus_report_to_json(const CorpusReport& rep);

}  // namespace edgeideal
