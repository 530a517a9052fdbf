#pragma once

#include <string>

#include "pmcsolve/oracle.hpp"
#include "pmcsolve/problems.hpp"

namespace pmcsolve {

/// Fixed field order: problem, n, m, value, F, X, feasible, stats{separators,
/// pmcs, good_triples, dp_keys, ms}. Vertex ids are 1-indexed. Infeasible
/// results carry value null and empty sets. With timing off, ms is 0 so the
/// output depends only on the input.
std::string solution_json(const Graph& g, const Solution& s, bool timing = true);

/// Human-readable variant of the same fields.
std::string solution_text(const Graph& g, const Solution& s, bool timing = true);

/// One JSON object per line.
std::string report_json(const OracleReport& r);

}  // namespace pmcsolve
