// Numbered golden scenarios served by `repro figure --id N`: each recomputes
// one worked example end to end and reports mismatches as issues.

#pragma once

#include <vector>

#include "striphom/report.hpp"

namespace striphom {

// The available scenario ids, ascending.
std::vector<int> repro_ids();

// Runs scenario `id`. Notes carry the recomputed values; any issue means the
// recomputation disagrees with the frozen golden data. Throws
// std::invalid_argument for an unknown id.
Report repro_figure(int id);

}  // namespace striphom
