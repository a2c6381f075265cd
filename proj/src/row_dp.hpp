#pragma once

// Internal: exact single-row segmentation machinery shared by the row-level
// oracle and the full-matrix exact solver.
//
// A segmentation of one row is equivalent to choosing, for every column j, a
// multiset of "open" segment values summing to row[j]; moving to the next
// column keeps the common part of the two multisets and opens the rest.
// Segment counts are the total number of openings. The DP below walks the
// columns over partition states and keeps, per state, the Pareto-minimal
// per-value count vectors together with enough backtrace to rebuild one
// witness segmentation per vector.

#include <chrono>
#include <span>

#include "segmin/row_solvers.hpp"

namespace segmin::detail {

struct DpTimeout {};

struct RowPareto {
    // counts[v] = number of v-segments, index 0 unused; all vectors sized
    // value_cap + 1.
    std::vector<std::vector<int>> counts;
    std::vector<RowSegmentation> witnesses;
};

// All Pareto-minimal count vectors (with witnesses) over exact segmentations
// of the row using values at most value_cap. Vectors whose total exceeds
// max_total are dropped. With scalar_total set only a single total-minimal
// vector is kept per state, which is exact whenever only the overall segment
// count matters (single-row optimization). Throws DpTimeout when the
// deadline passes.
RowPareto row_pareto(std::span<const Value> row, Value value_cap, std::size_t max_total,
                     std::optional<std::chrono::steady_clock::time_point> deadline = std::nullopt,
                     bool scalar_total = false);

}  // namespace segmin::detail
