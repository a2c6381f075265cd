#pragma once

#include "segmin/core.hpp"
#include "segmin/row_solvers.hpp"

namespace segmin {

// Stacks equal-value row segments across rows into full segment matrices:
// for each value, round r collects every row's r-th segment of that value,
// so the output has exactly sum over v of max_i n_v(i) matrices. Values are
// emitted ascending, rounds in order; within a row, segments are consumed in
// emission order.
Segmentation pack_rows(int m, int n, const std::vector<RowSegmentation>& per_row);

}  // namespace segmin
