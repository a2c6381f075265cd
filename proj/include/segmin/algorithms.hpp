#pragma once

#include "segmin/core.hpp"
#include "segmin/row_solvers.hpp"

namespace segmin {

// Full-matrix pipeline over base-b digit layers: split the target by base,
// segment every layer row (optimal runs for b=2, the bounded row solvers for
// b=3 and b=4), pack rows per layer, then recombine with layer scales.
// Supported bases: 2, 3, 4.
Segmentation alg_base(const IntensityMatrix& t, int base);

// Full-matrix pipeline over row segmentations: solve each row, rewrite so
// every value is at most the row difference, split each segment into digit
// segments (value digit * digit_base^l on the same interval), then pack all
// rows by realized value. Bounds are only claimed for digit_base 2.
Segmentation alg_logd(const IntensityMatrix& t, const SingleRowSolver& solver,
                      int digit_base = 2);

// Layer count the base pipelines use for this target.
int alg_base_layers(const IntensityMatrix& t, int base);

}  // namespace segmin
