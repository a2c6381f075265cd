#pragma once

#include <vector>

#include "segmin/core.hpp"

namespace segmin {

// Base-b digit layers of a target matrix: layer l holds the l-th base-b digit
// of every cell, so that sum over l of base^l * layer_l reproduces the target.
// The number of layers equals the base-b digit count of the maximum entry;
// an all-zero target yields a single zero layer.
struct DigitStack {
    int base = 0;
    std::vector<IntensityMatrix> layers;
};

DigitStack split_by_base(const IntensityMatrix& t, int base);

// Scales each per-layer segmentation by its layer weight and concatenates
// them into one segmentation of the original target. Input order is kept.
Segmentation combine_scaled(const std::vector<std::pair<Value, Segmentation>>& scaled_layers,
                            int m, int n);

}  // namespace segmin
