#pragma once

#include <chrono>

#include "segmin/core.hpp"

namespace segmin {

struct ExactLimits {
    std::size_t max_cells = 64;
    Value max_h = 6;
    std::chrono::milliseconds time_budget{60'000};
};

enum class ExactStatus { optimal, unknown };

struct ExactResult {
    ExactStatus status = ExactStatus::unknown;
    std::size_t size = 0;          // optimum, or the best incumbent on timeout
    Segmentation segmentation;     // witness of `size`
    std::size_t lower_bound = 0;
};

// Minimum-size segmentation for small instances. Refuses targets outside the
// limits (LimitError); when the time budget runs out it returns the best
// incumbent flagged `unknown`, never an unproven optimum.
//
// Search: iterative deepening on the segment count starting at the marker
// lower bound. Candidate sets decompose by rows: a full segmentation induces
// one single-row segmentation per row, and per-row segmentations pack back
// into sum-over-values-of-max-count matrices, so the search runs over
// Pareto-minimal per-row segment-count vectors with marker-based pruning.
ExactResult exact_opt(const IntensityMatrix& t, const ExactLimits& limits = {});

// Independent cross-check: exhaustive enumeration over canonically ordered
// segment-matrix sequences. Hard caps: m*n <= 12, h <= 3.
std::size_t brute_force_opt(const IntensityMatrix& t);

}  // namespace segmin
