#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>

#include "segmin/core.hpp"

namespace segmin {

// Segmentation of a single row: a list of row segments summing to the row,
// plus a per-value segment count kept in sync.
struct RowSegmentation {
    std::vector<RowSegment> segments;
    std::map<Value, int> counts_by_value;

    void add(RowSegment s) {
        ++counts_by_value[s.value];
        segments.push_back(s);
    }
    int count(Value v) const {
        auto it = counts_by_value.find(v);
        return it == counts_by_value.end() ? 0 : it->second;
    }
    std::size_t size() const { return segments.size(); }
};

// Optimal segmentation of a 0/1 row: one 1-segment per maximal run of ones.
RowSegmentation segment_row_binary(std::span<const Value> row);

// Row solver for entries in {0,1,2}. The output satisfies
//   n1 <= floor(rho/2)  and  n2 <= floor(rho/4 + 1/2)
// where rho = markers(row). Implemented as a deterministic rewrite loop that
// repeatedly applies the lowest-numbered applicable rewrite case at its
// leftmost occurrence, then a base step for the final remaining island.
RowSegmentation segment_row_base3(std::span<const Value> row);

// One rewrite step of the base-3 solver on a working copy of the row.
// Returns the applied case number (1..6), 7 for the base step, or 0 when the
// row is already all zero. Exposed so tests can check the per-case marker
// accounting.
int segment_row_base3_step(std::vector<Value>& work, RowSegmentation& out);

// Row solver for entries in {0,1,2,3}. Guarantees
//   n_v <= rho/(2v) + C   for v in {1,2,3},
// with the additive constant reported by segment_row_base4_constant().
RowSegmentation segment_row_base4(std::span<const Value> row);

// The additive constant realized by segment_row_base4, derived from the
// batch-plan table (worst possible leftover cost summed over patterns).
long segment_row_base4_constant();

// Batch plan for one island pattern. A pattern is the list of per-run
// amounts above the island's base value; segment endpoints in the recipes
// are 1-based *run* indices into the island interior.
struct IslandPlan {
    std::vector<int> pattern;
    int rho_per_copy = 0;                // markers removed by one instance
    int copies = 0;                      // instances consumed per batch
    std::array<int, 3> batch_counts{};   // 1-/2-/3-segments used per batch
    std::vector<std::vector<RowSegment>> per_copy;  // one recipe per instance
    std::vector<RowSegment> leftover;    // minimal cover for a solo instance
};

// Every island pattern a {0,1,2,3} row can present, and its plan. The table
// is computed once by exhaustive search and shared.
const std::vector<std::vector<int>>& base4_patterns();
const IslandPlan& base4_plan(const std::vector<int>& pattern);

// Left-to-right stack sweep for arbitrary non-negative rows. A value
// increase of d opens one segment of value d; a decrease closes open
// segments from the top of the stack, splitting at most one of them (the
// still-open part keeps its original start column). Guarantees:
// size <= markers(row) and every value <= row_difference(row).
RowSegmentation sweep_single_row(std::span<const Value> row);

// Rewrites a valid segmentation so that no segment ends exactly where
// another starts, which forces every value down to at most the row
// difference. Never increases the segment count; limit must be at least
// row_difference(row).
RowSegmentation transform_to_bounded(std::span<const Value> row, const RowSegmentation& s,
                                     Value limit);

// Minimum-size segmentation of one row by dynamic programming over open
// segment stacks. Desk-scale only: refuses rows longer than 12 or with
// entries above 6 unless override_limits is set. If value_cap is given the
// result uses only values up to the cap.
RowSegmentation exact_single_row(std::span<const Value> row,
                                 std::optional<Value> value_cap = std::nullopt,
                                 bool override_limits = false);

// Pluggable single-row solver with its claimed approximation factor and the
// bound every emitted value is guaranteed to respect.
struct SingleRowSolver {
    enum class ValueBound { row_difference, max_entry };

    std::string name;
    int alpha_num = 1;  // approximation factor as a fraction
    int alpha_den = 1;
    ValueBound max_value_bound = ValueBound::max_entry;
    std::function<RowSegmentation(std::span<const Value>)> run;
};

const SingleRowSolver& sweep_solver();
const SingleRowSolver& exact_row_solver();
const SingleRowSolver* find_row_solver(const std::string& name);

}  // namespace segmin
