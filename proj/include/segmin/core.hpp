#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace segmin {

// Cell values are 64-bit unsigned; parsers reject anything above 2^32 so that
// whole-matrix sums stay far away from overflow.
using Value = std::uint64_t;
inline constexpr Value kMaxCellValue = Value{1} << 32;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an exact solver is asked for an instance outside its size caps.
struct LimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One interval [l..r] (1-based, inclusive) of uniform positive value inside a
// single row.
struct RowSegment {
    int l = 0;
    int r = 0;
    Value value = 0;

    auto operator<=>(const RowSegment&) const = default;
};

// A full aperture step: one value, at most one column interval per row.
// Rows not present are uncovered. Must cover at least one row.
struct SegmentMatrix {
    Value value = 0;
    std::map<int, std::pair<int, int>> rows;  // row index -> (l, r)

    bool operator==(const SegmentMatrix&) const = default;
};

struct Segmentation {
    int m = 0;
    int n = 0;
    std::vector<SegmentMatrix> segments;

    std::size_t size() const { return segments.size(); }
};

// Immutable non-negative integer target matrix with cached maximum entry and
// maximum row-difference.
class IntensityMatrix {
public:
    IntensityMatrix(int m, int n);  // all zeros
    static IntensityMatrix from_rows(const std::vector<std::vector<Value>>& rows);

    int rows() const { return m_; }
    int cols() const { return n_; }
    Value at(int i, int j) const { return cells_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)]; }
    std::span<const Value> row(int i) const {
        return {cells_.data() + static_cast<std::size_t>(i - 1) * n_, static_cast<std::size_t>(n_)};
    }

    Value max_value() const { return max_value_; }       // h
    Value row_difference() const { return row_diff_; }   // D, max over rows
    bool all_zero() const { return max_value_ == 0; }

    bool operator==(const IntensityMatrix& other) const {
        return m_ == other.m_ && n_ == other.n_ && cells_ == other.cells_;
    }

private:
    int m_;
    int n_;
    std::vector<Value> cells_;  // row-major
    Value max_value_ = 0;
    Value row_diff_ = 0;
};

// Number of positions where the row value changes, counting the virtual zero
// boundaries before column 1 and after column n. Empty row -> 0.
int markers(std::span<const Value> row);

// Max marker count over all rows.
int max_markers(const IntensityMatrix& t);

// ceil(max_markers / 2); never exceeds the size of any valid segmentation.
std::size_t size_lower_bound(const IntensityMatrix& t);

// Per-row difference bound: max of consecutive-cell differences and the first
// and last entries. Zero iff the row is all zero.
Value row_difference(std::span<const Value> row);

struct VerifyResult {
    enum class Status { ok, dimension_mismatch, sum_mismatch };
    Status status = Status::ok;
    int row = 0;             // first offending cell (1-based), for sum_mismatch
    int col = 0;
    long long residual = 0;  // target minus segment sum at that cell
    std::string message;

    explicit operator bool() const { return status == Status::ok; }
};

// Checks that the segments sum to the target exactly. Dimension or interval
// range violations are reported as dimension_mismatch, distinct from a sum
// mismatch.
VerifyResult verify(const IntensityMatrix& t, const Segmentation& s);

// Smallest k >= 0 with base^k >= x (x >= 1). Integer-only.
int ceil_log(Value base, Value x);

// Number of base-b digits of h; one digit for h == 0.
int digit_count(Value base, Value h);

}  // namespace segmin
