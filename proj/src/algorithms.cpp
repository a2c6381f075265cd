#include "segmin/algorithms.hpp"

#include "segmin/decompose.hpp"
#include "segmin/packing.hpp"
#include "segmin/parallel.hpp"

namespace segmin {
namespace {

std::vector<RowSegmentation> solve_rows(const IntensityMatrix& t,
                                        const std::function<RowSegmentation(std::span<const Value>)>&
                                            row_fn) {
    std::vector<RowSegmentation> rows(t.rows());
    parallel_for(t.rows(), [&](std::size_t i) {
        rows[i] = row_fn(t.row(static_cast<int>(i) + 1));
    });
    return rows;
}

}  // namespace

int alg_base_layers(const IntensityMatrix& t, int base) {
    return digit_count(static_cast<Value>(base), t.max_value());
}

Segmentation alg_base(const IntensityMatrix& t, int base) {
    if (base < 2 || base > 4) {
        throw std::invalid_argument("alg_base: supported bases are 2, 3 and 4");
    }
    DigitStack stack = split_by_base(t, base);
    std::vector<std::pair<Value, Segmentation>> scaled;
    Value scale = 1;
    for (const IntensityMatrix& layer : stack.layers) {
        std::vector<RowSegmentation> rows;
        switch (base) {
            case 2: rows = solve_rows(layer, segment_row_binary); break;
            case 3: rows = solve_rows(layer, segment_row_base3); break;
            default: rows = solve_rows(layer, segment_row_base4); break;
        }
        scaled.emplace_back(scale, pack_rows(t.rows(), t.cols(), rows));
        scale *= base;
    }
    return combine_scaled(scaled, t.rows(), t.cols());
}

Segmentation alg_logd(const IntensityMatrix& t, const SingleRowSolver& solver, int digit_base) {
    if (digit_base < 2) throw std::invalid_argument("alg_logd: digit base must be at least 2");
    std::vector<RowSegmentation> rows = solve_rows(t, [&](std::span<const Value> row) {
        RowSegmentation solved = solver.run(row);
        RowSegmentation bounded = transform_to_bounded(row, solved, row_difference(row));
        // split every segment by digits of its value
        RowSegmentation digits;
        for (const RowSegment& seg : bounded.segments) {
            Value v = seg.value;
            Value scale = 1;
            while (v > 0) {
                Value digit = v % digit_base;
                if (digit > 0) {
                    digits.add(RowSegment{seg.l, seg.r, digit * scale});
                }
                v /= digit_base;
                scale *= digit_base;
            }
        }
        return digits;
    });
    return pack_rows(t.rows(), t.cols(), rows);
}

}  // namespace segmin
