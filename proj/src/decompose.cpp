#include "segmin/decompose.hpp"

namespace segmin {

DigitStack split_by_base(const IntensityMatrix& t, int base) {
    if (base < 2) throw std::invalid_argument("digit base must be at least 2");
    DigitStack stack;
    stack.base = base;
    int layer_count = digit_count(static_cast<Value>(base), t.max_value());
    std::vector<std::vector<std::vector<Value>>> digits(
        layer_count, std::vector<std::vector<Value>>(t.rows(), std::vector<Value>(t.cols(), 0)));
    for (int i = 1; i <= t.rows(); ++i) {
        for (int j = 1; j <= t.cols(); ++j) {
            Value v = t.at(i, j);
            for (int l = 0; l < layer_count; ++l) {
                digits[l][i - 1][j - 1] = v % base;
                v /= base;
            }
        }
    }
    stack.layers.reserve(layer_count);
    for (int l = 0; l < layer_count; ++l) {
        stack.layers.push_back(IntensityMatrix::from_rows(digits[l]));
    }
    return stack;
}

Segmentation combine_scaled(const std::vector<std::pair<Value, Segmentation>>& scaled_layers,
                            int m, int n) {
    Segmentation out;
    out.m = m;
    out.n = n;
    for (const auto& [scale, layer_seg] : scaled_layers) {
        for (const SegmentMatrix& seg : layer_seg.segments) {
            SegmentMatrix scaled = seg;
            scaled.value = seg.value * scale;
            out.segments.push_back(std::move(scaled));
        }
    }
    return out;
}

}  // namespace segmin
