#include "segmin/core.hpp"

#include <algorithm>
#include <sstream>

namespace segmin {

IntensityMatrix::IntensityMatrix(int m, int n) : m_(m), n_(n) {
    if (m < 1 || n < 1) {
        throw std::invalid_argument("matrix dimensions must be at least 1x1");
    }
    cells_.assign(static_cast<std::size_t>(m) * n, 0);
}

IntensityMatrix IntensityMatrix::from_rows(const std::vector<std::vector<Value>>& rows) {
    if (rows.empty() || rows.front().empty()) {
        throw std::invalid_argument("matrix dimensions must be at least 1x1");
    }
    IntensityMatrix t(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int i = 0; i < t.m_; ++i) {
        if (static_cast<int>(rows[i].size()) != t.n_) {
            throw std::invalid_argument("ragged rows in matrix construction");
        }
        std::copy(rows[i].begin(), rows[i].end(),
                  t.cells_.begin() + static_cast<std::size_t>(i) * t.n_);
    }
    for (int i = 1; i <= t.m_; ++i) {
        t.max_value_ = std::max(t.max_value_, *std::max_element(t.row(i).begin(), t.row(i).end()));
        t.row_diff_ = std::max(t.row_diff_, segmin::row_difference(t.row(i)));
    }
    return t;
}

int markers(std::span<const Value> row) {
    if (row.empty()) return 0;
    int count = 0;
    Value prev = 0;  // virtual zero before column 1
    for (Value v : row) {
        if (v != prev) ++count;
        prev = v;
    }
    if (prev != 0) ++count;  // virtual zero after column n
    return count;
}

int max_markers(const IntensityMatrix& t) {
    int best = 0;
    for (int i = 1; i <= t.rows(); ++i) best = std::max(best, markers(t.row(i)));
    return best;
}

std::size_t size_lower_bound(const IntensityMatrix& t) {
    return (static_cast<std::size_t>(max_markers(t)) + 1) / 2;
}

Value row_difference(std::span<const Value> row) {
    if (row.empty()) return 0;
    Value d = std::max(row.front(), row.back());
    for (std::size_t j = 1; j < row.size(); ++j) {
        Value diff = row[j] > row[j - 1] ? row[j] - row[j - 1] : row[j - 1] - row[j];
        d = std::max(d, diff);
    }
    return d;
}

VerifyResult verify(const IntensityMatrix& t, const Segmentation& s) {
    VerifyResult res;
    auto dim_fail = [&](std::string msg) {
        res.status = VerifyResult::Status::dimension_mismatch;
        res.message = std::move(msg);
        return res;
    };
    if (s.m != t.rows() || s.n != t.cols()) {
        std::ostringstream os;
        os << "segmentation is for a " << s.m << "x" << s.n << " matrix, target is " << t.rows()
           << "x" << t.cols();
        return dim_fail(os.str());
    }
    for (const SegmentMatrix& seg : s.segments) {
        if (seg.value < 1) return dim_fail("segment with non-positive value");
        if (seg.rows.empty()) return dim_fail("segment covering no rows");
        for (const auto& [i, lr] : seg.rows) {
            if (i < 1 || i > t.rows() || lr.first < 1 || lr.second > t.cols() ||
                lr.first > lr.second) {
                return dim_fail("segment interval out of range");
            }
        }
    }
    std::vector<Value> sum(static_cast<std::size_t>(t.rows()) * t.cols(), 0);
    for (const SegmentMatrix& seg : s.segments) {
        for (const auto& [i, lr] : seg.rows) {
            for (int j = lr.first; j <= lr.second; ++j) {
                sum[static_cast<std::size_t>(i - 1) * t.cols() + (j - 1)] += seg.value;
            }
        }
    }
    for (int i = 1; i <= t.rows(); ++i) {
        for (int j = 1; j <= t.cols(); ++j) {
            Value got = sum[static_cast<std::size_t>(i - 1) * t.cols() + (j - 1)];
            Value want = t.at(i, j);
            if (got != want) {
                res.status = VerifyResult::Status::sum_mismatch;
                res.row = i;
                res.col = j;
                res.residual = static_cast<long long>(want) - static_cast<long long>(got);
                std::ostringstream os;
                os << "sum mismatch at (" << i << "," << j << "), residual " << res.residual;
                res.message = os.str();
                return res;
            }
        }
    }
    return res;
}

int ceil_log(Value base, Value x) {
    if (base < 2) throw std::invalid_argument("ceil_log base must be at least 2");
    if (x < 1) throw std::invalid_argument("ceil_log argument must be at least 1");
    int k = 0;
    Value p = 1;
    while (p < x) {
        p *= base;
        ++k;
    }
    return k;
}

int digit_count(Value base, Value h) {
    if (base < 2) throw std::invalid_argument("digit base must be at least 2");
    int k = 1;
    while (h >= base) {
        h /= base;
        ++k;
    }
    return k;
}

}  // namespace segmin
