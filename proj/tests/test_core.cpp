#include <doctest.h>

#include "segmin/core.hpp"
#include "segmin/generators.hpp"

using namespace segmin;

namespace {

// definition-scan oracle: count indices j in 1..n+1 where the zero-padded
// row changes, independently of the library's single-pass implementation
int markers_oracle(const std::vector<Value>& row) {
    const int n = static_cast<int>(row.size());
    auto at = [&](int j) -> Value { return (j >= 1 && j <= n) ? row[j - 1] : 0; };
    int count = 0;
    for (int j = 1; j <= n + 1; ++j) {
        if (j == 1 && at(1) != 0) ++count;
        else if (j == n + 1 && j > 1 && at(n) != 0) ++count;
        else if (j > 1 && j <= n && at(j - 1) != at(j)) ++count;
    }
    return count;
}

Segmentation single(int m, int n, Value v, int row, int l, int r) {
    Segmentation s;
    s.m = m;
    s.n = n;
    SegmentMatrix sm;
    sm.value = v;
    sm.rows[row] = {l, r};
    s.segments.push_back(sm);
    return s;
}

}  // namespace

TEST_CASE("markers on fixed rows") {
    CHECK(markers(std::vector<Value>{0, 0, 0}) == 0);
    CHECK(markers(std::vector<Value>{1, 2, 1}) == 4);
    CHECK(markers(std::vector<Value>{0, 1, 1, 0}) == 2);
    CHECK(markers(std::vector<Value>{}) == 0);
    CHECK(markers(std::vector<Value>{4, 8, 9, 8, 4}) == 6);
}

TEST_CASE("markers matches the definition scan on random rows") {
    Rng rng(42);
    for (int trial = 0; trial < 500; ++trial) {
        int n = static_cast<int>(rng.uniform_int(0, 20));
        std::vector<Value> row(n);
        for (auto& v : row) v = rng.uniform_int(0, 4);
        CHECK(markers(row) == markers_oracle(row));
    }
}

TEST_CASE("markers invariant under zero padding") {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = static_cast<int>(rng.uniform_int(1, 12));
        std::vector<Value> row(n);
        for (auto& v : row) v = rng.uniform_int(0, 3);
        std::vector<Value> padded;
        padded.push_back(0);
        padded.insert(padded.end(), row.begin(), row.end());
        padded.push_back(0);
        CHECK(markers(row) == markers(padded));
    }
}

TEST_CASE("max markers and lower bound") {
    CHECK(max_markers(IntensityMatrix(3, 3)) == 0);
    CHECK(size_lower_bound(IntensityMatrix(3, 3)) == 0);
    auto t = IntensityMatrix::from_rows({{1, 2, 1}, {0, 1, 0}});
    CHECK(max_markers(t) == 4);
    CHECK(size_lower_bound(t) == 2);
    auto adv = IntensityMatrix::from_rows({{4, 8, 9, 8, 4}});
    CHECK(max_markers(adv) == 6);
    CHECK(size_lower_bound(adv) == 3);
    CHECK(size_lower_bound(IntensityMatrix::from_rows({{1, 2, 1}})) == 2);
}

TEST_CASE("row difference") {
    CHECK(row_difference(std::vector<Value>{4, 8, 9, 8, 4}) == 4);
    CHECK(row_difference(std::vector<Value>{0, 0}) == 0);
    CHECK(row_difference(std::vector<Value>{2, 2}) == 2);
    CHECK(row_difference(std::vector<Value>{1, 2, 1}) == 1);
    auto t = IntensityMatrix::from_rows({{0, 1, 0}, {5, 5, 5}});
    CHECK(t.row_difference() == 5);
    CHECK(t.max_value() == 5);
}

TEST_CASE("row difference is zero only for the all-zero matrix") {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        IntensityMatrix t = gen_random(static_cast<int>(rng.uniform_int(1, 6)),
                                       static_cast<int>(rng.uniform_int(1, 6)), 3,
                                       rng.next_u64());
        CHECK((t.row_difference() == 0) == t.all_zero());
    }
}

TEST_CASE("verify accepts exact covers") {
    // zero matrix, empty segmentation
    Segmentation empty;
    empty.m = 2;
    empty.n = 2;
    CHECK(static_cast<bool>(verify(IntensityMatrix(2, 2), empty)));
    // identity case
    auto t = IntensityMatrix::from_rows({{1, 1}});
    CHECK(static_cast<bool>(verify(t, single(1, 2, 1, 1, 1, 2))));
}

TEST_CASE("verify reports the first mismatching cell with residual") {
    auto t = IntensityMatrix::from_rows({{1, 2}});
    VerifyResult res = verify(t, single(1, 2, 1, 1, 1, 2));
    CHECK(!res);
    CHECK(res.status == VerifyResult::Status::sum_mismatch);
    CHECK(res.row == 1);
    CHECK(res.col == 2);
    CHECK(res.residual == 1);
}

TEST_CASE("verify distinguishes dimension mismatch from sum mismatch") {
    auto t = IntensityMatrix::from_rows({{1, 2}});
    Segmentation wrong_dims = single(2, 2, 1, 1, 1, 2);
    CHECK(verify(t, wrong_dims).status == VerifyResult::Status::dimension_mismatch);
    Segmentation out_of_range = single(1, 2, 1, 1, 1, 3);
    CHECK(verify(t, out_of_range).status == VerifyResult::Status::dimension_mismatch);
    Segmentation empty_segment;
    empty_segment.m = 1;
    empty_segment.n = 2;
    empty_segment.segments.push_back(SegmentMatrix{1, {}});
    CHECK(verify(t, empty_segment).status == VerifyResult::Status::dimension_mismatch);
}

TEST_CASE("integer ceil log and digit count") {
    CHECK(ceil_log(2, 1) == 0);
    CHECK(ceil_log(2, 2) == 1);
    CHECK(ceil_log(2, 3) == 2);
    CHECK(ceil_log(3, 9) == 2);
    CHECK(ceil_log(3, 10) == 3);
    CHECK(digit_count(2, 0) == 1);
    CHECK(digit_count(2, 1) == 1);
    CHECK(digit_count(3, 9) == 3);
    CHECK(digit_count(3, 8) == 2);
}
