#include <doctest.h>

#include "segmin/decompose.hpp"
#include "segmin/generators.hpp"
#include "segmin/packing.hpp"
#include "segmin/row_solvers.hpp"

using namespace segmin;

TEST_CASE("base-3 digits of a scalar") {
    auto stack = split_by_base(IntensityMatrix::from_rows({{5}}), 3);
    REQUIRE(stack.layers.size() == 2);
    CHECK(stack.layers[0].at(1, 1) == 2);
    CHECK(stack.layers[1].at(1, 1) == 1);
}

TEST_CASE("base-3 digits of the worst-case row") {
    auto stack = split_by_base(IntensityMatrix::from_rows({{4, 8, 9, 8, 4}}), 3);
    REQUIRE(stack.layers.size() == 3);
    CHECK(stack.layers[0] == IntensityMatrix::from_rows({{1, 2, 0, 2, 1}}));
    CHECK(stack.layers[1] == IntensityMatrix::from_rows({{1, 2, 0, 2, 1}}));
    CHECK(stack.layers[2] == IntensityMatrix::from_rows({{0, 0, 1, 0, 0}}));
}

TEST_CASE("all-zero matrix splits into a single zero layer") {
    auto stack = split_by_base(IntensityMatrix(2, 3), 2);
    REQUIRE(stack.layers.size() == 1);
    CHECK(stack.layers[0].all_zero());
}

TEST_CASE("split rejects base below 2") {
    CHECK_THROWS_AS(split_by_base(IntensityMatrix(1, 1), 1), std::invalid_argument);
}

TEST_CASE("top layer is nonzero unless the target is all zero") {
    Rng rng(314);
    for (int trial = 0; trial < 200; ++trial) {
        IntensityMatrix t = gen_random(static_cast<int>(rng.uniform_int(1, 5)),
                                       static_cast<int>(rng.uniform_int(1, 5)),
                                       rng.uniform_int(0, 60), rng.next_u64());
        for (int base : {2, 3, 4}) {
            DigitStack stack = split_by_base(t, base);
            CHECK(static_cast<int>(stack.layers.size()) ==
                  digit_count(static_cast<Value>(base), t.max_value()));
            CHECK(stack.layers.back().all_zero() == t.all_zero());
            for (const IntensityMatrix& layer : stack.layers) {
                CHECK(layer.max_value() < static_cast<Value>(base));
            }
        }
    }
}

TEST_CASE("combine_scaled multiplies values and keeps sizes") {
    // digits of 5 in base 3: layer segmentations {v2 col1} and {v1 col1}
    Segmentation p0;
    p0.m = p0.n = 1;
    p0.segments.push_back(SegmentMatrix{2, {{1, {1, 1}}}});
    Segmentation p1;
    p1.m = p1.n = 1;
    p1.segments.push_back(SegmentMatrix{1, {{1, {1, 1}}}});
    Segmentation combined = combine_scaled({{1, p0}, {3, p1}}, 1, 1);
    REQUIRE(combined.size() == 2);
    CHECK(combined.segments[0].value == 2);
    CHECK(combined.segments[1].value == 3);
    CHECK(static_cast<bool>(verify(IntensityMatrix::from_rows({{5}}), combined)));

    CHECK(combine_scaled({}, 2, 2).size() == 0);
}

TEST_CASE("digit layers never gain markers") {
    Rng rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        IntensityMatrix t = gen_random(static_cast<int>(rng.uniform_int(1, 6)),
                                       static_cast<int>(rng.uniform_int(1, 8)), 20,
                                       rng.next_u64());
        for (int base : {2, 3, 4}) {
            for (const IntensityMatrix& layer : split_by_base(t, base).layers) {
                CHECK(max_markers(layer) <= max_markers(t));
            }
        }
    }
}

TEST_CASE("split and recombine round-trips for random matrices") {
    Rng rng(99);
    for (int trial = 0; trial < 1000; ++trial) {
        int m = static_cast<int>(rng.uniform_int(1, 10));
        int n = static_cast<int>(rng.uniform_int(1, 10));
        IntensityMatrix t = gen_random(m, n, 100, rng.next_u64());
        int base = static_cast<int>(rng.uniform_int(2, 4));

        DigitStack stack = split_by_base(t, base);
        Value scale = 1;
        std::vector<std::pair<Value, Segmentation>> scaled;
        for (const IntensityMatrix& layer : stack.layers) {
            // any valid per-layer segmentation works; use sweep rows + packing
            std::vector<RowSegmentation> rows;
            for (int i = 1; i <= layer.rows(); ++i) {
                rows.push_back(sweep_single_row(layer.row(i)));
            }
            Segmentation layer_seg = pack_rows(m, n, rows);
            REQUIRE(static_cast<bool>(verify(layer, layer_seg)));
            scaled.emplace_back(scale, layer_seg);
            scale *= base;
        }
        Segmentation combined = combine_scaled(scaled, m, n);
        CHECK(static_cast<bool>(verify(t, combined)));
        std::size_t total = 0;
        for (const auto& [sc, seg] : scaled) total += seg.size();
        CHECK(combined.size() == total);
    }
}
