#include <doctest.h>

#include <algorithm>

#include "segmin/generators.hpp"
#include "segmin/packing.hpp"

using namespace segmin;

TEST_CASE("packing stacks equal-value segments round by round") {
    RowSegmentation r1;
    r1.add(RowSegment{1, 2, 1});  // A
    r1.add(RowSegment{4, 4, 1});  // B
    RowSegmentation r2;
    r2.add(RowSegment{2, 3, 1});  // C

    Segmentation s = pack_rows(2, 4, {r1, r2});
    REQUIRE(s.size() == 2);
    CHECK(s.segments[0].value == 1);
    CHECK(s.segments[0].rows.at(1) == std::make_pair(1, 2));
    CHECK(s.segments[0].rows.at(2) == std::make_pair(2, 3));
    CHECK(s.segments[1].rows.at(1) == std::make_pair(4, 4));
    CHECK(s.segments[1].rows.count(2) == 0);
}

TEST_CASE("packing keeps values apart") {
    RowSegmentation r1;
    r1.add(RowSegment{1, 1, 2});
    RowSegmentation r2;
    r2.add(RowSegment{1, 1, 1});
    Segmentation s = pack_rows(2, 1, {r1, r2});
    REQUIRE(s.size() == 2);
    CHECK(s.segments[0].value == 1);
    CHECK(s.segments[1].value == 2);
}

TEST_CASE("all-empty rows pack to an empty segmentation") {
    CHECK(pack_rows(3, 2, std::vector<RowSegmentation>(3)).size() == 0);
}

TEST_CASE("packed size equals the sum of per-value maxima") {
    Rng rng(8080);
    for (int trial = 0; trial < 300; ++trial) {
        int m = static_cast<int>(rng.uniform_int(1, 6));
        int n = static_cast<int>(rng.uniform_int(1, 8));
        std::vector<RowSegmentation> rows(m);
        for (auto& row : rows) {
            int count = static_cast<int>(rng.uniform_int(0, 6));
            for (int k = 0; k < count; ++k) {
                int l = static_cast<int>(rng.uniform_int(1, n));
                int r = static_cast<int>(rng.uniform_int(l, n));
                row.add(RowSegment{l, r, rng.uniform_int(1, 4)});
            }
        }
        Segmentation packed = pack_rows(m, n, rows);

        std::size_t expected = 0;
        std::map<Value, int> maxima;
        for (const auto& row : rows) {
            for (const auto& [v, c] : row.counts_by_value) {
                maxima[v] = std::max(maxima[v], c);
            }
        }
        for (const auto& [v, c] : maxima) expected += c;
        CHECK(packed.size() == expected);

        // no empty matrices, and the per-row projection is the input multiset
        for (const SegmentMatrix& sm : packed.segments) CHECK(!sm.rows.empty());
        for (int i = 1; i <= m; ++i) {
            std::vector<RowSegment> projected;
            for (const SegmentMatrix& sm : packed.segments) {
                auto it = sm.rows.find(i);
                if (it != sm.rows.end()) {
                    projected.push_back(
                        RowSegment{it->second.first, it->second.second, sm.value});
                }
            }
            std::vector<RowSegment> original = rows[i - 1].segments;
            std::sort(projected.begin(), projected.end());
            std::sort(original.begin(), original.end());
            CHECK(projected == original);
        }
    }
}
