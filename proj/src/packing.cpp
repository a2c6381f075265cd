#include "segmin/packing.hpp"

namespace segmin {

Segmentation pack_rows(int m, int n, const std::vector<RowSegmentation>& per_row) {
    if (static_cast<int>(per_row.size()) != m) {
        throw std::invalid_argument("pack_rows: need one row segmentation per matrix row");
    }
    Segmentation out;
    out.m = m;
    out.n = n;

    // per value, each row's segments in emission order
    std::map<Value, std::vector<std::vector<const RowSegment*>>> queues;
    for (int i = 0; i < m; ++i) {
        for (const RowSegment& seg : per_row[i].segments) {
            auto& rows = queues[seg.value];
            if (rows.empty()) rows.resize(m);
            rows[i].push_back(&seg);
        }
    }
    for (const auto& [value, rows] : queues) {
        std::size_t max_count = 0;
        for (const auto& q : rows) max_count = std::max(max_count, q.size());
        for (std::size_t round = 0; round < max_count; ++round) {
            SegmentMatrix sm;
            sm.value = value;
            for (int i = 0; i < m; ++i) {
                if (round < rows[i].size()) {
                    sm.rows[i + 1] = {rows[i][round]->l, rows[i][round]->r};
                }
            }
            out.segments.push_back(std::move(sm));
        }
    }
    return out;
}

}  // namespace segmin
