#include "segmin/exact.hpp"

#include <algorithm>
#include <optional>

#include "segmin/algorithms.hpp"
#include "segmin/packing.hpp"
#include "row_dp.hpp"

namespace segmin {
namespace {

std::size_t count_total(const std::vector<int>& counts) {
    std::size_t total = 0;
    for (std::size_t v = 1; v < counts.size(); ++v) total += counts[v];
    return total;
}

// Searches for per-row vector choices whose componentwise max sums to at
// most `target`. Returns the chosen Pareto indices on success.
struct Combiner {
    const std::vector<detail::RowPareto>& rows;
    std::size_t target;
    std::chrono::steady_clock::time_point deadline;
    std::vector<int> choice;
    long long tick = 0;

    bool found(std::vector<int>& current_max, std::size_t row) {
        if ((++tick & 1023) == 0 && std::chrono::steady_clock::now() > deadline) {
            throw detail::DpTimeout{};
        }
        std::size_t cost = count_total(current_max);
        if (cost > target) return false;
        if (row == rows.size()) return true;
        // cheapest completion: every remaining row must fit on its own
        for (std::size_t r = row; r < rows.size(); ++r) {
            std::size_t best = std::numeric_limits<std::size_t>::max();
            for (const auto& counts : rows[r].counts) {
                std::size_t extra = 0;
                for (std::size_t v = 1; v < counts.size(); ++v) {
                    if (counts[v] > current_max[v]) extra += counts[v] - current_max[v];
                }
                best = std::min(best, extra);
            }
            if (cost + best > target) return false;
        }
        for (std::size_t i = 0; i < rows[row].counts.size(); ++i) {
            const std::vector<int>& counts = rows[row].counts[i];
            std::vector<int> next = current_max;
            for (std::size_t v = 1; v < counts.size(); ++v) {
                next[v] = std::max(next[v], counts[v]);
            }
            choice[row] = static_cast<int>(i);
            if (found(next, row + 1)) return true;
        }
        return false;
    }
};

}  // namespace

ExactResult exact_opt(const IntensityMatrix& t, const ExactLimits& limits) {
    const std::size_t cells = static_cast<std::size_t>(t.rows()) * t.cols();
    if (cells > limits.max_cells) {
        throw LimitError("exact_opt: instance has " + std::to_string(cells) +
                         " cells, limit is " + std::to_string(limits.max_cells));
    }
    if (t.max_value() > limits.max_h) {
        throw LimitError("exact_opt: maximum entry " + std::to_string(t.max_value()) +
                         " above limit " + std::to_string(limits.max_h));
    }

    ExactResult result;
    result.lower_bound = size_lower_bound(t);
    if (t.all_zero()) {
        result.status = ExactStatus::optimal;
        result.size = 0;
        result.segmentation.m = t.rows();
        result.segmentation.n = t.cols();
        return result;
    }

    // incumbent from the approximation pipelines
    Segmentation incumbent = alg_base(t, 2);
    for (const Segmentation& cand :
         {alg_base(t, 3), alg_base(t, 4), alg_logd(t, sweep_solver())}) {
        if (cand.size() < incumbent.size()) incumbent = cand;
    }
    result.size = incumbent.size();
    result.segmentation = incumbent;

    auto deadline = std::chrono::steady_clock::now() + limits.time_budget;
    try {
        if (std::chrono::steady_clock::now() > deadline) throw detail::DpTimeout{};
        // with a single row only the total matters, so the row oracle can
        // collapse its frontier to one vector per state
        const bool scalar = t.rows() == 1;
        std::vector<detail::RowPareto> rows;
        rows.reserve(t.rows());
        for (int i = 1; i <= t.rows(); ++i) {
            rows.push_back(detail::row_pareto(t.row(i), t.max_value(), incumbent.size(),
                                              deadline, scalar));
        }
        for (std::size_t target = result.lower_bound; target < incumbent.size(); ++target) {
            Combiner combiner{rows, target, deadline, std::vector<int>(t.rows(), -1)};
            std::vector<int> zero(static_cast<std::size_t>(t.max_value()) + 1, 0);
            if (combiner.found(zero, 0)) {
                std::vector<RowSegmentation> witness_rows;
                witness_rows.reserve(t.rows());
                for (int i = 0; i < t.rows(); ++i) {
                    witness_rows.push_back(rows[i].witnesses[combiner.choice[i]]);
                }
                Segmentation seg = pack_rows(t.rows(), t.cols(), witness_rows);
                if (!verify(t, seg)) {
                    throw std::logic_error("exact_opt: witness failed verification");
                }
                if (seg.size() != target) {
                    throw std::logic_error("exact_opt: witness size mismatch");
                }
                result.status = ExactStatus::optimal;
                result.size = target;
                result.segmentation = std::move(seg);
                return result;
            }
        }
        // nothing below the incumbent: the incumbent is optimal
        result.status = ExactStatus::optimal;
        return result;
    } catch (const detail::DpTimeout&) {
        result.status = ExactStatus::unknown;
        return result;
    }
}

// ---------------------------------------------------------------------------
// brute force cross-check
// ---------------------------------------------------------------------------

namespace {

struct BruteState {
    int m, n;
    std::vector<Value> residual;  // row-major
    std::size_t cap = 0;
    bool done = false;

    Value at(int i, int j) const { return residual[static_cast<std::size_t>(i) * n + j]; }
    Value& at(int i, int j) { return residual[static_cast<std::size_t>(i) * n + j]; }

    bool all_zero() const {
        return std::all_of(residual.begin(), residual.end(), [](Value v) { return v == 0; });
    }

    int max_markers() const {
        int best = 0;
        for (int i = 0; i < m; ++i) {
            std::span<const Value> row{residual.data() + static_cast<std::size_t>(i) * n,
                                       static_cast<std::size_t>(n)};
            best = std::max(best, markers(row));
        }
        return best;
    }
};

// one candidate matrix: value plus optional interval per row, encoded for
// canonical (nonincreasing) ordering within a solution
struct BruteMatrix {
    Value value = 0;
    std::vector<std::pair<int, int>> rows;  // (l, r) per row, (0, 0) = absent

    bool operator<(const BruteMatrix& other) const {
        if (value != other.value) return value > other.value;  // higher value first
        return rows < other.rows;
    }
    bool is_empty() const {
        return std::all_of(rows.begin(), rows.end(),
                           [](const auto& lr) { return lr.first == 0; });
    }
};

void enumerate_row_options(const BruteState& st, int i, Value v,
                           std::vector<std::pair<int, int>>& opts) {
    opts.clear();
    opts.emplace_back(0, 0);
    for (int l = 1; l <= st.n; ++l) {
        for (int r = l; r <= st.n; ++r) {
            bool ok = true;
            for (int j = l; j <= r && ok; ++j) ok = st.at(i, j - 1) >= v;
            if (ok) opts.emplace_back(l, r);
            else break;
        }
    }
}

void search(BruteState& st, std::size_t used, const std::optional<BruteMatrix>& prev) {
    if (st.done) return;
    if (st.all_zero()) {
        st.done = true;
        return;
    }
    if (used + (static_cast<std::size_t>(st.max_markers()) + 1) / 2 > st.cap) return;

    Value max_v = prev ? prev->value : *std::max_element(st.residual.begin(), st.residual.end());
    for (Value v = max_v; v >= 1 && !st.done; --v) {
        std::vector<std::vector<std::pair<int, int>>> options(st.m);
        for (int i = 0; i < st.m; ++i) enumerate_row_options(st, i, v, options[i]);

        BruteMatrix cand;
        cand.value = v;
        cand.rows.assign(st.m, {0, 0});
        std::function<void(int)> assign = [&](int i) {
            if (st.done) return;
            if (i == st.m) {
                if (cand.is_empty()) return;
                if (prev && cand < *prev) return;  // canonical nonincreasing order
                for (int r = 0; r < st.m; ++r) {
                    auto [l, rr] = cand.rows[r];
                    for (int j = l; j <= rr && l > 0; ++j) st.at(r, j - 1) -= v;
                }
                search(st, used + 1, cand);
                for (int r = 0; r < st.m; ++r) {
                    auto [l, rr] = cand.rows[r];
                    for (int j = l; j <= rr && l > 0; ++j) st.at(r, j - 1) += v;
                }
                return;
            }
            for (const auto& lr : options[i]) {
                cand.rows[i] = lr;
                assign(i + 1);
                if (st.done) return;
            }
        };
        assign(0);
    }
}

}  // namespace

std::size_t brute_force_opt(const IntensityMatrix& t) {
    const std::size_t cells = static_cast<std::size_t>(t.rows()) * t.cols();
    if (cells > 12 || t.max_value() > 3) {
        throw LimitError("brute_force_opt: caps are m*n <= 12 and h <= 3");
    }
    if (t.all_zero()) return 0;

    BruteState st;
    st.m = t.rows();
    st.n = t.cols();
    st.residual.reserve(cells);
    for (int i = 1; i <= st.m; ++i) {
        auto row = t.row(i);
        st.residual.insert(st.residual.end(), row.begin(), row.end());
    }
    for (std::size_t cap = size_lower_bound(t);; ++cap) {
        st.cap = cap;
        st.done = false;
        search(st, 0, std::nullopt);
        if (st.done) return cap;
    }
}

}  // namespace segmin
