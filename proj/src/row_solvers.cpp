#include "segmin/row_solvers.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <set>

#include "row_dp.hpp"

namespace segmin {
namespace {

struct Run {
    Value v;
    int l;
    int r;
};

std::vector<Run> runs_of(const std::vector<Value>& row) {
    std::vector<Run> runs;
    for (int j = 0; j < static_cast<int>(row.size()); ++j) {
        if (!runs.empty() && runs.back().v == row[j]) {
            runs.back().r = j + 1;
        } else {
            runs.push_back(Run{row[j], j + 1, j + 1});
        }
    }
    return runs;
}

void require_alphabet(std::span<const Value> row, Value max, const char* fn) {
    for (Value v : row) {
        if (v > max) {
            throw std::invalid_argument(std::string(fn) + ": entry " + std::to_string(v) +
                                        " outside {0.." + std::to_string(max) + "}");
        }
    }
}

void apply(std::vector<Value>& work, RowSegmentation& out, int l, int r, Value v) {
    for (int j = l; j <= r; ++j) {
        assert(work[j - 1] >= v);
        work[j - 1] -= v;
    }
    out.add(RowSegment{l, r, v});
}

}  // namespace

RowSegmentation segment_row_binary(std::span<const Value> row) {
    require_alphabet(row, 1, "segment_row_binary");
    RowSegmentation out;
    int start = -1;
    for (int j = 0; j <= static_cast<int>(row.size()); ++j) {
        bool one = j < static_cast<int>(row.size()) && row[j] == 1;
        if (one && start < 0) start = j + 1;
        if (!one && start > 0) {
            out.add(RowSegment{start, j, 1});
            start = -1;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// {0,1,2} rows
// ---------------------------------------------------------------------------

namespace {

// Maximal nonzero stretches classified by their run-value shape. By the time
// the two-island cases are reached, every stretch is (1,2), (2,1) or (2).
struct Stretch {
    int first_run;
    int last_run;
    enum class Shape { mixed, plain_two, other } shape;
};

std::vector<Stretch> stretches_of(const std::vector<Run>& runs) {
    std::vector<Stretch> out;
    int i = 0;
    const int k = static_cast<int>(runs.size());
    while (i < k) {
        if (runs[i].v == 0) {
            ++i;
            continue;
        }
        int j = i;
        while (j + 1 < k && runs[j + 1].v != 0) ++j;
        Stretch s{i, j, Stretch::Shape::other};
        if (j == i && runs[i].v == 2) {
            s.shape = Stretch::Shape::plain_two;
        } else if (j == i + 1 && ((runs[i].v == 1 && runs[j].v == 2) ||
                                  (runs[i].v == 2 && runs[j].v == 1))) {
            s.shape = Stretch::Shape::mixed;
        }
        out.push_back(s);
        i = j + 1;
    }
    return out;
}

}  // namespace

int segment_row_base3_step(std::vector<Value>& work, RowSegmentation& out) {
    std::vector<Run> runs = runs_of(work);
    const int k = static_cast<int>(runs.size());

    // case 1: 1 2+ 1 -- a 1-segment over the run of 2s
    for (int i = 0; i + 2 < k; ++i) {
        if (runs[i].v == 1 && runs[i + 1].v == 2 && runs[i + 2].v == 1) {
            apply(work, out, runs[i + 1].l, runs[i + 1].r, 1);
            return 1;
        }
    }
    // case 2: 0 1+ 0 -- a 1-segment over the run of 1s
    for (int i = 0; i < k; ++i) {
        if (runs[i].v == 1 && (i == 0 || runs[i - 1].v == 0) &&
            (i == k - 1 || runs[i + 1].v == 0)) {
            apply(work, out, runs[i].l, runs[i].r, 1);
            return 2;
        }
    }
    // case 3: 0 2+ 1+ 2+ 0 -- a 2-segment on the first 2-run, then two
    // 1-segments clearing the remaining 1+ 2+
    for (int i = 0; i + 2 < k; ++i) {
        if (runs[i].v == 2 && runs[i + 1].v == 1 && runs[i + 2].v == 2 &&
            (i == 0 || runs[i - 1].v == 0) && (i + 2 == k - 1 || runs[i + 3].v == 0)) {
            apply(work, out, runs[i].l, runs[i].r, 2);
            apply(work, out, runs[i + 1].l, runs[i + 2].r, 1);
            apply(work, out, runs[i + 2].l, runs[i + 2].r, 1);
            return 3;
        }
    }

    std::vector<Stretch> st = stretches_of(runs);
    std::vector<int> mixed, plain;
    for (int i = 0; i < static_cast<int>(st.size()); ++i) {
        if (st[i].shape == Stretch::Shape::mixed) mixed.push_back(i);
        if (st[i].shape == Stretch::Shape::plain_two) plain.push_back(i);
    }
    auto two_run_of = [&](const Stretch& s) {
        return runs[s.first_run].v == 2 ? runs[s.first_run] : runs[s.last_run];
    };
    auto one_run_of = [&](const Stretch& s) {
        return runs[s.first_run].v == 1 ? runs[s.first_run] : runs[s.last_run];
    };

    // case 4: two mixed islands -- 1-segment on the first island's 2-run,
    // 2-segment on the second's, then a 1-segment over each leftover 1-block
    if (mixed.size() >= 2) {
        const Stretch& a = st[mixed[0]];
        const Stretch& b = st[mixed[1]];
        Run a2 = two_run_of(a), b2 = two_run_of(b), b1 = one_run_of(b);
        apply(work, out, a2.l, a2.r, 1);
        apply(work, out, b2.l, b2.r, 2);
        apply(work, out, runs[a.first_run].l, runs[a.last_run].r, 1);
        apply(work, out, b1.l, b1.r, 1);
        return 4;
    }
    // case 5: two 0 2+ 0 islands -- 2-segment on the first, two stacked
    // 1-segments on the second
    if (plain.size() >= 2) {
        Run a = runs[st[plain[0]].first_run];
        Run b = runs[st[plain[1]].first_run];
        apply(work, out, a.l, a.r, 2);
        apply(work, out, b.l, b.r, 1);
        apply(work, out, b.l, b.r, 1);
        return 5;
    }
    // case 6: one mixed island and one 0 2+ 0 island -- 2-segment on the
    // plain island, two 1-segments clearing the mixed one
    if (!mixed.empty() && !plain.empty()) {
        const Stretch& m = st[mixed[0]];
        Run p = runs[st[plain[0]].first_run];
        Run m2 = two_run_of(m);
        apply(work, out, p.l, p.r, 2);
        apply(work, out, runs[m.first_run].l, runs[m.last_run].r, 1);
        apply(work, out, m2.l, m2.r, 1);
        return 6;
    }
    // base: at most one island is left, of shape (2), (1,2) or (2,1)
    if (st.empty()) return 0;
    const Stretch& s = st[0];
    if (s.shape == Stretch::Shape::plain_two) {
        Run r2 = runs[s.first_run];
        apply(work, out, r2.l, r2.r, 2);
        return 7;
    }
    if (s.shape == Stretch::Shape::mixed) {
        Run r1 = one_run_of(s), r2 = two_run_of(s);
        apply(work, out, r1.l, r1.r, 1);
        apply(work, out, r2.l, r2.r, 2);
        return 7;
    }
    throw std::logic_error("segment_row_base3: unexpected residual island shape");
}

RowSegmentation segment_row_base3(std::span<const Value> row) {
    require_alphabet(row, 2, "segment_row_base3");
    std::vector<Value> work(row.begin(), row.end());
    RowSegmentation out;
    while (segment_row_base3_step(work, out) != 0) {
    }
    return out;
}

// ---------------------------------------------------------------------------
// {0,1,2,3} rows
// ---------------------------------------------------------------------------

namespace base4 {

// A pattern is the per-run amount string (island interior minus its base
// value). Patterns are exactly the island-free strings over {1,2,3}, of
// which there are finitely many (adjacent values differ, at most one 1, twos
// separated by the 1, threes separated by smaller values).

bool closes_island(const std::vector<int>& s, int next) {
    if (!s.empty() && s.back() == next) return true;  // runs collapse
    for (int i = static_cast<int>(s.size()) - 1; i >= 0; --i) {
        if (s[i] > next) continue;
        return s[i] == next && i + 1 < static_cast<int>(s.size());
    }
    return false;
}

void enumerate_patterns(std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (!cur.empty()) out.push_back(cur);
    for (int c = 1; c <= 3; ++c) {
        if (closes_island(cur, c)) continue;
        cur.push_back(c);
        enumerate_patterns(cur, out);
        cur.pop_back();
    }
}

using Counts = std::array<int, 3>;

struct Cover {
    Counts counts{};
    std::vector<RowSegment> segments;  // run-indexed

    int total() const { return counts[0] + counts[1] + counts[2]; }
};

bool counts_le(const Counts& a, const Counts& b) {
    return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2];
}

// All Pareto-minimal exact covers of the amount string, found by anchored
// depth-first search over run-aligned segments.
std::vector<Cover> pareto_covers(const std::vector<int>& pattern) {
    std::set<std::vector<RowSegment>> seen;
    std::vector<Cover> covers;
    std::vector<RowSegment> cur;
    const int k = static_cast<int>(pattern.size());

    auto record = [&](const std::vector<RowSegment>& segs) {
        std::vector<RowSegment> sorted = segs;
        std::sort(sorted.begin(), sorted.end(), [](const RowSegment& a, const RowSegment& b) {
            return std::tie(a.l, a.r, a.value) < std::tie(b.l, b.r, b.value);
        });
        if (!seen.insert(sorted).second) return;
        Cover c;
        c.segments = std::move(sorted);
        for (const RowSegment& s : c.segments) ++c.counts[s.value - 1];
        covers.push_back(std::move(c));
    };

    std::function<void(std::vector<int>&)> dfs = [&](std::vector<int>& residual) {
        int anchor = -1;
        for (int i = 0; i < k; ++i) {
            if (residual[i] > 0) {
                anchor = i;
                break;
            }
        }
        if (anchor < 0) {
            record(cur);
            return;
        }
        for (int v = 1; v <= residual[anchor]; ++v) {
            for (int end = anchor; end < k && residual[end] >= v; ++end) {
                for (int i = anchor; i <= end; ++i) residual[i] -= v;
                cur.push_back(RowSegment{anchor + 1, end + 1, static_cast<Value>(v)});
                dfs(residual);
                cur.pop_back();
                for (int i = anchor; i <= end; ++i) residual[i] += v;
            }
        }
    };
    std::vector<int> residual = pattern;
    dfs(residual);

    std::vector<Cover> pareto;
    for (const Cover& c : covers) {
        bool dominated = false;
        for (const Cover& d : covers) {
            if (counts_le(d.counts, c.counts) && d.counts != c.counts) {
                dominated = true;
                break;
            }
        }
        if (!dominated) pareto.push_back(c);
    }
    // several covers can share a count triple; keep the first in segment
    // order so plan construction stays deterministic
    std::sort(pareto.begin(), pareto.end(), [](const Cover& a, const Cover& b) {
        if (a.total() != b.total()) return a.total() < b.total();
        if (a.counts != b.counts) return a.counts < b.counts;
        return a.segments < b.segments;
    });
    std::vector<Cover> dedup;
    for (const Cover& c : pareto) {
        if (dedup.empty() || dedup.back().counts != c.counts) dedup.push_back(c);
    }
    return dedup;
}

// Picks `copies` covers (with repetition) whose summed counts fit the batch
// budget floor(copies * rho / (2v)).
bool choose_batch(const std::vector<Cover>& covers, int copies, const Counts& budget,
                  std::vector<int>& picked) {
    std::function<bool(int, int, Counts)> rec = [&](int chosen, int from, Counts used) -> bool {
        if (chosen == copies) return true;
        for (int i = from; i < static_cast<int>(covers.size()); ++i) {
            Counts next = used;
            bool ok = true;
            for (int v = 0; v < 3; ++v) {
                next[v] += covers[i].counts[v];
                if (next[v] > budget[v]) ok = false;
            }
            if (!ok) continue;
            picked.push_back(i);
            if (rec(chosen + 1, i, next)) return true;
            picked.pop_back();
        }
        return false;
    };
    picked.clear();
    return rec(0, 0, Counts{0, 0, 0});
}

struct PlanTable {
    std::vector<std::vector<int>> patterns;
    std::map<std::vector<int>, IslandPlan> plans;
    long constant = 0;
};

PlanTable build_plan_table() {
    PlanTable table;
    std::vector<int> cur;
    enumerate_patterns(cur, table.patterns);
    std::sort(table.patterns.begin(), table.patterns.end());

    for (const std::vector<int>& pattern : table.patterns) {
        IslandPlan plan;
        plan.pattern = pattern;
        plan.rho_per_copy = static_cast<int>(pattern.size()) + 1;

        std::vector<Cover> covers = pareto_covers(pattern);
        // leftover recipe: fewest segments, then as many 1-segments as
        // possible (covers are count-deduped so this is well defined)
        const Cover* best = nullptr;
        for (const Cover& c : covers) {
            if (!best || c.total() < best->total() ||
                (c.total() == best->total() && c.counts > best->counts)) {
                best = &c;
            }
        }
        plan.leftover = best->segments;

        std::vector<int> picked;
        for (int copies = 1; copies <= 12 && plan.copies == 0; ++copies) {
            Counts budget{copies * plan.rho_per_copy / 2, copies * plan.rho_per_copy / 4,
                          copies * plan.rho_per_copy / 6};
            if (choose_batch(covers, copies, budget, picked)) {
                plan.copies = copies;
                for (int idx : picked) {
                    plan.per_copy.push_back(covers[idx].segments);
                    for (int v = 0; v < 3; ++v) plan.batch_counts[v] += covers[idx].counts[v];
                }
            }
        }
        if (plan.copies == 0) {
            throw std::logic_error("no batch plan for island pattern");
        }
        table.constant +=
            static_cast<long>(plan.copies - 1) * static_cast<long>(plan.leftover.size());
        table.plans.emplace(pattern, std::move(plan));
    }
    return table;
}

const PlanTable& plan_table() {
    static const PlanTable table = build_plan_table();
    return table;
}

// One island instance found in the working row.
struct Island {
    std::vector<int> pattern;                // per-run amounts above the base
    std::vector<std::pair<int, int>> runs;   // cell ranges of interior runs
};

// Non-nested islands in scan order: repeatedly the earliest-closing island
// whose opening run lies at or after the previous island's closing run.
std::vector<Island> scan_islands(const std::vector<Value>& work) {
    std::vector<Run> runs;
    runs.push_back(Run{0, 0, 0});  // virtual zero before column 1
    for (const Run& r : runs_of(work)) runs.push_back(r);
    runs.push_back(Run{0, static_cast<int>(work.size()) + 1, static_cast<int>(work.size()) + 1});

    std::vector<Island> islands;
    int window = 0;
    for (int t = 1; t < static_cast<int>(runs.size()); ++t) {
        int j = t - 1;
        while (j >= window && runs[j].v > runs[t].v) --j;
        if (j >= window && runs[j].v == runs[t].v && j < t - 1) {
            Island isl;
            for (int x = j + 1; x < t; ++x) {
                isl.pattern.push_back(static_cast<int>(runs[x].v - runs[t].v));
                isl.runs.emplace_back(runs[x].l, runs[x].r);
            }
            islands.push_back(std::move(isl));
            window = t;
        }
    }
    return islands;
}

void apply_recipe(std::vector<Value>& work, RowSegmentation& out, const Island& isl,
                  const std::vector<RowSegment>& recipe) {
    for (const RowSegment& s : recipe) {
        apply(work, out, isl.runs[s.l - 1].first, isl.runs[s.r - 1].second, s.value);
    }
}

}  // namespace base4

RowSegmentation segment_row_base4(std::span<const Value> row) {
    require_alphabet(row, 3, "segment_row_base4");
    const base4::PlanTable& table = base4::plan_table();
    std::vector<Value> work(row.begin(), row.end());
    RowSegmentation out;

    while (true) {
        std::vector<base4::Island> islands = base4::scan_islands(work);
        if (islands.empty()) break;

        // index islands per pattern, keep scan order
        std::map<std::vector<int>, std::vector<int>> by_pattern;
        for (int i = 0; i < static_cast<int>(islands.size()); ++i) {
            by_pattern[islands[i].pattern].push_back(i);
        }
        // batch the full-quota pattern whose first instance is leftmost
        int best_first = -1;
        const std::vector<int>* batch = nullptr;
        for (const auto& [pattern, idx] : by_pattern) {
            const IslandPlan& plan = table.plans.at(pattern);
            if (static_cast<int>(idx.size()) >= plan.copies &&
                (best_first < 0 || idx.front() < best_first)) {
                best_first = idx.front();
                batch = &idx;
            }
        }
        if (batch) {
            const IslandPlan& plan = table.plans.at(islands[(*batch)[0]].pattern);
            for (int c = 0; c < plan.copies; ++c) {
                base4::apply_recipe(work, out, islands[(*batch)[c]], plan.per_copy[c]);
            }
        } else {
            // no pattern reaches its quota: cover the first island alone
            const base4::Island& isl = islands.front();
            base4::apply_recipe(work, out, isl, table.plans.at(isl.pattern).leftover);
        }
    }
    return out;
}

long segment_row_base4_constant() { return base4::plan_table().constant; }

const std::vector<std::vector<int>>& base4_patterns() { return base4::plan_table().patterns; }

const IslandPlan& base4_plan(const std::vector<int>& pattern) {
    const auto& plans = base4::plan_table().plans;
    auto it = plans.find(pattern);
    if (it == plans.end()) throw std::invalid_argument("unknown island pattern");
    return it->second;
}

// ---------------------------------------------------------------------------
// arbitrary rows
// ---------------------------------------------------------------------------

RowSegmentation sweep_single_row(std::span<const Value> row) {
    RowSegmentation out;
    struct Open {
        Value value;
        int start;
    };
    std::vector<Open> stack;
    Value prev = 0;
    const int n = static_cast<int>(row.size());
    for (int j = 1; j <= n + 1; ++j) {
        Value cur = j <= n ? row[j - 1] : 0;
        if (cur > prev) {
            stack.push_back(Open{cur - prev, j});
        } else if (cur < prev) {
            Value drop = prev - cur;
            while (drop > 0) {
                Open top = stack.back();
                if (top.value <= drop) {
                    stack.pop_back();
                    out.add(RowSegment{top.start, j - 1, top.value});
                    drop -= top.value;
                } else {
                    // split: close part of the top segment, keep the rest
                    // open from its original start column
                    out.add(RowSegment{top.start, j - 1, drop});
                    stack.back().value -= drop;
                    drop = 0;
                }
            }
        }
        prev = cur;
    }
    return out;
}

RowSegmentation transform_to_bounded(std::span<const Value> row, const RowSegmentation& s,
                                     Value limit) {
    std::vector<Value> sum(row.size(), 0);
    for (const RowSegment& seg : s.segments) {
        if (seg.l < 1 || seg.r > static_cast<int>(row.size()) || seg.l > seg.r || seg.value < 1) {
            throw std::invalid_argument("transform_to_bounded: segment out of range");
        }
        for (int j = seg.l; j <= seg.r; ++j) sum[j - 1] += seg.value;
    }
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (sum[j] != row[j]) {
            throw std::invalid_argument("transform_to_bounded: segmentation does not sum to row");
        }
    }

    std::vector<RowSegment> segs = s.segments;
    // Eliminate meetings: whenever a segment ends at i and another starts at
    // i+1, merge them into min-value on the union plus a residual on the
    // larger side. Total value strictly drops, so this terminates. The pair
    // at the smallest boundary (first in list order on ties) is rewritten
    // first for determinism.
    while (true) {
        int found_a = -1, found_b = -1;
        for (int a = 0; a < static_cast<int>(segs.size()); ++a) {
            if (found_a >= 0 && segs[a].r >= segs[found_a].r) continue;
            for (int b = 0; b < static_cast<int>(segs.size()); ++b) {
                if (segs[b].l == segs[a].r + 1) {
                    found_a = a;
                    found_b = b;
                    break;
                }
            }
        }
        if (found_a < 0) break;
        RowSegment a = segs[found_a];
        RowSegment b = segs[found_b];
        RowSegment merged{a.l, b.r, std::min(a.value, b.value)};
        if (a.value == b.value) {
            segs[found_a] = merged;
            segs.erase(segs.begin() + found_b);
        } else if (a.value > b.value) {
            segs[found_a] = merged;
            segs[found_b] = RowSegment{a.l, a.r, a.value - b.value};
        } else {
            segs[found_a] = merged;
            segs[found_b] = RowSegment{b.l, b.r, b.value - a.value};
        }
    }

    RowSegmentation out;
    for (const RowSegment& seg : segs) {
        if (seg.value > limit) {
            throw std::logic_error("transform_to_bounded: value above limit after rewrite");
        }
        out.add(seg);
    }
    return out;
}

RowSegmentation exact_single_row(std::span<const Value> row, std::optional<Value> value_cap,
                                 bool override_limits) {
    Value h = 0;
    for (Value v : row) h = std::max(h, v);
    if (!override_limits && (row.size() > 12 || h > 6)) {
        throw LimitError("exact_single_row: row exceeds n<=12, h<=6 (use override)");
    }
    Value cap = value_cap.value_or(h);
    if (h > 0 && cap < 1) {
        throw std::invalid_argument("exact_single_row: value cap must be positive");
    }
    if (h == 0) return RowSegmentation{};

    detail::RowPareto pareto = detail::row_pareto(
        row, cap, std::numeric_limits<std::size_t>::max(), std::nullopt, /*scalar_total=*/true);
    return pareto.witnesses.at(0);
}

const SingleRowSolver& sweep_solver() {
    static const SingleRowSolver solver{"sweep", 2, 1,
                                        SingleRowSolver::ValueBound::row_difference,
                                        [](std::span<const Value> row) {
                                            return sweep_single_row(row);
                                        }};
    return solver;
}

const SingleRowSolver& exact_row_solver() {
    static const SingleRowSolver solver{"exact", 1, 1, SingleRowSolver::ValueBound::max_entry,
                                        [](std::span<const Value> row) {
                                            return exact_single_row(row);
                                        }};
    return solver;
}

const SingleRowSolver* find_row_solver(const std::string& name) {
    if (name == "sweep") return &sweep_solver();
    if (name == "exact") return &exact_row_solver();
    return nullptr;
}

}  // namespace segmin
