#include "row_dp.hpp"

#include <algorithm>
#include <map>

namespace segmin::detail {
namespace {

using Partition = std::vector<int>;  // parts sorted descending

void enumerate_partitions(int remaining, int max_part, Partition& cur,
                          std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        enumerate_partitions(remaining - part, part, cur, out);
        cur.pop_back();
    }
}

struct PartitionCache {
    std::map<std::pair<int, int>, std::vector<Partition>> table;

    const std::vector<Partition>& of(int x, int cap) {
        auto key = std::make_pair(x, cap);
        auto it = table.find(key);
        if (it != table.end()) return it->second;
        std::vector<Partition> out;
        if (x == 0) {
            out = {Partition{}};
        } else {
            Partition cur;
            enumerate_partitions(x, std::max(cap, 1), cur, out);
        }
        return table.emplace(key, std::move(out)).first->second;
    }
};

// Multiset ops on descending-sorted partitions.
Partition intersect(const Partition& a, const Partition& b) {
    Partition out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                          std::greater<int>());
    return out;
}

Partition subtract(const Partition& a, const Partition& b) {
    Partition out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                        std::greater<int>());
    return out;
}

struct Entry {
    std::vector<int> counts;
    int prev_state = -1;  // state index in the previous column
    int prev_entry = -1;
    Partition opened;     // values opened entering this column
};

bool dominates(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t v = 1; v < a.size(); ++v) {
        if (a[v] > b[v]) return false;
    }
    return true;
}

// Keeps the entry list an antichain; on an equal count vector the incumbent
// wins, which makes witness construction deterministic.
void pareto_insert(std::vector<Entry>& set, Entry cand) {
    for (const Entry& e : set) {
        if (dominates(e.counts, cand.counts)) return;
    }
    std::erase_if(set, [&](const Entry& e) { return dominates(cand.counts, e.counts); });
    set.push_back(std::move(cand));
}

}  // namespace

RowPareto row_pareto(std::span<const Value> row, Value value_cap, std::size_t max_total,
                     std::optional<std::chrono::steady_clock::time_point> deadline,
                     bool scalar_total) {
    const int n = static_cast<int>(row.size());
    const int cap = static_cast<int>(value_cap);
    PartitionCache parts;

    auto total_of = [](const std::vector<int>& counts) {
        long total = 0;
        for (std::size_t v = 1; v < counts.size(); ++v) total += counts[v];
        return total;
    };
    auto insert = [&](std::vector<Entry>& set, Entry cand) {
        if (!scalar_total) {
            pareto_insert(set, std::move(cand));
            return;
        }
        if (set.empty()) {
            set.push_back(std::move(cand));
            return;
        }
        long have = total_of(set[0].counts), want = total_of(cand.counts);
        if (want < have || (want == have && cand.counts < set[0].counts)) {
            set[0] = std::move(cand);
        }
    };

    // Column 0 is the virtual zero before the row; columns 1..n are cells and
    // column n+1 the virtual zero after, so every segment closes by the end.
    std::vector<const std::vector<Partition>*> states(n + 2);
    std::vector<std::vector<std::vector<Entry>>> dp(n + 2);
    states[0] = &parts.of(0, cap);
    dp[0] = {{Entry{std::vector<int>(cap + 1, 0), -1, -1, {}}}};

    long long tick = 0;
    auto check_deadline = [&] {
        if (deadline && (++tick & 1023) == 0 && std::chrono::steady_clock::now() > *deadline) {
            throw DpTimeout{};
        }
    };

    for (int j = 1; j <= n + 1; ++j) {
        int cell = j <= n ? static_cast<int>(row[j - 1]) : 0;
        states[j] = &parts.of(cell, cap);
        dp[j].assign(states[j]->size(), {});
        for (std::size_t q = 0; q < states[j]->size(); ++q) {
            const Partition& next = (*states[j])[q];
            for (std::size_t p = 0; p < states[j - 1]->size(); ++p) {
                if (dp[j - 1][p].empty()) continue;
                Partition opened = subtract(next, intersect((*states[j - 1])[p], next));
                for (std::size_t e = 0; e < dp[j - 1][p].size(); ++e) {
                    check_deadline();
                    Entry cand;
                    cand.counts = dp[j - 1][p][e].counts;
                    for (int v : opened) ++cand.counts[v];
                    std::size_t total = 0;
                    for (std::size_t v = 1; v < cand.counts.size(); ++v) total += cand.counts[v];
                    if (total > max_total) continue;
                    cand.prev_state = static_cast<int>(p);
                    cand.prev_entry = static_cast<int>(e);
                    cand.opened = opened;
                    insert(dp[j][q], std::move(cand));
                }
            }
        }
    }

    RowPareto out;
    const std::vector<Entry>& finals = dp[n + 1][0];
    for (std::size_t f = 0; f < finals.size(); ++f) {
        // backward walk recording the state index and opened set per column
        std::vector<int> state_at(n + 2, 0);
        std::vector<const Partition*> opened_at(n + 2, nullptr);
        int state = 0, entry = static_cast<int>(f);
        for (int j = n + 1; j >= 1; --j) {
            const Entry& e = dp[j][state][entry];
            state_at[j] = state;
            opened_at[j] = &e.opened;
            state = e.prev_state;
            entry = e.prev_entry;
        }

        // forward replay: close what is not carried over (most recently
        // opened first), then open the recorded values
        struct Open {
            int value;
            int start;
        };
        std::vector<Open> open;
        RowSegmentation witness;
        for (int j = 1; j <= n + 1; ++j) {
            const Partition& cur = (*states[j])[state_at[j]];
            std::vector<int> keep_count(cap + 1, 0);
            for (int v : cur) ++keep_count[v];
            for (int v : *opened_at[j]) --keep_count[v];
            // close from the top of the stack every instance beyond keep_count
            std::vector<int> kept_seen(cap + 1, 0);
            std::vector<Open> still_open;
            for (auto it = open.rbegin(); it != open.rend(); ++it) {
                if (kept_seen[it->value] < keep_count[it->value]) {
                    ++kept_seen[it->value];
                    still_open.push_back(*it);
                } else {
                    witness.add(RowSegment{it->start, j - 1, static_cast<Value>(it->value)});
                }
            }
            std::reverse(still_open.begin(), still_open.end());
            open = std::move(still_open);
            for (int v : *opened_at[j]) open.push_back(Open{v, j});
        }
        std::sort(witness.segments.begin(), witness.segments.end(),
                  [](const RowSegment& a, const RowSegment& b) {
                      return std::tie(a.l, a.r, a.value) < std::tie(b.l, b.r, b.value);
                  });
        out.counts.push_back(finals[f].counts);
        out.witnesses.push_back(std::move(witness));
    }
    return out;
}

}  // namespace segmin::detail
