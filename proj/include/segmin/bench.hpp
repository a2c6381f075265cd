#pragma once

#include <optional>
#include <string>

#include "segmin/core.hpp"
#include "segmin/exact.hpp"

namespace segmin {

enum class Alg { b2, b3, b4, logd };

std::string alg_name(Alg a);
std::optional<Alg> alg_from_name(const std::string& name);

struct InstanceRecord {
    std::string id;
    int m = 0, n = 0;
    Value h = 0, d = 0;
    std::size_t lb = 0;
    enum class OptStatus { optimal, unknown, skipped } opt_status = OptStatus::skipped;
    std::size_t opt = 0;  // meaningful only when opt_status == optimal
    std::map<Alg, std::size_t> sizes;
    std::map<Alg, double> seconds;  // wall clock; kept out of canonical artifacts
    double exact_seconds = 0;
};

struct RatioStats {
    int count = 0;
    double avg = 0, median = 0, min = 0, max = 0;

    bool operator==(const RatioStats&) const = default;
};

struct BenchAggregates {
    int instances = 0;
    int skipped = 0;
    std::vector<Alg> algorithms;
    std::map<Alg, int> wins;  // smallest segmentation, ties credited to all
    std::map<Alg, double> win_percent;
    int opt_solved = 0;
    int opt_unknown = 0;
    std::map<Alg, RatioStats> ratio_vs_opt;
    std::map<Alg, RatioStats> ratio_vs_lower_bound;
    std::map<std::string, RatioStats> pairwise;  // "b3_over_b2" style keys
    RatioStats best_of_all;                      // min size over algs vs OPT
    std::map<Alg, double> theory_avg;            // mean theoretical factor

    bool operator==(const BenchAggregates&) const = default;
};

struct BenchReport {
    std::vector<InstanceRecord> records;
    std::vector<std::string> diagnostics;  // unreadable inputs, etc.
    BenchAggregates aggregates;
};

struct BenchOptions {
    std::vector<Alg> algorithms{Alg::b2, Alg::b3, Alg::b4, Alg::logd};
    bool run_exact = true;
    ExactLimits exact_limits;
    int threads = 0;  // 0 = default worker count
};

// Runs every requested algorithm (and the exact oracle, within its limits)
// on every instance and aggregates the results. Instances are dispatched to
// a worker pool; the report is assembled in input order so its bytes do not
// depend on the worker count.
BenchReport run_bench(const std::vector<std::pair<std::string, IntensityMatrix>>& instances,
                      const BenchOptions& options,
                      const std::vector<std::string>& diagnostics = {});

// Canonical artifacts. Both are deterministic for identical inputs; wall
// clock timings are only available through timings_csv and the rendered
// tables.
std::string report_csv(const BenchReport& report);
std::string aggregates_json(const BenchAggregates& agg);
BenchAggregates aggregates_from_json(const std::string& text);
std::string render_tables(const BenchAggregates& agg);
std::string timings_csv(const BenchReport& report);

struct LoadedInstances {
    std::vector<std::pair<std::string, IntensityMatrix>> instances;
    std::vector<std::string> diagnostics;
};

// Reads every .txt matrix in the directory, sorted by filename. Unreadable
// files are skipped with a diagnostic.
LoadedInstances load_instance_dir(const std::string& dir);

}  // namespace segmin
