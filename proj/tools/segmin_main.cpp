#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "segmin/algorithms.hpp"
#include "segmin/bench.hpp"
#include "segmin/exact.hpp"
#include "segmin/generators.hpp"
#include "segmin/io.hpp"
#include "segmin/parallel.hpp"

namespace {

// exit codes: 0 ok, 2 parse/usage error, 3 limits refusal,
// 4 verification failure, 5 exact search timed out
constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitLimits = 3;
constexpr int kExitVerify = 4;
constexpr int kExitTimeout = 5;

using namespace segmin;

int cmd_solve(const std::string& alg, const std::string& in_path, const std::string& out_path,
              const std::string& row_solver, const ExactLimits& limits) {
    IntensityMatrix t = read_matrix_file(in_path);
    Segmentation s;
    int layers = 0;
    bool unknown = false;
    if (alg == "b2" || alg == "b3" || alg == "b4") {
        int base = alg[1] - '0';
        s = alg_base(t, base);
        layers = alg_base_layers(t, base);
    } else if (alg == "logd") {
        const SingleRowSolver* solver = find_row_solver(row_solver);
        if (!solver) throw ParseError("unknown row solver '" + row_solver + "'");
        s = alg_logd(t, *solver);
        layers = t.row_difference() > 0 ? digit_count(2, t.row_difference()) : 0;
    } else if (alg == "exact") {
        ExactResult res = exact_opt(t, limits);
        s = res.segmentation;
        unknown = res.status == ExactStatus::unknown;
    } else {
        throw ParseError("unknown algorithm '" + alg + "'");
    }

    VerifyResult check = verify(t, s);
    if (!check) {
        std::cerr << "internal verification failure: " << check.message << "\n";
        return kExitVerify;
    }
    write_segmentation_file(out_path, s);
    std::cout << "size " << s.size() << "\nlower_bound " << size_lower_bound(t) << "\nh "
              << t.max_value() << "\nD " << t.row_difference() << "\nlayers " << layers << "\n";
    if (unknown) {
        std::cout << "status unknown (time budget exhausted; size is an upper bound)\n";
        return kExitTimeout;
    }
    std::cout << "status ok\n";
    return kExitOk;
}

int cmd_verify(const std::string& matrix_path, const std::string& seg_path) {
    IntensityMatrix t = read_matrix_file(matrix_path);
    Segmentation s = read_segmentation_file(seg_path);
    VerifyResult res = verify(t, s);
    if (res) {
        std::cout << "ok: " << s.size() << " segments sum to the target\n";
        return kExitOk;
    }
    std::cerr << "verification failed: " << res.message << "\n";
    return kExitVerify;
}

int cmd_bench(const std::string& dir, const std::string& algs_csv, const ExactLimits& limits,
              bool no_exact, const std::string& report_path, const std::string& timings_path,
              int threads) {
    BenchOptions options;
    options.algorithms.clear();
    std::stringstream ss(algs_csv);
    std::string name;
    while (std::getline(ss, name, ',')) {
        auto a = alg_from_name(name);
        if (!a) throw ParseError("unknown algorithm '" + name + "' in --algs");
        if (std::find(options.algorithms.begin(), options.algorithms.end(), *a) ==
            options.algorithms.end()) {
            options.algorithms.push_back(*a);
        }
    }
    if (options.algorithms.empty()) throw ParseError("--algs selected no algorithms");
    options.run_exact = !no_exact;
    options.exact_limits = limits;
    options.threads = threads;

    LoadedInstances loaded = load_instance_dir(dir);
    BenchReport report = run_bench(loaded.instances, options, loaded.diagnostics);

    if (!report_path.empty()) {
        std::ofstream csv(report_path + ".csv");
        csv << report_csv(report);
        std::ofstream agg(report_path + ".json");
        agg << aggregates_json(report.aggregates);
        if (!csv || !agg) throw ParseError("cannot write report files at '" + report_path + "'");
    }
    if (!timings_path.empty()) {
        std::ofstream tim(timings_path);
        tim << timings_csv(report);
    }
    std::cout << render_tables(report.aggregates);
    for (const std::string& diag : report.diagnostics) {
        std::cerr << "skipped: " << diag << "\n";
    }
    return report.diagnostics.empty() ? kExitOk : kExitParse;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"segment minimization toolkit for non-negative integer intensity matrices"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");

    ExactLimits limits;
    long long budget_ms = static_cast<long long>(limits.time_budget.count());

    // solve
    auto* solve = app.add_subcommand("solve", "segment a matrix and write the segmentation");
    std::string alg, in_path, out_path = "-", row_solver = "sweep";
    std::uint64_t seed = 0;
    solve->add_option("--alg", alg, "algorithm: b2|b3|b4|logd|exact")->required();
    solve->add_option("--in", in_path, "matrix file ('-' for stdin)")->required();
    solve->add_option("--out", out_path, "segmentation file ('-' for stdout)");
    solve->add_option("--row-solver", row_solver, "row solver for logd: sweep|exact");
    solve->add_option("--seed", seed, "accepted for interface compatibility; all solvers are deterministic");
    solve->add_option("--max-cells", limits.max_cells, "exact: cell-count limit");
    solve->add_option("--max-h", limits.max_h, "exact: maximum-entry limit");
    solve->add_option("--time-budget-ms", budget_ms, "exact: time budget in milliseconds");

    // gen
    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->set_help_flag("--help", "print help");
    std::string kind, gen_out = "-";
    int gm = 50, gn = 50, peaks = 7, gb = 3, gk = 2, gcols = 2;
    std::uint64_t amp_lo = 1, amp_hi = 25, gh = 10, gseed = 0;
    double sigma = 0;
    gen->add_option("--kind", kind, "gaussian|adversarial|harmonic|random")->required();
    gen->add_option("--out", gen_out, "output file ('-' for stdout)");
    gen->add_option("--m", gm, "rows");
    gen->add_option("--n", gn, "columns");
    gen->add_option("--peaks", peaks, "gaussian: number of peaks");
    gen->add_option("--amp-lo", amp_lo, "gaussian: amplitude lower bound");
    gen->add_option("--amp-hi", amp_hi, "gaussian: amplitude upper bound");
    auto* sigma_opt = gen->add_option("--sigma", sigma, "gaussian: spread in cells (default min(m,n)/6)");
    gen->add_option("--b", gb, "adversarial/harmonic: base");
    gen->add_option("--k", gk, "adversarial: layer count");
    gen->add_option("--cols", gcols, "harmonic: nonzero columns per row");
    gen->add_option("--h", gh, "random: maximum value");
    gen->add_option("--seed", gseed, "random seed");

    // verify
    auto* ver = app.add_subcommand("verify", "check a segmentation against a matrix");
    std::string v_matrix, v_seg;
    ver->add_option("--matrix", v_matrix, "matrix file")->required();
    ver->add_option("--seg", v_seg, "segmentation file")->required();

    // bench
    auto* bench = app.add_subcommand("bench", "run the benchmark harness over a directory");
    std::string bench_dir, algs_csv = "b2,b3,b4,logd", report_path, timings_path;
    bool no_exact = false;
    int threads = 0;
    bench->add_option("--dir", bench_dir, "directory of .txt matrices")->required();
    bench->add_option("--algs", algs_csv, "comma-separated algorithms");
    bench->add_option("--exact-max-cells", limits.max_cells, "exact oracle cell limit");
    bench->add_option("--exact-max-h", limits.max_h, "exact oracle max-entry limit");
    bench->add_option("--exact-time-budget-ms", budget_ms, "exact oracle time budget");
    bench->add_flag("--no-exact", no_exact, "skip the exact oracle");
    bench->add_option("--report", report_path, "write <path>.csv and <path>.json");
    bench->add_option("--timings", timings_path, "write wall-clock timings CSV");
    bench->add_option("--threads", threads, "worker pool size (0 = logical cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    limits.time_budget = std::chrono::milliseconds(budget_ms);
    try {
        if (solve->parsed()) return cmd_solve(alg, in_path, out_path, row_solver, limits);
        if (ver->parsed()) return cmd_verify(v_matrix, v_seg);
        if (bench->parsed()) {
            return cmd_bench(bench_dir, algs_csv, limits, no_exact, report_path, timings_path,
                             threads);
        }
        if (gen->parsed()) {
            IntensityMatrix t(1, 1);
            if (kind == "gaussian") {
                GaussianParams p;
                p.m = gm;
                p.n = gn;
                p.num_peaks = peaks;
                p.amp_lo = amp_lo;
                p.amp_hi = amp_hi;
                if (sigma_opt->count() > 0) p.sigma = sigma;
                p.seed = gseed;
                t = gen_gaussian(p);
            } else if (kind == "adversarial") {
                t = gen_adversarial(gb, gk);
            } else if (kind == "harmonic") {
                t = gen_harmonic(gb, gcols);
            } else if (kind == "random") {
                t = gen_random(gm, gn, gh, gseed);
            } else {
                throw ParseError("unknown generator kind '" + kind + "'");
            }
            write_matrix_file(gen_out, t);
            return kExitOk;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const LimitError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitLimits;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerify;
    }
    return kExitParse;
}
