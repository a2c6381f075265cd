#include "segmin/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "segmin/algorithms.hpp"
#include "segmin/io.hpp"
#include "segmin/parallel.hpp"

namespace segmin {
namespace {

using json = nlohmann::ordered_json;

double round_to(double x, int decimals) {
    double scale = std::pow(10.0, decimals);
    return std::round(x * scale) / scale;
}

RatioStats stats_of(std::vector<double> values, int decimals) {
    RatioStats s;
    s.count = static_cast<int>(values.size());
    if (values.empty()) return s;
    std::sort(values.begin(), values.end());
    double sum = 0;
    for (double v : values) sum += v;
    s.avg = round_to(sum / values.size(), decimals);
    std::size_t mid = values.size() / 2;
    double median =
        values.size() % 2 ? values[mid] : (values[mid - 1] + values[mid]) / 2.0;
    s.median = round_to(median, decimals);
    s.min = round_to(values.front(), decimals);
    s.max = round_to(values.back(), decimals);
    return s;
}

// theoretical approximation factor for one instance; empty when undefined
std::optional<double> theory_factor(Alg a, Value h, Value d) {
    switch (a) {
        case Alg::b2:
            if (h == 0) return std::nullopt;
            return static_cast<double>(ceil_log(2, h) + 1);
        case Alg::b3:
            if (h == 0) return std::nullopt;
            return 1.5 * (ceil_log(3, h) + 1);
        case Alg::b4:
            if (h == 0) return std::nullopt;
            return 11.0 / 6.0 * (ceil_log(4, h) + 1);
        case Alg::logd:
            if (d == 0) return std::nullopt;
            return 2.0 * (ceil_log(2, d) + 1);
    }
    return std::nullopt;
}

std::string format_ratio(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

json ratio_stats_json(const RatioStats& s) {
    return json{{"count", s.count}, {"avg", s.avg},  {"median", s.median},
                {"min", s.min},     {"max", s.max}};
}

RatioStats ratio_stats_from_json(const json& j) {
    RatioStats s;
    s.count = j.at("count").get<int>();
    s.avg = j.at("avg").get<double>();
    s.median = j.at("median").get<double>();
    s.min = j.at("min").get<double>();
    s.max = j.at("max").get<double>();
    return s;
}

}  // namespace

std::string alg_name(Alg a) {
    switch (a) {
        case Alg::b2: return "b2";
        case Alg::b3: return "b3";
        case Alg::b4: return "b4";
        case Alg::logd: return "logd";
    }
    return "?";
}

std::optional<Alg> alg_from_name(const std::string& name) {
    if (name == "b2") return Alg::b2;
    if (name == "b3") return Alg::b3;
    if (name == "b4") return Alg::b4;
    if (name == "logd") return Alg::logd;
    return std::nullopt;
}

BenchReport run_bench(const std::vector<std::pair<std::string, IntensityMatrix>>& instances,
                      const BenchOptions& options, const std::vector<std::string>& diagnostics) {
    BenchReport report;
    report.diagnostics = diagnostics;
    report.records.resize(instances.size());

    parallel_for(
        instances.size(),
        [&](std::size_t idx) {
            const auto& [id, t] = instances[idx];
            InstanceRecord rec;
            rec.id = id;
            rec.m = t.rows();
            rec.n = t.cols();
            rec.h = t.max_value();
            rec.d = t.row_difference();
            rec.lb = size_lower_bound(t);
            for (Alg a : options.algorithms) {
                auto start = std::chrono::steady_clock::now();
                Segmentation s;
                switch (a) {
                    case Alg::b2: s = alg_base(t, 2); break;
                    case Alg::b3: s = alg_base(t, 3); break;
                    case Alg::b4: s = alg_base(t, 4); break;
                    case Alg::logd: s = alg_logd(t, sweep_solver()); break;
                }
                std::chrono::duration<double> elapsed =
                    std::chrono::steady_clock::now() - start;
                if (!verify(t, s)) {
                    throw std::logic_error("run_bench: algorithm output failed verification on " +
                                           id);
                }
                rec.sizes[a] = s.size();
                rec.seconds[a] = elapsed.count();
            }
            if (options.run_exact) {
                try {
                    auto start = std::chrono::steady_clock::now();
                    ExactResult ex = exact_opt(t, options.exact_limits);
                    std::chrono::duration<double> elapsed =
                        std::chrono::steady_clock::now() - start;
                    rec.exact_seconds = elapsed.count();
                    if (ex.status == ExactStatus::optimal) {
                        rec.opt_status = InstanceRecord::OptStatus::optimal;
                        rec.opt = ex.size;
                    } else {
                        rec.opt_status = InstanceRecord::OptStatus::unknown;
                    }
                } catch (const LimitError&) {
                    rec.opt_status = InstanceRecord::OptStatus::skipped;
                }
            }
            report.records[idx] = std::move(rec);
        },
        options.threads);

    // aggregates, in input order
    BenchAggregates& agg = report.aggregates;
    agg.instances = static_cast<int>(report.records.size());
    agg.skipped = static_cast<int>(diagnostics.size());
    agg.algorithms = options.algorithms;

    std::map<Alg, std::vector<double>> vs_opt, vs_lb;
    std::map<std::string, std::vector<double>> pair_values;
    std::vector<double> best_values;
    std::map<Alg, std::vector<double>> theories;
    for (Alg a : options.algorithms) agg.wins[a] = 0;

    for (const InstanceRecord& rec : report.records) {
        bool has_opt = rec.opt_status == InstanceRecord::OptStatus::optimal;
        if (has_opt) ++agg.opt_solved;
        if (rec.opt_status == InstanceRecord::OptStatus::unknown) ++agg.opt_unknown;

        std::size_t min_size = std::numeric_limits<std::size_t>::max();
        for (const auto& [a, size] : rec.sizes) min_size = std::min(min_size, size);
        for (const auto& [a, size] : rec.sizes) {
            if (size == min_size) ++agg.wins[a];
            if (has_opt && rec.opt > 0) {
                vs_opt[a].push_back(static_cast<double>(size) / rec.opt);
            }
            if (rec.lb > 0) {
                vs_lb[a].push_back(static_cast<double>(size) / rec.lb);
            }
            if (auto f = theory_factor(a, rec.h, rec.d)) theories[a].push_back(*f);
        }
        if (has_opt && rec.opt > 0 && !rec.sizes.empty()) {
            best_values.push_back(static_cast<double>(min_size) / rec.opt);
        }
        for (Alg a : options.algorithms) {
            for (Alg b : options.algorithms) {
                if (a == b) continue;
                auto ia = rec.sizes.find(a);
                auto ib = rec.sizes.find(b);
                if (ia == rec.sizes.end() || ib == rec.sizes.end() || ib->second == 0) continue;
                pair_values[alg_name(a) + "_over_" + alg_name(b)].push_back(
                    static_cast<double>(ia->second) / ib->second);
            }
        }
    }

    for (Alg a : options.algorithms) {
        agg.win_percent[a] =
            agg.instances ? round_to(100.0 * agg.wins[a] / agg.instances, 1) : 0.0;
        agg.ratio_vs_opt[a] = stats_of(vs_opt[a], 4);
        agg.ratio_vs_lower_bound[a] = stats_of(vs_lb[a], 4);
        double sum = 0;
        for (double f : theories[a]) sum += f;
        agg.theory_avg[a] = theories[a].empty() ? 0.0 : round_to(sum / theories[a].size(), 2);
    }
    for (auto& [key, values] : pair_values) agg.pairwise[key] = stats_of(std::move(values), 4);
    agg.best_of_all = stats_of(std::move(best_values), 4);
    return report;
}

std::string report_csv(const BenchReport& report) {
    std::ostringstream out;
    out << "instance,m,n,h,D,lb,opt,opt_status,b2,b3,b4,logd,"
           "ratio_base,ratio_b2,ratio_b3,ratio_b4,ratio_logd\n";
    for (const InstanceRecord& rec : report.records) {
        out << rec.id << ',' << rec.m << ',' << rec.n << ',' << rec.h << ',' << rec.d << ','
            << rec.lb << ',';
        bool has_opt = rec.opt_status == InstanceRecord::OptStatus::optimal;
        if (has_opt) out << rec.opt;
        out << ',';
        switch (rec.opt_status) {
            case InstanceRecord::OptStatus::optimal: out << "optimal"; break;
            case InstanceRecord::OptStatus::unknown: out << "unknown"; break;
            case InstanceRecord::OptStatus::skipped: out << "skipped"; break;
        }
        for (Alg a : {Alg::b2, Alg::b3, Alg::b4, Alg::logd}) {
            out << ',';
            auto it = rec.sizes.find(a);
            if (it != rec.sizes.end()) out << it->second;
        }
        std::size_t base = has_opt ? rec.opt : rec.lb;
        out << ',' << (base == 0 ? "none" : has_opt ? "opt" : "lb");
        for (Alg a : {Alg::b2, Alg::b3, Alg::b4, Alg::logd}) {
            out << ',';
            auto it = rec.sizes.find(a);
            if (it != rec.sizes.end() && base > 0) {
                out << format_ratio(static_cast<double>(it->second) / base);
            }
        }
        out << '\n';
    }
    return out.str();
}

std::string aggregates_json(const BenchAggregates& agg) {
    json doc;
    doc["instances"] = agg.instances;
    doc["skipped"] = agg.skipped;
    json names = json::array();
    for (Alg a : agg.algorithms) names.push_back(alg_name(a));
    doc["algorithms"] = names;
    doc["opt_solved"] = agg.opt_solved;
    doc["opt_unknown"] = agg.opt_unknown;
    doc["wins"] = json::object();
    for (Alg a : agg.algorithms) {
        doc["wins"][alg_name(a)] = {{"count", agg.wins.at(a)},
                                    {"percent", agg.win_percent.at(a)}};
    }
    doc["ratio_vs_opt"] = json::object();
    doc["ratio_vs_lower_bound"] = json::object();
    doc["theory"] = json::object();
    for (Alg a : agg.algorithms) {
        doc["ratio_vs_opt"][alg_name(a)] = ratio_stats_json(agg.ratio_vs_opt.at(a));
        doc["ratio_vs_lower_bound"][alg_name(a)] =
            ratio_stats_json(agg.ratio_vs_lower_bound.at(a));
        doc["theory"][alg_name(a)] = agg.theory_avg.at(a);
    }
    doc["pairwise"] = json::object();
    for (const auto& [key, stats] : agg.pairwise) {
        doc["pairwise"][key] = ratio_stats_json(stats);
    }
    doc["best_of_all"] = ratio_stats_json(agg.best_of_all);
    return doc.dump(2) + "\n";
}

BenchAggregates aggregates_from_json(const std::string& text) {
    json doc = json::parse(text);
    BenchAggregates agg;
    agg.instances = doc.at("instances").get<int>();
    agg.skipped = doc.at("skipped").get<int>();
    for (const json& name : doc.at("algorithms")) {
        auto a = alg_from_name(name.get<std::string>());
        if (!a) throw ParseError("unknown algorithm in aggregate document");
        agg.algorithms.push_back(*a);
    }
    agg.opt_solved = doc.at("opt_solved").get<int>();
    agg.opt_unknown = doc.at("opt_unknown").get<int>();
    for (Alg a : agg.algorithms) {
        const json& w = doc.at("wins").at(alg_name(a));
        agg.wins[a] = w.at("count").get<int>();
        agg.win_percent[a] = w.at("percent").get<double>();
        agg.ratio_vs_opt[a] = ratio_stats_from_json(doc.at("ratio_vs_opt").at(alg_name(a)));
        agg.ratio_vs_lower_bound[a] =
            ratio_stats_from_json(doc.at("ratio_vs_lower_bound").at(alg_name(a)));
        agg.theory_avg[a] = doc.at("theory").at(alg_name(a)).get<double>();
    }
    for (const auto& [key, value] : doc.at("pairwise").items()) {
        agg.pairwise[key] = ratio_stats_from_json(value);
    }
    agg.best_of_all = ratio_stats_from_json(doc.at("best_of_all"));
    return agg;
}

std::string render_tables(const BenchAggregates& agg) {
    std::ostringstream out;
    out << "instances: " << agg.instances << " (opt solved " << agg.opt_solved << ", unknown "
        << agg.opt_unknown << ", unreadable " << agg.skipped << ")\n\n";
    out << "wins (smallest segmentation, ties included)\n";
    for (Alg a : agg.algorithms) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "  %-5s %5d  (%.1f%%)\n", alg_name(a).c_str(),
                      agg.wins.at(a), agg.win_percent.at(a));
        out << buf;
    }
    auto stats_table = [&](const char* title, const std::map<Alg, RatioStats>& table) {
        out << '\n' << title << "\n        avg     median  min     max     n\n";
        for (Alg a : agg.algorithms) {
            const RatioStats& s = table.at(a);
            char buf[96];
            std::snprintf(buf, sizeof buf, "  %-5s %-7.4f %-7.4f %-7.4f %-7.4f %d\n",
                          alg_name(a).c_str(), s.avg, s.median, s.min, s.max, s.count);
            out << buf;
        }
    };
    stats_table("ratio vs OPT", agg.ratio_vs_opt);
    stats_table("ratio vs lower bound", agg.ratio_vs_lower_bound);
    out << "\ntheoretical factor (mean)\n";
    for (Alg a : agg.algorithms) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "  %-5s %.2f\n", alg_name(a).c_str(),
                      agg.theory_avg.at(a));
        out << buf;
    }
    out << "\npairwise size ratios\n";
    for (const auto& [key, s] : agg.pairwise) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "  %-14s avg %-7.4f med %-7.4f min %-7.4f max %-7.4f\n",
                      key.c_str(), s.avg, s.median, s.min, s.max);
        out << buf;
    }
    const RatioStats& b = agg.best_of_all;
    char buf[96];
    std::snprintf(buf, sizeof buf,
                  "\nbest-of-all vs OPT: avg %.4f med %.4f min %.4f max %.4f (n=%d)\n", b.avg,
                  b.median, b.min, b.max, b.count);
    out << buf;
    return out.str();
}

std::string timings_csv(const BenchReport& report) {
    std::ostringstream out;
    out << "instance,b2_s,b3_s,b4_s,logd_s,exact_s\n";
    for (const InstanceRecord& rec : report.records) {
        out << rec.id;
        for (Alg a : {Alg::b2, Alg::b3, Alg::b4, Alg::logd}) {
            out << ',';
            auto it = rec.seconds.find(a);
            if (it != rec.seconds.end()) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.3f", it->second);
                out << buf;
            }
        }
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", rec.exact_seconds);
        out << ',' << buf << '\n';
    }
    return out.str();
}

LoadedInstances load_instance_dir(const std::string& dir) {
    namespace fs = std::filesystem;
    LoadedInstances out;
    if (!fs::is_directory(dir)) {
        out.diagnostics.push_back("not a directory: " + dir);
        return out;
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".txt") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    for (const fs::path& path : files) {
        try {
            out.instances.emplace_back(path.stem().string(), read_matrix_file(path.string()));
        } catch (const std::exception& e) {
            out.diagnostics.push_back(path.filename().string() + ": " + e.what());
        }
    }
    return out;
}

}  // namespace segmin
