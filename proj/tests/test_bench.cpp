#include <doctest.h>

#include "segmin/bench.hpp"
#include "segmin/generators.hpp"

using namespace segmin;

TEST_CASE("empty instance list gives an empty report") {
    BenchReport report = run_bench({}, BenchOptions{});
    CHECK(report.records.empty());
    CHECK(report.aggregates.instances == 0);
    CHECK(!report_csv(report).empty());  // header only
}

TEST_CASE("single adversarial instance with a raised exact limit") {
    BenchOptions options;
    options.algorithms = {Alg::b3, Alg::logd};
    options.exact_limits.max_h = 9;
    BenchReport report = run_bench({{"adv32", gen_adversarial(3, 2)}}, options);
    REQUIRE(report.records.size() == 1);
    const InstanceRecord& rec = report.records[0];
    CHECK(rec.opt_status == InstanceRecord::OptStatus::optimal);
    CHECK(rec.opt == 3);
    CHECK(rec.sizes.at(Alg::b3) == 9);  // 2(b-1)k + 1
    CHECK(rec.lb == 3);
    CHECK(rec.h == 9);
    CHECK(rec.d == 4);
}

TEST_CASE("instances beyond the exact limits are marked skipped") {
    BenchOptions options;
    options.exact_limits.max_h = 3;
    BenchReport report = run_bench({{"big", gen_random(4, 4, 9, 5)}}, options);
    CHECK(report.records[0].opt_status == InstanceRecord::OptStatus::skipped);
    // ratios fall back to the lower bound
    std::string csv = report_csv(report);
    CHECK(csv.find(",lb,") != std::string::npos);
}

TEST_CASE("ties credit every algorithm and win counts cover all instances") {
    std::vector<std::pair<std::string, IntensityMatrix>> instances;
    for (std::uint64_t s = 1; s <= 6; ++s) {
        instances.emplace_back("r" + std::to_string(s), gen_random(4, 4, 4, s));
    }
    BenchReport report = run_bench(instances, BenchOptions{});
    const BenchAggregates& agg = report.aggregates;
    int total_wins = 0;
    for (const auto& [a, w] : agg.wins) total_wins += w;
    CHECK(total_wins >= agg.instances);

    // an all-zero instance ties everyone
    BenchReport zeros = run_bench({{"zero", IntensityMatrix(3, 3)}}, BenchOptions{});
    for (const auto& [a, w] : zeros.aggregates.wins) CHECK(w == 1);
}

TEST_CASE("percentages recompute from counts") {
    std::vector<std::pair<std::string, IntensityMatrix>> instances;
    for (std::uint64_t s = 1; s <= 7; ++s) {
        instances.emplace_back("r" + std::to_string(s), gen_random(3, 5, 5, s));
    }
    BenchReport report = run_bench(instances, BenchOptions{});
    for (Alg a : report.aggregates.algorithms) {
        double expected = 100.0 * report.aggregates.wins.at(a) / report.aggregates.instances;
        CHECK(report.aggregates.win_percent.at(a) ==
              doctest::Approx(expected).epsilon(0.001));
    }
}

TEST_CASE("aggregate document round-trips losslessly") {
    std::vector<std::pair<std::string, IntensityMatrix>> instances;
    for (std::uint64_t s = 1; s <= 5; ++s) {
        instances.emplace_back("r" + std::to_string(s), gen_random(5, 5, 5, s));
    }
    instances.emplace_back("adv", gen_adversarial(2, 2));
    BenchReport report = run_bench(instances, BenchOptions{});

    std::string text = aggregates_json(report.aggregates);
    BenchAggregates parsed = aggregates_from_json(text);
    CHECK(parsed == report.aggregates);
    CHECK(aggregates_json(parsed) == text);

    // single-instance report renders a single-row table
    BenchReport one = run_bench({{"only", gen_random(2, 2, 2, 9)}}, BenchOptions{});
    CHECK(report_csv(one).find("only") != std::string::npos);
    CHECK(!render_tables(one.aggregates).empty());
}

TEST_CASE("per-instance sizes never beat the oracle") {
    std::vector<std::pair<std::string, IntensityMatrix>> instances;
    for (std::uint64_t s = 1; s <= 10; ++s) {
        instances.emplace_back("r" + std::to_string(s), gen_random(4, 4, 5, 100 + s));
    }
    BenchReport report = run_bench(instances, BenchOptions{});
    for (const InstanceRecord& rec : report.records) {
        std::size_t best = SIZE_MAX;
        for (const auto& [a, size] : rec.sizes) best = std::min(best, size);
        if (rec.opt_status == InstanceRecord::OptStatus::optimal) {
            CHECK(best >= rec.opt);
            CHECK(rec.opt >= rec.lb);
        }
        CHECK(best >= rec.lb);
    }
}

TEST_CASE("reports are byte-identical across worker counts") {
    std::vector<std::pair<std::string, IntensityMatrix>> instances;
    for (std::uint64_t s = 1; s <= 8; ++s) {
        instances.emplace_back("r" + std::to_string(s), gen_random(5, 6, 6, 2000 + s));
    }
    BenchOptions serial;
    serial.threads = 1;
    BenchOptions wide;
    wide.threads = 4;
    BenchReport a = run_bench(instances, serial);
    BenchReport b = run_bench(instances, wide);
    CHECK(report_csv(a) == report_csv(b));
    CHECK(aggregates_json(a.aggregates) == aggregates_json(b.aggregates));
}

TEST_CASE("diagnostics are carried into the report") {
    BenchReport report = run_bench({{"ok", gen_random(2, 2, 2, 1)}}, BenchOptions{},
                                   {"broken.txt: bad header"});
    CHECK(report.diagnostics.size() == 1);
    CHECK(report.aggregates.skipped == 1);
}

TEST_CASE("algorithm names round trip") {
    for (Alg a : {Alg::b2, Alg::b3, Alg::b4, Alg::logd}) {
        CHECK(alg_from_name(alg_name(a)) == a);
    }
    CHECK(!alg_from_name("b9").has_value());
}
