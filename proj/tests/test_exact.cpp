#include <doctest.h>

#include "segmin/algorithms.hpp"
#include "segmin/exact.hpp"
#include "segmin/generators.hpp"

using namespace segmin;

TEST_CASE("exact optimum on fixed instances") {
    ExactResult one = exact_opt(IntensityMatrix::from_rows({{1}}));
    CHECK(one.status == ExactStatus::optimal);
    CHECK(one.size == 1);

    ExactLimits wide;
    wide.max_h = 9;
    ExactResult adv = exact_opt(IntensityMatrix::from_rows({{4, 8, 9, 8, 4}}), wide);
    CHECK(adv.status == ExactStatus::optimal);
    CHECK(adv.size == 3);

    ExactResult harm = exact_opt(gen_harmonic(3, 2));
    CHECK(harm.status == ExactStatus::optimal);
    CHECK(harm.size >= 3);
}

TEST_CASE("exact optimum of the zero matrix is the empty segmentation") {
    ExactResult res = exact_opt(IntensityMatrix(4, 4));
    CHECK(res.status == ExactStatus::optimal);
    CHECK(res.size == 0);
    CHECK(res.segmentation.size() == 0);
    CHECK(static_cast<bool>(verify(IntensityMatrix(4, 4), res.segmentation)));
}

TEST_CASE("exact refuses instances outside the limits") {
    CHECK_THROWS_AS(exact_opt(IntensityMatrix(9, 8)), LimitError);
    CHECK_THROWS_AS(exact_opt(IntensityMatrix::from_rows({{7}})), LimitError);
    ExactLimits raised;
    raised.max_h = 7;
    CHECK(exact_opt(IntensityMatrix::from_rows({{7}}), raised).size == 1);
}

TEST_CASE("an exhausted time budget reports unknown with a valid incumbent") {
    ExactLimits strangled;
    strangled.time_budget = std::chrono::milliseconds(0);
    IntensityMatrix t = gen_random(6, 6, 5, 99);
    ExactResult res = exact_opt(t, strangled);
    CHECK(res.status == ExactStatus::unknown);
    CHECK(res.size >= res.lower_bound);
    CHECK(static_cast<bool>(verify(t, res.segmentation)));
}

TEST_CASE("brute force on fixed instances") {
    CHECK(brute_force_opt(IntensityMatrix::from_rows({{1, 1}})) == 1);
    CHECK(brute_force_opt(IntensityMatrix::from_rows({{1, 2, 1}})) == 2);
    CHECK(brute_force_opt(IntensityMatrix(2, 2)) == 0);
    CHECK_THROWS_AS(brute_force_opt(IntensityMatrix(4, 4)), LimitError);
    CHECK_THROWS_AS(brute_force_opt(IntensityMatrix::from_rows({{4}})), LimitError);
}

TEST_CASE("exact agrees with brute force on tiny instances") {
    Rng rng(606);
    int done = 0;
    while (done < 200) {
        int m = static_cast<int>(rng.uniform_int(1, 4));
        int n = static_cast<int>(rng.uniform_int(1, 4));
        if (m * n > 12) continue;
        IntensityMatrix t = gen_random(m, n, 3, rng.next_u64());
        std::size_t brute = brute_force_opt(t);
        ExactResult res = exact_opt(t);
        REQUIRE(res.status == ExactStatus::optimal);
        CHECK(res.size == brute);
        CHECK(static_cast<bool>(verify(t, res.segmentation)));
        CHECK(res.segmentation.size() == res.size);
        ++done;
    }
    // the example from the cross-check contract
    IntensityMatrix mixed = IntensityMatrix::from_rows({{2, 1}, {1, 2}});
    CHECK(exact_opt(mixed).size == brute_force_opt(mixed));
}

TEST_CASE("exact optimum is sandwiched between bound and pipelines") {
    Rng rng(707);
    for (int trial = 0; trial < 60; ++trial) {
        IntensityMatrix t = gen_random(static_cast<int>(rng.uniform_int(1, 6)),
                                       static_cast<int>(rng.uniform_int(1, 6)),
                                       rng.uniform_int(0, 5), rng.next_u64());
        ExactResult res = exact_opt(t);
        REQUIRE(res.status == ExactStatus::optimal);
        CHECK(res.size >= size_lower_bound(t));
        CHECK(res.size <= alg_base(t, 2).size());
        CHECK(res.size <= alg_base(t, 3).size());
        CHECK(res.size <= alg_base(t, 4).size());
        CHECK(res.size <= alg_logd(t, sweep_solver()).size());
    }
}

TEST_CASE("exact search is deterministic") {
    IntensityMatrix t = gen_random(5, 5, 4, 321);
    ExactResult a = exact_opt(t);
    ExactResult b = exact_opt(t);
    CHECK(a.size == b.size);
    REQUIRE(a.segmentation.size() == b.segmentation.size());
    for (std::size_t i = 0; i < a.segmentation.size(); ++i) {
        CHECK(a.segmentation.segments[i] == b.segmentation.segments[i]);
    }
}
