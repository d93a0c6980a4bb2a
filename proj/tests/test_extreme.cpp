#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "ikeda/extreme.hpp"

using namespace ikeda;

namespace {

Orbit synthetic_orbit(const std::vector<double>& im_e4) {
    Orbit orbit;
    for (double im : im_e4) {
        FieldState s;
        s.e4 = {0.5, im};
        orbit.states.push_back(s);
        orbit.p1.push_back(0.0);
        orbit.p4.push_back(std::norm(s.e4));
    }
    return orbit;
}

}  // namespace

TEST_CASE("ee_report: constant series has no events") {
    std::vector<double> series(100, 4.0);
    const EEReport r = ee_report(series);
    CHECK(r.mean == 4.0);
    CHECK(r.std == 0.0);
    CHECK(r.threshold == 4.0);
    CHECK(r.n_events == 0);
    CHECK(r.max_value == 4.0);
}

TEST_CASE("ee_report: single spike is the sole event") {
    std::vector<double> series(10000, 0.0);
    series[1234] = 100.0;
    const EEReport r = ee_report(series, 8.0);
    CHECK(r.mean == doctest::Approx(0.01).epsilon(1e-12));
    CHECK(r.std == doctest::Approx(std::sqrt(100.0 * 100.0 / 10000.0 - 1e-4))
                       .epsilon(1e-10));
    CHECK(r.threshold < 100.0);
    CHECK(r.n_events == 1);
    REQUIRE(r.event_indices.size() == 1);
    CHECK(r.event_indices[0] == 1234);
}

TEST_CASE("ee_report: order-free statistics, event-threshold consistency") {
    std::mt19937 rng(17);
    std::lognormal_distribution<double> d(0.0, 1.5);
    std::vector<double> series(5000);
    for (double& x : series) x = d(rng);

    const EEReport a = ee_report(series, 3.0);
    for (long j : a.event_indices) CHECK(series[j] > a.threshold);
    long n_above = 0;
    for (double x : series) {
        if (x > a.threshold) ++n_above;
    }
    CHECK(n_above == a.n_events);
    CHECK(std::is_sorted(a.event_indices.begin(), a.event_indices.end()));

    std::vector<double> shuffled = series;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const EEReport b = ee_report(shuffled, 3.0);
    CHECK(a.mean == doctest::Approx(b.mean).epsilon(1e-12));
    CHECK(a.std == doctest::Approx(b.std).epsilon(1e-12));
    CHECK(a.n_events == b.n_events);
}

TEST_CASE("ee_report: argument validation") {
    std::vector<double> one(1, 0.0);
    CHECK_THROWS_AS(ee_report(one), std::invalid_argument);
    std::vector<double> two(2, 0.0);
    CHECK_THROWS_AS(ee_report(two, 0.0), std::invalid_argument);
}

TEST_CASE("probability_histogram: trivial shapes") {
    std::vector<double> single(10, 2.5);
    const Histogram h1 = probability_histogram(single, 8);
    CHECK(h1.probs.size() == 1);
    CHECK(h1.probs[0] == 1.0);

    std::vector<double> four{0.0, 1.0, 2.0, 3.0};
    const Histogram h2 = probability_histogram(four, 2);
    REQUIRE(h2.probs.size() == 2);
    CHECK(h2.probs[0] == 0.5);
    CHECK(h2.probs[1] == 0.5);

    std::vector<double> empty;
    CHECK_THROWS_AS(probability_histogram(empty, 4), std::invalid_argument);
    CHECK_THROWS_AS(probability_histogram(four, 0), std::invalid_argument);
}

TEST_CASE("probability_histogram: normalization and edge monotonicity") {
    std::mt19937 rng(29);
    std::normal_distribution<double> d(5.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> series(1 + (trial * 37) % 4000);
        for (double& x : series) x = d(rng);
        const Histogram h = probability_histogram(series, 1 + trial * 13);
        const double total =
            std::accumulate(h.probs.begin(), h.probs.end(), 0.0);
        CHECK(std::abs(total - 1.0) <= 1e-12);
        for (size_t k = 1; k < h.edges.size(); ++k) {
            CHECK(h.edges[k] > h.edges[k - 1]);
        }
    }
}

TEST_CASE("crisis_report: alternating signs count as merged") {
    std::vector<double> im;
    for (int i = 0; i < 100; ++i) im.push_back(i % 2 ? 1.0 : -1.0);
    const CrisisReport r = crisis_report(synthetic_orbit(im), 10);
    CHECK(r.merged);
    CHECK(r.n_sign_switches == 99);
    CHECK(r.both_signs);
    CHECK(r.frac_positive == doctest::Approx(0.5));
    CHECK(r.cluster_gap == doctest::Approx(2.0));
}

TEST_CASE("crisis_report: one-sided series is not merged") {
    std::vector<double> im(200, 0.7);
    const CrisisReport r = crisis_report(synthetic_orbit(im), 10);
    CHECK(!r.merged);
    CHECK(!r.both_signs);
    CHECK(r.frac_positive == 1.0);
    CHECK(r.n_sign_switches == 0);
}

TEST_CASE("crisis_report: a single stray flip is below the switch floor") {
    std::vector<double> im(1000, 1.0);
    im[500] = -0.1;
    const CrisisReport r = crisis_report(synthetic_orbit(im), 10);
    CHECK(r.both_signs);
    CHECK(r.n_sign_switches == 2);
    CHECK(!r.merged);
}

TEST_CASE("crisis_report: frac_positive over nonzero samples") {
    std::vector<double> im{1.0, 0.0, -1.0, 0.0, 1.0, 1.0};  // 3 pos, 1 neg
    const CrisisReport r = crisis_report(synthetic_orbit(im), 1);
    CHECK(r.frac_positive == doctest::Approx(0.75));
}

TEST_CASE("crisis_report and state_plane_dump reject diverged orbits") {
    Orbit orbit;
    orbit.diverged = true;
    CHECK_THROWS_AS(crisis_report(orbit, 10), std::invalid_argument);
    CHECK_THROWS_AS(state_plane_dump(orbit), std::invalid_argument);
}

TEST_CASE("state_plane_dump: zero orbit, row count contract") {
    std::vector<double> im(321, 0.0);
    Orbit orbit = synthetic_orbit(im);
    for (auto& s : orbit.states) s.e4 = {0.0, 0.0};
    const auto rows = state_plane_dump(orbit);
    CHECK(rows.size() == 321);
    for (const auto& [re, imv] : rows) {
        CHECK(re == 0.0);
        CHECK(imv == 0.0);
    }
}
