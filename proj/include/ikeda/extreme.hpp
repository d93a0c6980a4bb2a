#ifndef IKEDA_EXTREME_HPP
#define IKEDA_EXTREME_HPP

#include <span>
#include <utility>
#include <vector>

#include "ikeda/orbit.hpp"

namespace ikeda {

/// Threshold statistics of a power series. Events lie strictly above
/// mean + multiplier*std (population statistics).
struct EEReport {
    double mean = 0.0;
    double std = 0.0;
    double threshold = 0.0;
    double multiplier = 8.0;
    long n_events = 0;
    std::vector<long> event_indices;  // ascending
    double max_value = 0.0;
    long n_samples = 0;
};

EEReport ee_report(std::span<const double> series, double multiplier = 8.0);

/// Probability-normalized histogram over uniform bins spanning
/// [min, max]; right-open intervals, last bin closed. A degenerate
/// range collapses to a single bin of probability 1.
struct Histogram {
    std::vector<double> edges;  // n_bins + 1, strictly increasing
    std::vector<double> probs;  // sums to 1
    long n_samples = 0;
};

Histogram probability_histogram(std::span<const double> series, int n_bins);

/// Attractor-merging diagnostics on the steady-state Im(E4) series.
struct CrisisReport {
    double frac_positive = 0.0;  // over nonzero samples
    long n_sign_switches = 0;
    double cluster_gap = 0.0;  // distance between per-sign means
    bool merged = false;
    // False when one sign has no samples; cluster_gap is then
    // not applicable and merged stays false.
    bool both_signs = false;
};

CrisisReport crisis_report(const Orbit& orbit, int switch_min = 10);

/// Steady-state (Re E4, Im E4) pairs in iteration order.
std::vector<std::pair<double, double>> state_plane_dump(const Orbit& orbit);

}  // namespace ikeda

#endif
