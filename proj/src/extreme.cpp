#include "ikeda/extreme.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ikeda {

EEReport ee_report(std::span<const double> series, double multiplier) {
    if (series.size() < 2) {
        throw std::invalid_argument("ee_report: series too short");
    }
    if (!(multiplier > 0.0)) {
        throw std::invalid_argument("ee_report: multiplier must be positive");
    }

    EEReport report;
    report.multiplier = multiplier;
    report.n_samples = static_cast<long>(series.size());

    double sum = 0.0;
    double max_value = series[0];
    for (double x : series) {
        sum += x;
        max_value = std::max(max_value, x);
    }
    report.mean = sum / series.size();
    report.max_value = max_value;

    double var = 0.0;
    for (double x : series) {
        const double d = x - report.mean;
        var += d * d;
    }
    report.std = std::sqrt(var / series.size());
    report.threshold = report.mean + multiplier * report.std;

    for (size_t j = 0; j < series.size(); ++j) {
        if (series[j] > report.threshold) {
            report.event_indices.push_back(static_cast<long>(j));
        }
    }
    report.n_events = static_cast<long>(report.event_indices.size());
    return report;
}

Histogram probability_histogram(std::span<const double> series, int n_bins) {
    if (series.empty()) {
        throw std::invalid_argument("probability_histogram: empty series");
    }
    if (n_bins < 1) {
        throw std::invalid_argument("probability_histogram: n_bins must be >= 1");
    }

    const auto [lo_it, hi_it] = std::minmax_element(series.begin(), series.end());
    const double lo = *lo_it;
    const double hi = *hi_it;

    Histogram hist;
    hist.n_samples = static_cast<long>(series.size());

    if (lo == hi) {
        hist.edges = {lo - 0.5, lo + 0.5};
        hist.probs = {1.0};
        return hist;
    }

    hist.edges.resize(static_cast<size_t>(n_bins) + 1);
    const double width = (hi - lo) / n_bins;
    for (int k = 0; k <= n_bins; ++k) hist.edges[k] = lo + k * width;
    hist.edges.back() = hi;

    std::vector<long> counts(static_cast<size_t>(n_bins), 0);
    for (double x : series) {
        int k = static_cast<int>((x - lo) / width);
        k = std::clamp(k, 0, n_bins - 1);  // max lands in the closed last bin
        ++counts[k];
    }

    hist.probs.resize(static_cast<size_t>(n_bins));
    for (int k = 0; k < n_bins; ++k) {
        hist.probs[k] = static_cast<double>(counts[k]) / hist.n_samples;
    }
    return hist;
}

CrisisReport crisis_report(const Orbit& orbit, int switch_min) {
    if (orbit.diverged) {
        throw std::invalid_argument("crisis_report: diverged orbit");
    }

    CrisisReport report;
    long n_pos = 0, n_neg = 0;
    double sum_pos = 0.0, sum_neg = 0.0;
    int last_sign = 0;
    for (const FieldState& s : orbit.states) {
        const double im = s.e4.imag();
        if (im > 0.0) {
            ++n_pos;
            sum_pos += im;
        } else if (im < 0.0) {
            ++n_neg;
            sum_neg += im;
        } else {
            continue;  // exact zeros belong to neither cluster
        }
        const int sign = im > 0.0 ? 1 : -1;
        if (last_sign != 0 && sign != last_sign) ++report.n_sign_switches;
        last_sign = sign;
    }

    const long n_nonzero = n_pos + n_neg;
    report.frac_positive =
        n_nonzero > 0 ? static_cast<double>(n_pos) / n_nonzero : 0.0;
    report.both_signs = n_pos > 0 && n_neg > 0;
    if (report.both_signs) {
        report.cluster_gap = sum_pos / n_pos - sum_neg / n_neg;
        report.merged = report.n_sign_switches >= switch_min;
    }
    return report;
}

std::vector<std::pair<double, double>> state_plane_dump(const Orbit& orbit) {
    if (orbit.diverged) {
        throw std::invalid_argument("state_plane_dump: diverged orbit");
    }
    std::vector<std::pair<double, double>> out;
    out.reserve(orbit.states.size());
    for (const FieldState& s : orbit.states) {
        out.emplace_back(s.e4.real(), s.e4.imag());
    }
    return out;
}

}  // namespace ikeda
