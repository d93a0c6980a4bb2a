#include "ikeda/orbit.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace ikeda {

namespace {

bool power_ok(const FieldState& state) {
    return is_finite(state) && std::norm(state.e1) <= kPowerCap &&
           std::norm(state.e4) <= kPowerCap;
}

std::vector<double> uniform_grid(double lo, double hi, int n) {
    if (!(lo < hi)) {
        throw std::invalid_argument("scan: empty or inverted range");
    }
    if (n < 2) {
        throw std::invalid_argument("scan: need at least 2 grid points");
    }
    std::vector<double> g(static_cast<size_t>(n));
    const double d = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) g[i] = lo + i * d;
    return g;
}

}  // namespace

Orbit iterate_orbit(const MapParams& params, const OrbitSpec& spec) {
    if (spec.n_transient < 0 || spec.n_keep < 1) {
        throw std::invalid_argument("iterate_orbit: invalid OrbitSpec");
    }
    Orbit orbit;
    FieldState state = spec.initial;
    for (int i = 0; i < spec.n_transient; ++i) {
        state = step(state, params);
        if (!power_ok(state)) {
            orbit.diverged = true;
            return orbit;
        }
    }
    orbit.states.reserve(static_cast<size_t>(spec.n_keep));
    orbit.p1.reserve(static_cast<size_t>(spec.n_keep));
    orbit.p4.reserve(static_cast<size_t>(spec.n_keep));
    for (int i = 0; i < spec.n_keep; ++i) {
        state = step(state, params);
        if (!power_ok(state)) {
            orbit.diverged = true;
            return orbit;
        }
        orbit.states.push_back(state);
        orbit.p1.push_back(std::norm(state.e1));
        orbit.p4.push_back(std::norm(state.e4));
    }
    return orbit;
}

std::optional<int> detect_period(std::span<const double> series, int max_period,
                                 double rel_tol, double abs_tol) {
    if (series.size() < static_cast<size_t>(4 * max_period)) {
        throw std::invalid_argument("detect_period: series too short");
    }
    const size_t tail_len = std::min<size_t>(series.size(), 256);
    const auto tail = series.last(tail_len);

    double scale = 0.0;
    for (double x : series) scale = std::max(scale, std::abs(x));
    const double tol = abs_tol + rel_tol * scale;

    for (int p = 1; p <= max_period; p *= 2) {
        bool ok = true;
        for (size_t j = 0; j + p < tail.size(); ++j) {
            if (std::abs(tail[j + p] - tail[j]) > tol) {
                ok = false;
                break;
            }
        }
        if (ok) return p;
    }
    return std::nullopt;
}

LleResult lle(const MapParams& params, const OrbitSpec& spec,
              double h_jacobian) {
    if (spec.n_transient < 0 || spec.n_keep < 1) {
        throw std::invalid_argument("lle: invalid OrbitSpec");
    }
    FieldState state = spec.initial;
    for (int i = 0; i < spec.n_transient; ++i) {
        state = step(state, params);
        if (!power_ok(state)) return {0.0, true};
    }

    Vec4 v{1.0, 0.0, 0.0, 0.0};
    double log_sum = 0.0;
    int steps = 0;
    for (int i = 0; i < spec.n_keep; ++i) {
        const Mat4 j = jacobian(state, params, h_jacobian);
        Vec4 w{};
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) w[r] += j[r][c] * v[c];
        }
        const double norm = std::sqrt(w[0] * w[0] + w[1] * w[1] +
                                      w[2] * w[2] + w[3] * w[3]);
        if (!std::isfinite(norm) || norm == 0.0) {
            return {steps > 0 ? log_sum / steps : 0.0, true};
        }
        log_sum += std::log(norm);
        ++steps;
        for (auto& x : w) x /= norm;
        v = w;

        state = step(state, params);
        if (!power_ok(state)) {
            return {log_sum / steps, true};
        }
    }
    return {log_sum / steps, false};
}

std::string_view label_name(PeriodLabel label) {
    switch (label) {
        case PeriodLabel::P1: return "p1";
        case PeriodLabel::P2: return "p2";
        case PeriodLabel::P4: return "p4";
        case PeriodLabel::P8: return "p8";
        case PeriodLabel::Quasiperiodic: return "quasiperiodic";
        case PeriodLabel::Chaotic: return "chaotic";
        case PeriodLabel::Diverged: return "diverged";
    }
    return "?";
}

PeriodClass classify(const MapParams& params, const OrbitSpec& spec) {
    const Orbit orbit = iterate_orbit(params, spec);
    if (orbit.diverged) {
        return {PeriodLabel::Diverged, std::nullopt, false};
    }
    if (const auto p = detect_period(orbit.p4)) {
        switch (*p) {
            case 1: return {PeriodLabel::P1, std::nullopt, false};
            case 2: return {PeriodLabel::P2, std::nullopt, false};
            case 4: return {PeriodLabel::P4, std::nullopt, false};
            default: return {PeriodLabel::P8, std::nullopt, false};
        }
    }
    const LleResult l = lle(params, spec);
    if (l.diverged) {
        return {PeriodLabel::Diverged, l.value, false};
    }
    if (std::abs(l.value) <= kQuasiperiodicLleBand) {
        return {PeriodLabel::Quasiperiodic, l.value, false};
    }
    if (l.value > kQuasiperiodicLleBand) {
        return {PeriodLabel::Chaotic, l.value, false};
    }
    // Contracting but no period <= 8 detected: a long or odd cycle.
    return {PeriodLabel::Chaotic, l.value, true};
}

std::vector<BifurcationColumn> bifurcation_scan(const MapParams& base,
                                                double gamma_min,
                                                double gamma_max, int n_gamma,
                                                const OrbitSpec& spec,
                                                int n_points) {
    if (n_points < 1 || n_points > spec.n_keep) {
        throw std::invalid_argument("bifurcation_scan: n_points out of range");
    }
    const auto gammas = uniform_grid(gamma_min, gamma_max, n_gamma);
    std::vector<BifurcationColumn> out;
    out.reserve(gammas.size());
    for (double g : gammas) {
        MapParams p = base;
        p.gamma = g;
        const Orbit orbit = iterate_orbit(p, spec);
        BifurcationColumn col{g, {}, orbit.diverged};
        if (!orbit.diverged) {
            col.p4.assign(orbit.p4.end() - n_points, orbit.p4.end());
        }
        out.push_back(std::move(col));
    }
    return out;
}

std::vector<LleColumn> lle_scan(const MapParams& base, double gamma_min,
                                double gamma_max, int n_gamma,
                                const OrbitSpec& spec, double h_jacobian) {
    const auto gammas = uniform_grid(gamma_min, gamma_max, n_gamma);
    std::vector<LleColumn> out;
    out.reserve(gammas.size());
    for (double g : gammas) {
        MapParams p = base;
        p.gamma = g;
        out.push_back({g, lle(p, spec, h_jacobian)});
    }
    return out;
}

BasinGrid parameter_basin(const MapParams& base, double gamma_min,
                          double gamma_max, double e_min, double e_max,
                          int n_gamma, int n_e, const OrbitSpec& spec,
                          int n_threads) {
    BasinGrid grid;
    grid.n_gamma = n_gamma;
    grid.n_e = n_e;
    grid.gammas = uniform_grid(gamma_min, gamma_max, n_gamma);
    grid.e_ins = uniform_grid(e_min, e_max, n_e);
    grid.cells.resize(static_cast<size_t>(n_gamma) * n_e);

    if (n_threads <= 0) {
        n_threads = static_cast<int>(std::thread::hardware_concurrency());
        if (n_threads < 1) n_threads = 1;
    }

    // Cells are independent; results are keyed by grid index, so any
    // scheduling yields the same matrix.
    std::atomic<size_t> next{0};
    const size_t total = grid.cells.size();
    auto worker = [&] {
        for (size_t idx = next.fetch_add(1); idx < total;
             idx = next.fetch_add(1)) {
            const size_t ig = idx / n_e;
            const size_t ie = idx % n_e;
            MapParams p = base;
            p.gamma = grid.gammas[ig];
            p.e_in = grid.e_ins[ie];
            p.e_in_prime = grid.e_ins[ie];
            grid.cells[idx] = classify(p, spec);
        }
    };

    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(n_threads));
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return grid;
}

}  // namespace ikeda
