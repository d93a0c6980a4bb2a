#ifndef IKEDA_ORBIT_HPP
#define IKEDA_ORBIT_HPP

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ikeda/core_map.hpp"

namespace ikeda {

/// Iteration budget. Defaults are the reference budget of 1500 transient
/// + 2000 steady-state iterations from the origin.
struct OrbitSpec {
    int n_transient = 1500;
    int n_keep = 2000;
    FieldState initial{};
};

/// Recorded steady-state trajectory. p1/p4 hold |E1|^2 / |E4|^2 per
/// sample. A diverged orbit is truncated at the offending iteration.
struct Orbit {
    std::vector<FieldState> states;
    std::vector<double> p1;
    std::vector<double> p4;
    bool diverged = false;
};

/// Powers above this mark the orbit Diverged; keeps sweeps total.
inline constexpr double kPowerCap = 1e12;

/// |LLE| at or below this band classifies as quasiperiodic.
inline constexpr double kQuasiperiodicLleBand = 0.005;

Orbit iterate_orbit(const MapParams& params, const OrbitSpec& spec);

/// Smallest p in {1,2,4,8} (powers of two up to max_period) such that
/// |x[j+p]-x[j]| <= abs_tol + rel_tol*max|x| over the last 256 samples.
/// Throws std::invalid_argument when the series is shorter than
/// 4*max_period.
std::optional<int> detect_period(std::span<const double> series,
                                 int max_period = 8, double rel_tol = 1e-5,
                                 double abs_tol = 1e-9);

struct LleResult {
    double value = 0.0;
    bool diverged = false;
};

/// Largest Lyapunov exponent by the Benettin tangent-vector method over
/// the real 4-vector embedding. Diverged orbits return the average
/// accumulated up to truncation, flagged.
LleResult lle(const MapParams& params, const OrbitSpec& spec,
              double h_jacobian = 1e-6);

enum class PeriodLabel { P1, P2, P4, P8, Quasiperiodic, Chaotic, Diverged };

std::string_view label_name(PeriodLabel label);

struct PeriodClass {
    PeriodLabel label;
    std::optional<double> lle;  // attached when computed
    // Negative-LLE orbit with no period <= 8: labelled Chaotic but
    // annotated as a long-period cycle.
    bool long_period = false;
};

PeriodClass classify(const MapParams& params, const OrbitSpec& spec);

struct BifurcationColumn {
    double gamma;
    std::vector<double> p4;  // last n_points steady-state samples
    bool diverged = false;
};

/// Non-continuation scan: every gamma restarts from spec.initial.
std::vector<BifurcationColumn> bifurcation_scan(const MapParams& base,
                                                double gamma_min,
                                                double gamma_max, int n_gamma,
                                                const OrbitSpec& spec,
                                                int n_points = 200);

struct LleColumn {
    double gamma;
    LleResult result;
};

std::vector<LleColumn> lle_scan(const MapParams& base, double gamma_min,
                                double gamma_max, int n_gamma,
                                const OrbitSpec& spec,
                                double h_jacobian = 1e-6);

/// Period-class label per (gamma, input-amplitude) cell, row-major with
/// gamma as the slow index. Output is a pure function of the arguments
/// regardless of how many workers evaluate it.
struct BasinGrid {
    int n_gamma = 0;
    int n_e = 0;
    std::vector<double> gammas;
    std::vector<double> e_ins;
    std::vector<PeriodClass> cells;  // cells[ig * n_e + ie]

    const PeriodClass& at(int ig, int ie) const {
        return cells[static_cast<size_t>(ig) * n_e + ie];
    }
};

/// E_in = E'_in = e (real) per cell. n_threads 0 means one worker per
/// hardware thread.
BasinGrid parameter_basin(const MapParams& base, double gamma_min,
                          double gamma_max, double e_min, double e_max,
                          int n_gamma, int n_e, const OrbitSpec& spec,
                          int n_threads = 0);

}  // namespace ikeda

#endif
