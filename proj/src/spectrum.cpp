#include "ikeda/spectrum.hpp"

#include <cmath>
#include <stdexcept>

namespace ikeda {

namespace {
constexpr double kAtEpBand = 1e-12;  // |cosh^2 g - 2| within this is AtEP
const Complex kI{0.0, 1.0};
}  // namespace

std::string_view regime_name(EpRegime regime) {
    switch (regime) {
        case EpRegime::BelowEP: return "below_ep";
        case EpRegime::AtEP: return "at_ep";
        case EpRegime::AboveEP: return "above_ep";
    }
    return "?";
}

TransferMatrix transfer_matrix(double gamma) {
    const double em = std::exp(-gamma);
    const double ep = std::exp(gamma);
    return {0.5 * em, 0.5 * kI * em, 0.5 * kI * ep, 0.5 * ep};
}

SpectralResult eigenvalues(double gamma) {
    const double ch = std::cosh(gamma);
    const double disc = ch * ch - 2.0;

    EpRegime regime;
    if (std::abs(disc) <= kAtEpBand) {
        regime = EpRegime::AtEP;
    } else if (disc < 0.0) {
        regime = EpRegime::BelowEP;
    } else {
        regime = EpRegime::AboveEP;
    }

    const Complex root = std::sqrt(Complex{disc, 0.0});
    return {gamma, (ch + root) / 2.0, (ch - root) / 2.0, regime};
}

double exceptional_point() {
    return std::log(1.0 + std::sqrt(2.0));
}

double linear_instability_threshold() {
    return std::acosh(1.5);
}

std::vector<SpectralResult> eigenspectrum_sweep(double gamma_min,
                                                double gamma_max, int n) {
    if (!(gamma_min < gamma_max)) {
        throw std::invalid_argument("eigenspectrum_sweep: empty or inverted range");
    }
    if (n < 2) {
        throw std::invalid_argument("eigenspectrum_sweep: need at least 2 samples");
    }
    std::vector<SpectralResult> out;
    out.reserve(static_cast<size_t>(n));
    const double dg = (gamma_max - gamma_min) / (n - 1);
    for (int i = 0; i < n; ++i) {
        out.push_back(eigenvalues(gamma_min + i * dg));
    }
    return out;
}

}  // namespace ikeda
