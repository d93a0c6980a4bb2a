#ifndef IKEDA_SPECTRUM_HPP
#define IKEDA_SPECTRUM_HPP

#include <complex>
#include <string_view>
#include <vector>

namespace ikeda {

using Complex = std::complex<double>;

enum class EpRegime { BelowEP, AtEP, AboveEP };

std::string_view regime_name(EpRegime regime);

/// Eigenvalue pair of the linear transfer matrix at one gamma.
/// lambda1 carries the + branch of the square root.
struct SpectralResult {
    double gamma;
    Complex lambda1;
    Complex lambda2;
    EpRegime regime;
};

struct TransferMatrix {
    Complex m11, m12;
    Complex m21, m22;
};

/// (1/2) [[e^{-g}, i e^{-g}], [i e^{g}, e^{g}]].
TransferMatrix transfer_matrix(double gamma);

/// Closed-form eigenvalues (cosh g +/- sqrt(cosh^2 g - 2)) / 2 with
/// regime classification against the exceptional point.
SpectralResult eigenvalues(double gamma);

/// acosh(sqrt 2) = ln(1 + sqrt 2).
double exceptional_point();

/// Gamma where the spectral radius of the linear map crosses 1:
/// acosh(3/2).
double linear_instability_threshold();

/// n uniformly spaced samples over [gamma_min, gamma_max].
/// Throws std::invalid_argument on an inverted range or n < 2.
std::vector<SpectralResult> eigenspectrum_sweep(double gamma_min,
                                                double gamma_max, int n);

}  // namespace ikeda

#endif
