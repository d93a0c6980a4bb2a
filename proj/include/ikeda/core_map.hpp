#ifndef IKEDA_CORE_MAP_HPP
#define IKEDA_CORE_MAP_HPP

#include <array>
#include <complex>

namespace ikeda {

using Complex = std::complex<double>;

/// All scalar knobs of the two-loop map. Defaults are the reference
/// configuration used throughout the analysis tools.
struct MapParams {
    double gamma = 0.0;      // gain/loss coefficient, >= 0
    double beta = 1.0;       // nonlinear phase coefficient
    double eta = 0.001;      // saturation strength, >= 0
    Complex e_in{0.65, 0.0};       // drive of the attenuated loop
    Complex e_in_prime{0.65, 0.0}; // drive of the amplified loop
    double phi_l = 0.0;      // linear phase per loop segment
};

/// The pair of loop fields (E1, E4); bijective with the real 4-vector
/// (Re E1, Im E1, Re E4, Im E4).
struct FieldState {
    Complex e1{0.0, 0.0};
    Complex e4{0.0, 0.0};
};

/// Coupler outputs E2, E3 derived from (E1, E4).
struct IntermediateFields {
    Complex e2;
    Complex e3;
};

enum class Sign { Plus, Minus };

using Vec4 = std::array<double, 4>;
using Mat4 = std::array<std::array<double, 4>, 4>;

/// Components with magnitude beyond this are treated as overflowed
/// before they are squared into intensities.
inline constexpr double kOverflowCap = 1e150;

/// Saturable nonlinear phase beta / (1 + eta*I).
double psi(double intensity, const MapParams& params);

/// Gain-weighted phase beta*e^{+/-gamma} / (1 + eta*I).
double psi_pm(double intensity, Sign sign, const MapParams& params);

/// Applies the 50:50 coupler (1/sqrt2)[[1, i], [i, 1]] to (e1, e4).
IntermediateFields intermediate_fields(const FieldState& state);

/// One cavity round trip. Overflowed inputs yield a non-finite state
/// which callers convert to a Diverged classification.
FieldState step(const FieldState& state, const MapParams& params);

/// True when every real component is finite and within the overflow cap.
bool is_finite(const FieldState& state);

Vec4 to_vec(const FieldState& state);
FieldState from_vec(const Vec4& v);

/// Central-difference Jacobian of step over the real 4-vector embedding.
/// Non-finite entries propagate to the result.
Mat4 jacobian(const FieldState& state, const MapParams& params, double h = 1e-6);

}  // namespace ikeda

#endif
