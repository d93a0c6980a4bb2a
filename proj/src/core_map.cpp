#include "ikeda/core_map.hpp"

#include <cmath>
#include <limits>

namespace ikeda {

namespace {

const double kSqrt2 = std::sqrt(2.0);
const Complex kI{0.0, 1.0};

bool component_ok(double x) {
    return std::isfinite(x) && std::abs(x) <= kOverflowCap;
}

}  // namespace

double psi(double intensity, const MapParams& params) {
    return params.beta / (1.0 + params.eta * intensity);
}

double psi_pm(double intensity, Sign sign, const MapParams& params) {
    const double g = sign == Sign::Plus ? params.gamma : -params.gamma;
    return params.beta * std::exp(g) / (1.0 + params.eta * intensity);
}

IntermediateFields intermediate_fields(const FieldState& state) {
    return {(state.e1 + kI * state.e4) / kSqrt2,
            (kI * state.e1 + state.e4) / kSqrt2};
}

bool is_finite(const FieldState& state) {
    return component_ok(state.e1.real()) && component_ok(state.e1.imag()) &&
           component_ok(state.e4.real()) && component_ok(state.e4.imag());
}

FieldState step(const FieldState& state, const MapParams& params) {
    if (!is_finite(state)) {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        return {{nan, nan}, {nan, nan}};
    }

    const double g = params.gamma;
    const auto [e2, e3] = intermediate_fields(state);

    const Complex a = std::exp(-g / 2.0) * params.e_in / kSqrt2;
    const Complex b = std::exp(-g) * (state.e1 + kI * state.e4) / 2.0;
    const Complex c = std::exp(g / 2.0) * params.e_in_prime / kSqrt2;
    const Complex d = std::exp(g) * (kI * state.e1 + state.e4) / 2.0;

    const double phase1 = psi(std::norm(state.e1), params) + params.phi_l;
    const double phase4 = psi(std::norm(state.e4), params) + params.phi_l;
    const double phase2 = psi_pm(std::norm(e2), Sign::Minus, params) + params.phi_l;
    const double phase3 = psi_pm(std::norm(e3), Sign::Plus, params) + params.phi_l;

    FieldState next;
    next.e1 = kI * std::exp(kI * phase1) * a + std::exp(kI * (phase2 + phase1)) * b;
    next.e4 = kI * std::exp(kI * phase4) * c + std::exp(kI * (phase3 + phase4)) * d;
    return next;
}

Vec4 to_vec(const FieldState& state) {
    return {state.e1.real(), state.e1.imag(), state.e4.real(), state.e4.imag()};
}

FieldState from_vec(const Vec4& v) {
    return {{v[0], v[1]}, {v[2], v[3]}};
}

Mat4 jacobian(const FieldState& state, const MapParams& params, double h) {
    const Vec4 x = to_vec(state);
    Mat4 j{};
    for (int c = 0; c < 4; ++c) {
        Vec4 xp = x;
        Vec4 xm = x;
        xp[c] += h;
        xm[c] -= h;
        const Vec4 fp = to_vec(step(from_vec(xp), params));
        const Vec4 fm = to_vec(step(from_vec(xm), params));
        for (int r = 0; r < 4; ++r) {
            j[r][c] = (fp[r] - fm[r]) / (2.0 * h);
        }
    }
    return j;
}

}  // namespace ikeda
