#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#ifdef IKEDA_HAVE_EIGEN
#include <Eigen/Eigenvalues>
#endif

#include "ikeda/spectrum.hpp"

using namespace ikeda;

TEST_CASE("transfer_matrix closed form") {
    const TransferMatrix t0 = transfer_matrix(0.0);
    CHECK(std::abs(t0.m11 - Complex{0.5, 0.0}) < 1e-15);
    CHECK(std::abs(t0.m12 - Complex{0.0, 0.5}) < 1e-15);
    CHECK(std::abs(t0.m21 - Complex{0.0, 0.5}) < 1e-15);
    CHECK(std::abs(t0.m22 - Complex{0.5, 0.0}) < 1e-15);

    for (double g : {0.0, 0.5, 1.0, 2.0}) {
        const TransferMatrix t = transfer_matrix(g);
        const Complex det = t.m11 * t.m22 - t.m12 * t.m21;
        CHECK(std::abs(det - Complex{0.5, 0.0}) < 1e-14);
    }

    const TransferMatrix t1 = transfer_matrix(1.0);
    CHECK((t1.m11 + t1.m22).real() ==
          doctest::Approx(std::cosh(1.0)).epsilon(1e-12));
}

TEST_CASE("eigenvalues at landmark gammas") {
    const SpectralResult r0 = eigenvalues(0.0);
    CHECK(std::abs(r0.lambda1 - Complex{0.5, 0.5}) < 1e-14);
    CHECK(std::abs(r0.lambda2 - Complex{0.5, -0.5}) < 1e-14);
    CHECK(std::abs(std::abs(r0.lambda1) - 1.0 / std::sqrt(2.0)) < 1e-14);
    CHECK(r0.regime == EpRegime::BelowEP);

    const SpectralResult rep = eigenvalues(exceptional_point());
    CHECK(std::abs(rep.lambda1 - rep.lambda2) <= 1e-7);
    CHECK(std::abs(rep.lambda1.real() - std::sqrt(2.0) / 2.0) < 1e-7);

    const SpectralResult r12 = eigenvalues(1.2);
    CHECK(r12.regime == EpRegime::AboveEP);
    CHECK(r12.lambda1.imag() == 0.0);
    CHECK(r12.lambda1.real() == doctest::Approx(1.4707).epsilon(1e-4));
}

TEST_CASE("exceptional_point is acosh(sqrt 2), not the oft-quoted 0.88116") {
    const double ep = exceptional_point();
    CHECK(ep == doctest::Approx(0.88137358701954303).epsilon(1e-15));
    CHECK(std::cosh(ep) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    // rounds to 0.88137 at 5 decimals, not 0.88116
    CHECK(std::round(ep * 1e5) / 1e5 == doctest::Approx(0.88137));
}

TEST_CASE("linear_instability_threshold: spectral radius crosses 1") {
    const double th = linear_instability_threshold();
    CHECK(std::abs(std::abs(eigenvalues(th).lambda1) - 1.0) <= 1e-12);
    CHECK(std::abs(eigenvalues(0.9).lambda1) < 1.0);
    CHECK(std::abs(eigenvalues(1.0).lambda1) > 1.0);
}

TEST_CASE("spectral invariants over random gammas") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> gam(0.0, 3.0);
    for (int i = 0; i < 1000; ++i) {
        const double g = gam(rng);
        const SpectralResult r = eigenvalues(g);
        CHECK(std::abs(r.lambda1 * r.lambda2 - Complex{0.5, 0.0}) <= 1e-12);
        CHECK(std::abs(r.lambda1 + r.lambda2 - Complex{std::cosh(g), 0.0}) <=
              1e-12);
        if (r.regime == EpRegime::BelowEP) {
            CHECK(std::abs(std::abs(r.lambda1) - 1.0 / std::sqrt(2.0)) <= 1e-12);
            CHECK(std::abs(std::abs(r.lambda2) - 1.0 / std::sqrt(2.0)) <= 1e-12);
            CHECK(r.lambda1.real() == doctest::Approx(r.lambda2.real()));
        } else if (r.regime == EpRegime::AboveEP) {
            CHECK(r.lambda1.imag() == 0.0);
            CHECK(r.lambda2.imag() == 0.0);
            if (g > exceptional_point() + 1e-9) {
                CHECK(std::abs(r.lambda1 - r.lambda2) > 0.0);
            }
        }
    }
}

#ifdef IKEDA_HAVE_EIGEN
TEST_CASE("closed form agrees with a generic 2x2 eigensolver") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> gam(0.0, 3.0);
    for (int i = 0; i < 1000; ++i) {
        const double g = gam(rng);
        const TransferMatrix t = transfer_matrix(g);
        Eigen::Matrix2cd m;
        m << t.m11, t.m12, t.m21, t.m22;
        Eigen::ComplexEigenSolver<Eigen::Matrix2cd> solver(m, false);
        Complex a = solver.eigenvalues()(0);
        Complex b = solver.eigenvalues()(1);
        const SpectralResult r = eigenvalues(g);
        // Match regardless of the solver's ordering.
        const double direct =
            std::max(std::abs(a - r.lambda1), std::abs(b - r.lambda2));
        const double swapped =
            std::max(std::abs(a - r.lambda2), std::abs(b - r.lambda1));
        CHECK(std::min(direct, swapped) <= 1e-10);
    }
}
#endif

TEST_CASE("eigenspectrum_sweep") {
    CHECK_THROWS_AS(eigenspectrum_sweep(1.0, 0.5, 10), std::invalid_argument);
    CHECK_THROWS_AS(eigenspectrum_sweep(0.0, 1.0, 1), std::invalid_argument);

    const auto sweep = eigenspectrum_sweep(0.0, 1.5, 151);
    CHECK(sweep.size() == 151);
    int transitions = 0;
    double transition_gamma = 0.0;
    for (size_t i = 1; i < sweep.size(); ++i) {
        CHECK(sweep[i].gamma > sweep[i - 1].gamma);
        const bool below_prev = sweep[i - 1].regime == EpRegime::BelowEP;
        const bool below_now = sweep[i].regime == EpRegime::BelowEP;
        if (below_prev != below_now) {
            ++transitions;
            transition_gamma = sweep[i].gamma;
        }
    }
    CHECK(transitions == 1);
    const double cell = 1.5 / 150.0;
    CHECK(std::abs(transition_gamma - exceptional_point()) <= cell);

    for (const auto& r : sweep) {
        if (r.gamma < exceptional_point() - 1e-9) {
            CHECK(std::abs(r.lambda1.imag()) > 0.0);
            CHECK(std::abs(std::abs(r.lambda1) - 1.0 / std::sqrt(2.0)) <= 1e-12);
        }
    }

    const auto tiny = eigenspectrum_sweep(1.0, 1.0 + 1e-6, 2);
    CHECK(tiny[0].regime == EpRegime::AboveEP);
    CHECK(tiny[1].regime == EpRegime::AboveEP);
    CHECK(tiny[0].lambda1.imag() == 0.0);
    CHECK(tiny[1].lambda1.imag() == 0.0);
}
