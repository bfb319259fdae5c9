#include <gtest/gtest.h>

#include <cmath>

#include "pasts/errors.hpp"
#include "pasts/fock_oracle.hpp"
#include "pasts/kernels.hpp"

namespace f = pasts::fock;
using Complex = std::complex<double>;

TEST(BuildSts, ThermalDiagonal) {
    const double n = 0.7;
    const auto s = f::build_sts(0.0, n, 80);
    for (int k = 0; k < 20; ++k) {
        EXPECT_NEAR(s.rho(k, k).real(), std::pow(n, k) / std::pow(n + 1, k + 1), 1e-14);
    }
    EXPECT_NEAR(std::abs(s.rho(0, 1)), 0.0, 1e-15);
    s.check_invariants();
}

TEST(BuildSts, SqueezedVacuumIsPure) {
    const double l = 0.6;
    const auto s = f::build_sts(l, 0.0, 80);
    EXPECT_NEAR(s.rho(0, 0).real(), 1.0 / std::cosh(l), 1e-12);
    EXPECT_NEAR(f::purity(s), 1.0, 1e-12);
    EXPECT_NEAR(f::mean_photon(s), std::sinh(l) * std::sinh(l), 1e-12);
    // <2|S|0>/<0|S|0> = tanh(l)/sqrt2 with the library's sign.
    EXPECT_NEAR(s.rho(2, 0).real() / s.rho(0, 0).real(), std::tanh(l) / std::sqrt(2.0), 1e-12);
}

TEST(BuildSts, PurityIndependentOfSqueezing) {
    for (double l : {0.0, 0.3, 0.6}) {
        EXPECT_NEAR(f::purity(f::build_sts(l, 0.5, 80)), 0.5, 1e-10);
    }
}

TEST(BuildSts, RejectsStarvedTruncation) {
    EXPECT_THROW((void)f::build_sts(1.2, 0.1, 40), pasts::TruncationError);
    EXPECT_THROW((void)f::build_sts(0.0, 5.0, 40), pasts::TruncationError);
    EXPECT_THROW((void)f::build_sts(0.1, 0.1, 1), pasts::InvalidParameter);
}

TEST(AddPhotons, NormalizationAnchors) {
    for (double n : {0.0, 0.5, 1.0}) {
        const auto s = f::build_sts(0.0, n, 80);
        for (int m = 0; m <= 4; ++m) {
            const auto a = f::add_photons(s, m);
            EXPECT_NEAR(a.trace_raw, pasts::kernels::factorial(m) * std::pow(n + 1, m),
                        1e-9 * a.trace_raw);
            a.check_invariants();
        }
    }
    EXPECT_NEAR(f::add_photons(f::build_sts(0.3, 1.0, 80), 1).trace_raw, 2.278198, 1e-6);
}

TEST(AddPhotons, IdentityForZero) {
    const auto s = f::build_sts(0.4, 0.2, 60);
    const auto a = f::add_photons(s, 0);
    EXPECT_EQ((a.rho - s.rho).cwiseAbs().maxCoeff(), 0.0);
}

TEST(AddPhotons, RejectsLostWeight) {
    EXPECT_THROW((void)f::add_photons(f::build_sts(0.5, 1.0, 60), 3), pasts::TruncationError);
    EXPECT_THROW((void)f::add_photons(f::build_sts(0.0, 0.0, 12), 4), pasts::TruncationError);
}

TEST(SubtractPhotons, Basics) {
    const auto s = f::build_sts(0.3, 1.0, 80);
    const auto sub = f::subtract_photons(s, 1);
    EXPECT_NEAR(sub.trace_raw, f::mean_photon(s), 1e-12);
    sub.check_invariants();
    EXPECT_THROW((void)f::subtract_photons(f::build_sts(0.0, 0.0, 20), 1), pasts::DomainError);
}

TEST(Lindblad, ZeroTimeUnchanged) {
    const auto s = f::add_photons(f::build_sts(0.3, 0.3, 40), 1);
    const auto e = f::lindblad_evolve(s, {0.2, 0.0});
    EXPECT_EQ((e.rho - s.rho).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Lindblad, RelaxationLaw) {
    const auto s = f::add_photons(f::build_sts(0.3, 0.3, 60), 2);
    const double n0 = f::mean_photon(s);
    const double N = 0.4;
    for (double kt : {0.1, 0.7, 2.0}) {
        const auto e = f::lindblad_evolve(s, {N, kt});
        const double x = std::exp(-2 * kt);
        EXPECT_NEAR(f::mean_photon(e), x * n0 + (1 - x) * N, 1e-9);
        e.check_invariants();
    }
}

TEST(Lindblad, ReachesBathThermalState) {
    const double N = 0.2;
    const auto s = f::add_photons(f::build_sts(0.3, 0.3, 40), 1);
    const auto e = f::lindblad_evolve(s, {N, 5.0});
    for (int k = 0; k < 15; ++k) {
        EXPECT_NEAR(e.rho(k, k).real(), std::pow(N, k) / std::pow(N + 1, k + 1), 1e-4);
    }
    EXPECT_NEAR(f::mean_photon(e), N, 1e-4);
}

TEST(Displacement, MatchesColumnRecursion) {
    // <m|D|n+1> = (sqrt(m) <m-1|D|n> - conj(beta) <m|D|n>) / sqrt(n+1), from
    // D^+ a D = a + beta.
    const Complex beta{0.7, -0.4};
    const int dim = 30;
    const auto D = f::displacement_matrix(beta, dim);
    EXPECT_NEAR(std::abs(D(0, 0) - std::exp(-0.5 * std::norm(beta))), 0.0, 1e-15);
    for (int n = 0; n + 1 < dim; ++n) {
        for (int m = 0; m < dim; ++m) {
            Complex rec = -std::conj(beta) * D(m, n);
            if (m > 0) rec += std::sqrt(static_cast<double>(m)) * D(m - 1, n);
            rec /= std::sqrt(n + 1.0);
            EXPECT_NEAR(std::abs(D(m, n + 1) - rec), 0.0, 1e-12) << m << ' ' << n;
        }
    }
}

TEST(Displacement, UnitaryOnLowBlock) {
    const auto D = f::displacement_matrix({1.1, 0.5}, 120);
    const Eigen::MatrixXcd P = D.adjoint() * D;
    EXPECT_LT((P.topLeftCorner(40, 40) - Eigen::MatrixXcd::Identity(40, 40)).cwiseAbs().maxCoeff(),
              1e-12);
}

TEST(WignerParity, Examples) {
    const auto vac = f::build_sts(0.0, 0.0, 30);
    EXPECT_NEAR(f::wigner_parity(vac, {0, 0}), 1.0 / M_PI, 1e-15);
    EXPECT_NEAR(f::wigner_parity(vac, {1, 0}), std::exp(-2.0) / M_PI, 1e-14);
    EXPECT_NEAR(f::wigner_parity(f::add_photons(vac, 1), {0, 0}), -1.0 / M_PI, 1e-15);
    const auto pasts_state = f::add_photons(f::build_sts(0.3, 0.1, 80), 1);
    EXPECT_NEAR(f::wigner_parity(pasts_state, {0, 0}), -0.217663, 1e-6);
    EXPECT_THROW((void)f::wigner_parity(vac, {3, 0}), pasts::TruncationError);
}

TEST(WignerParity, IntegratesToHalf) {
    const auto s = f::add_photons(f::build_sts(0.3, 0.1, 100), 1);
    const double r = 4.4, h = 0.2;
    double acc = 0.0;
    for (double x = -r + h / 2; x < r; x += h) {
        for (double y = -r + h / 2; y < r; y += h) {
            if (x * x + y * y < r * r) acc += f::wigner_parity(s, {x, y});
        }
    }
    EXPECT_NEAR(acc * h * h, 0.5, 1e-6);
}

TEST(SqueezedNumber, HermiteIdentity) {
    EXPECT_LT(f::squeezed_number_identity_check(0, 0.3), 1e-15);
    for (double l : {0.1, 0.3, 0.8}) {
        for (int n = 0; n <= 4; ++n) EXPECT_LT(f::squeezed_number_identity_check(n, l), 1e-8);
    }
}

TEST(SignConvention, OnlyWignerDistinguishes) {
    pasts::fock::OracleOptions flipped;
    flipped.flip_squeeze_sign = true;
    const auto a = f::build_sts(0.5, 0.2, 60);
    const auto b = f::build_sts(0.5, 0.2, 60, flipped);
    for (int k = 0; k < 10; ++k) EXPECT_NEAR(a.rho(k, k).real(), b.rho(k, k).real(), 1e-13);
    // The flipped state is the original rotated by 90 degrees in phase space.
    EXPECT_NEAR(f::wigner_parity(a, {0.8, 0.1}), f::wigner_parity(b, {-0.1, 0.8}), 1e-12);
    EXPECT_GT(std::abs(f::wigner_parity(a, {0.8, 0.1}) - f::wigner_parity(b, {0.8, 0.1})), 1e-3);
}
