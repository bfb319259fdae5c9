#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "pasts/errors.hpp"
#include "pasts/states.hpp"

using pasts::ChannelSpec;
using pasts::StateSpec;

TEST(StateSpec, RejectsInvalid) {
    EXPECT_THROW(StateSpec({-0.1, 0.0, 0}).validate(), pasts::InvalidParameter);
    EXPECT_THROW(StateSpec({0.1, -1.0, 0}).validate(), pasts::InvalidParameter);
    EXPECT_THROW(StateSpec({0.1, 0.0, -1}).validate(), pasts::InvalidParameter);
    EXPECT_THROW(StateSpec({std::nan(""), 0.0, 0}).validate(), pasts::InvalidParameter);
    EXPECT_THROW(ChannelSpec({-1.0, 0.1}).validate(), pasts::InvalidParameter);
    EXPECT_THROW(ChannelSpec({0.0, std::numeric_limits<double>::infinity()}).validate(),
                 pasts::InvalidParameter);
    EXPECT_NO_THROW(StateSpec({0.0, 0.0, 0}).validate());
}

TEST(StsCoefficients, Vacuum) {
    const auto c = pasts::sts_coefficients(0.0, 0.0);
    EXPECT_EQ(c.A, 1.0);
    EXPECT_EQ(c.B, 0.0);
    EXPECT_EQ(c.C, 0.0);
    EXPECT_EQ(c.B_bar, 1.0);
    EXPECT_EQ(c.D, 0.0);
}

TEST(StsCoefficients, ThermalLimit) {
    for (double n : {0.2, 1.0, 3.5}) {
        const auto c = pasts::sts_coefficients(0.0, n);
        EXPECT_NEAR(c.A, (n + 1) * (n + 1), 1e-14);
        EXPECT_NEAR(c.D, n * n / ((n + 1) * (n + 1)), 1e-14);
    }
}

TEST(StsCoefficients, ReferenceValues) {
    const auto c = pasts::sts_coefficients(0.3, 1.0);
    EXPECT_NEAR(c.A, 4.278198, 1e-6);
    EXPECT_NEAR(c.B_bar, 2.278198, 1e-6);
    EXPECT_NEAR(c.D, 0.168716, 1e-6);
}

TEST(StsCoefficients, Identities) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ul(0.0, 2.0), un(0.0, 5.0);
    for (int i = 0; i < 1000; ++i) {
        const double l = ul(rng), n = un(rng);
        const auto c = pasts::sts_coefficients(l, n);
        EXPECT_NEAR(c.D, c.B * c.B - c.C * c.C, 1e-12);
        EXPECT_NEAR(c.B_bar, c.A - n * (n + 1), 1e-12 * c.A);
        EXPECT_NEAR(c.tau1_sq * c.tau2_sq, c.A, 1e-12 * c.A);
    }
}

TEST(WignerCoefficients, A4IsA3PlusOne) {
    for (double l : {0.0, 0.4, 1.3}) {
        for (double n : {0.0, 0.7}) {
            const auto w = pasts::wigner_coefficients(l, n);
            EXPECT_NEAR(w.A4 - w.A3, 1.0, 1e-15);
            EXPECT_NEAR(w.A3 * w.A3 - w.A2 * w.A2, 1.0 / ((2 * n + 1) * (2 * n + 1)), 1e-14);
        }
    }
}

TEST(EvolvedCoefficients, RequiresPositiveTime) {
    EXPECT_THROW((void)pasts::evolved_coefficients(0.3, 0.3, {0.2, 0.0}), pasts::InvalidParameter);
}

TEST(EvolvedCoefficients, ReferencePointIsFinite) {
    const auto e = pasts::evolved_coefficients(0.3, 0.3, {0.2, 0.05});
    EXPECT_GT(e.G, 0.0);
    for (double v : {e.g0, e.g1, e.g2, e.g3, e.G, e.Delta1, e.Delta2, e.chi, e.omega_coeff,
                     e.omega_conj_coeff, e.w0_prefactor, e.w0_quad}) {
        EXPECT_TRUE(std::isfinite(v));
    }
}

TEST(EvolvedCoefficients, ShortTimeLimit) {
    for (double l : {0.1, 0.6}) {
        for (double n : {0.0, 0.3, 2.0}) {
            const auto e = pasts::evolved_coefficients(l, n, {0.4, 1e-6});
            EXPECT_NEAR(e.Delta2, std::sinh(2 * l) / (4 * (2 * n + 1)), 1e-4);
            EXPECT_NEAR(e.chi, -(std::cosh(l) * std::cosh(l) + n) / (2 * n + 1), 1e-4);
        }
    }
}

TEST(EvolvedCoefficients, LongTimeLimit) {
    for (double l : {0.1, 0.6}) {
        for (double n : {0.0, 0.3, 2.0}) {
            const auto e = pasts::evolved_coefficients(l, n, {0.4, 20.0});
            EXPECT_NEAR(e.Delta2, (2 * n + 1) * std::sinh(2 * l) / 4, 1e-12);
            EXPECT_NEAR(e.chi, n * std::cosh(2 * l) + std::cosh(l) * std::cosh(l), 1e-12);
        }
    }
}

TEST(EvolvedCoefficients, GStaysPositive) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> ul(0.0, 2.0), un(0.0, 5.0), ut(-9.0, 1.5);
    for (int i = 0; i < 2000; ++i) {
        const auto e = pasts::evolved_coefficients(ul(rng), un(rng), {un(rng), std::pow(10.0, ut(rng))});
        EXPECT_GT(e.G, 0.0);
    }
}

TEST(FidelityCoefficients, K2Identity) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ul(0.0, 2.0), un(0.0, 5.0);
    for (int i = 0; i < 1000; ++i) {
        const auto f = pasts::fidelity_coefficients(ul(rng), un(rng));
        const double ref = f.K1 * f.K1 - 4 * f.K0 * f.K0;
        EXPECT_NEAR(f.K2, ref, 1e-12 * std::max(1.0, std::abs(ref)));
    }
}
