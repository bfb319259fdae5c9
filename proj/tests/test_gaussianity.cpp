#include <gtest/gtest.h>

#include <cmath>

#include "pasts/analytics.hpp"
#include "pasts/fock_oracle.hpp"
#include "pasts/gaussianity.hpp"

using pasts::StateSpec;
namespace g = pasts::gaussianity;

TEST(Purity, Examples) {
    EXPECT_EQ(g::purity_sts(0.0), 1.0);
    EXPECT_EQ(g::purity_sts(0.5), 0.5);
}

TEST(Fidelity, Examples) {
    EXPECT_NEAR(g::fidelity({0.7, 0.4, 0}), 1.0, 1e-14);
    EXPECT_NEAR(g::fidelity({0.3, 0.2, 1}), 0.152819, 1e-6);
    const auto k = pasts::fidelity_coefficients(0.3, 0.2);
    EXPECT_NEAR(g::fidelity({0.3, 0.2, 1}), k.K1 / pasts::sts_coefficients(0.3, 0.2).B_bar, 1e-14);
}

TEST(Fidelity, SubtractedNormalizationExamples) {
    EXPECT_EQ(g::subtracted_normalization({0.3, 1.0, 0}), 1.0);
    const auto k = pasts::fidelity_coefficients(0.3, 1.0);
    EXPECT_NEAR(g::subtracted_normalization({0.3, 1.0, 1}), k.H, 1e-14);
    EXPECT_NEAR(g::subtracted_normalization({0.3, 1.0, 2}), 3 * k.H * k.H - k.Z, 1e-12);
}

TEST(Fidelity, RatioExample) {
    EXPECT_EQ(g::fidelity_ratio({0.3, 0.2, 0}), 1.0);
    EXPECT_NEAR(g::fidelity_ratio({0.3, 0.2, 1}), 0.248022, 1e-6);
}

TEST(Fidelity, Monotonicity) {
    for (int m = 0; m < 3; ++m) {
        EXPECT_GT(g::fidelity({0.3, 0.2, m}), g::fidelity({0.3, 0.2, m + 1}));
    }
    for (int m = 1; m <= 3; ++m) {
        for (int i = 0; i < 100; ++i) {
            EXPECT_LT(g::fidelity({i / 100.0, 0.2, m}), g::fidelity({(i + 1) / 100.0, 0.2, m}));
        }
    }
}

TEST(Fidelity, RatioBelowOne) {
    for (int m = 1; m <= 5; ++m) {
        for (double l : {0.05, 0.3, 1.0, 1.5}) {
            for (double n : {0.0, 0.2, 1.0, 3.0}) {
                EXPECT_LT(g::fidelity_ratio({l, n, m}), 1.0);
            }
        }
    }
}

TEST(Fidelity, MatchesOracle) {
    const auto sts = pasts::fock::build_sts(0.3, 0.2, 80);
    for (int m = 0; m <= 3; ++m) {
        const auto added = pasts::fock::add_photons(sts, m);
        const auto sub = pasts::fock::subtract_photons(sts, m);
        const double p = pasts::fock::purity(sts);
        EXPECT_NEAR(g::fidelity({0.3, 0.2, m}), pasts::fock::overlap(sts, added) / p, 1e-10);
        EXPECT_NEAR(g::fidelity_subtracted({0.3, 0.2, m}), pasts::fock::overlap(sts, sub) / p, 1e-10);
        EXPECT_NEAR(g::subtracted_normalization({0.3, 0.2, m}), sub.trace_raw, 1e-10);
    }
}
