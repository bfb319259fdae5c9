#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "pasts/kernels.hpp"

namespace {

using pasts::kernels::Complex;
namespace k = pasts::kernels;

// Explicit sums, evaluated term by term.
double legendre_sum(int m, double x, double y) {
    double acc = 0.0;
    for (int j = 0; 2 * j <= m; ++j) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        acc += sign * k::binomial(m, j) * k::binomial(2 * m - 2 * j, m) * std::pow(x, m - 2 * j) *
               std::pow(y, j);
    }
    return std::ldexp(acc, -m);
}

Complex hermite_sum(int n, Complex u, double d) {
    Complex acc = 0.0;
    for (int j = 0; 2 * j <= n; ++j) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        acc += sign * k::factorial(n) / (k::factorial(j) * k::factorial(n - 2 * j)) *
               std::pow(u, n - 2 * j) * std::pow(d, j);
    }
    return acc;
}

}  // namespace

TEST(Factorial, SmallValuesExact) {
    EXPECT_EQ(k::factorial(0), 1.0);
    EXPECT_EQ(k::factorial(5), 120.0);
    EXPECT_EQ(k::factorial(20), 2432902008176640000.0);
    EXPECT_NEAR(k::factorial(25) / 1.5511210043330986e25, 1.0, 1e-12);
    EXPECT_TRUE(std::isinf(k::factorial(171)));
}

TEST(Factorial, FallingAndBinomial) {
    EXPECT_EQ(k::falling_factorial(7, 3), 210.0);
    EXPECT_EQ(k::falling_factorial(4, 0), 1.0);
    EXPECT_EQ(k::binomial(10, 3), 120.0);
    EXPECT_EQ(k::binomial(6, 0), 1.0);
}

TEST(ScaledLegendre, Examples) {
    EXPECT_EQ(k::scaled_legendre(0, 3.7, -2.0), 1.0);
    EXPECT_EQ(k::scaled_legendre(1, -0.42, 9.0), -0.42);
    EXPECT_DOUBLE_EQ(k::scaled_legendre(2, 2.0, 1.0), 5.5);
}

TEST(ScaledLegendre, MatchesExplicitSumIncludingNegativeY) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> ux(-3.0, 3.0), uy(-4.0, 4.0);
    for (int trial = 0; trial < 500; ++trial) {
        const int m = trial % 16;
        const double x = ux(rng), y = uy(rng);
        const double ref = legendre_sum(m, x, y);
        const double scale = std::pow(std::abs(x) + std::sqrt(std::abs(y)), m);
        EXPECT_NEAR(k::scaled_legendre(m, x, y), ref, 1e-12 * std::max({1.0, scale, std::abs(ref)}))
            << "m=" << m << " x=" << x << " y=" << y;
    }
}

TEST(ScaledHermite, Examples) {
    EXPECT_EQ(k::scaled_hermite(0, {1.0, 2.0}, 5.0), Complex(1.0));
    EXPECT_EQ(k::scaled_hermite(1, {0.3, -0.7}, 2.0), Complex(0.3, -0.7));
    // d^{3/2} H_3(u / (2 sqrt d)) = H_3(2) / 8 = u^3 - 6 u d.
    EXPECT_NEAR(std::abs(k::scaled_hermite(3, 2.0, 0.25) - Complex(5.0)), 0.0, 1e-15);
}

TEST(ScaledHermite, MatchesExplicitSum) {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> uu(-2.0, 2.0), ud(-2.0, 2.0);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = trial % 14;
        const Complex u{uu(rng), uu(rng)};
        const double d = ud(rng);
        const Complex ref = hermite_sum(n, u, d);
        const double scale = std::pow(std::abs(u) + std::sqrt(2.0 * std::abs(d)) * n, n);
        EXPECT_LE(std::abs(k::scaled_hermite(n, u, d) - ref), 1e-12 * std::max(1.0, scale));
    }
}

TEST(Hermite, ExamplesAndScaledConsistency) {
    EXPECT_EQ(k::hermite(0, {3.0, 1.0}), Complex(1.0));
    EXPECT_EQ(k::hermite(2, 0.0), Complex(-2.0));
    for (int n = 0; n <= 12; ++n) {
        const Complex z{0.7, -0.4};
        const Complex a = k::hermite(n, z);
        const Complex b = k::scaled_hermite(n, 2.0 * z, 1.0);
        EXPECT_LE(std::abs(a - b), 1e-12 * std::max(1.0, std::abs(a)));
    }
}

TEST(Laguerre, Examples) {
    EXPECT_EQ(k::laguerre(0, 4.2), 1.0);
    EXPECT_EQ(k::laguerre(1, 0.0), 1.0);
    EXPECT_DOUBLE_EQ(k::laguerre(2, 2.0), -1.0);
    // L_n^(1)(x) = -d/dx L_{n+1}(x)
    const double h = 1e-6;
    for (int n = 0; n < 6; ++n) {
        const double fd = -(k::laguerre(n + 1, 1.3 + h) - k::laguerre(n + 1, 1.3 - h)) / (2 * h);
        EXPECT_NEAR(k::assoc_laguerre(n, 1, 1.3), fd, 1e-7);
    }
    EXPECT_DOUBLE_EQ(k::assoc_laguerre(3, 0, 0.8), k::laguerre(3, 0.8));
}

TEST(BilinearHermiteSum, Examples) {
    EXPECT_EQ(k::bilinear_hermite_sum(0, 0.3, -1.2, {0.5, 0.5}), 1.0);
    const Complex u{0.4, -1.1};
    EXPECT_NEAR(k::bilinear_hermite_sum(1, 0.7, -0.9, u), std::norm(u) - 0.9, 1e-14);
}

TEST(BilinearHermiteSum, DiagonalReducesToLegendre) {
    for (int m = 0; m <= 6; ++m) {
        for (double d : {-0.8, -0.1, 0.0, 0.35, 1.2}) {
            for (double chi : {-2.0, -0.5, 0.3, 1.7}) {
                const double ref = k::factorial(m) * k::scaled_legendre(m, chi, chi * chi - 4 * d * d);
                EXPECT_NEAR(k::bilinear_hermite_sum(m, d, chi, 0.0), ref,
                            1e-12 * std::max(1.0, std::abs(ref)));
            }
        }
    }
}

TEST(BilinearHermiteSum, MatchesGeneratingFunctionCoefficient) {
    // Coefficient of s^m t^m in exp[d(s^2+t^2) + chi st + u t + conj(u) s],
    // by multiplying the truncated power series of each factor.
    const int m = 4;
    const double d = 0.3, chi = -0.8;
    const Complex u{0.6, 0.2};
    const int N = m + 1;
    std::vector<Complex> c(static_cast<std::size_t>(N * N), 0.0);
    for (int a = 0; 2 * a < N; ++a) {          // d^a s^{2a} / a!
        for (int b = 0; 2 * b < N; ++b) {      // d^b t^{2b} / b!
            for (int c3 = 0; c3 < N; ++c3) {   // (chi st)^c3 / c3!
                for (int p = 0; p < N; ++p) {  // (conj(u) s)^p / p!
                    for (int q = 0; q < N; ++q) {  // (u t)^q / q!
                        const int si = 2 * a + c3 + p, ti = 2 * b + c3 + q;
                        if (si >= N || ti >= N) continue;
                        c[static_cast<std::size_t>(si * N + ti)] +=
                            std::pow(d, a + b) * std::pow(chi, c3) * std::pow(std::conj(u), p) *
                            std::pow(u, q) /
                            (k::factorial(a) * k::factorial(b) * k::factorial(c3) *
                             k::factorial(p) * k::factorial(q));
                    }
                }
            }
        }
    }
    const Complex deriv = c[static_cast<std::size_t>(m * N + m)] * k::factorial(m) * k::factorial(m);
    EXPECT_NEAR(deriv.imag(), 0.0, 1e-12);
    EXPECT_NEAR(k::bilinear_hermite_sum(m, d, chi, u), deriv.real(), 1e-12);
}
