#pragma once

// Square-root-free polynomial kernels.
//
// Every closed form in the library goes through these. The scaled forms
//   S_m(x, y) = y^{m/2} P_m(x / sqrt(y))
//   h_k(u, d) = d^{k/2} H_k(u / (2 sqrt(d)))
// are polynomials in (x, y) and (u, d), so y <= 0 and d <= 0 need no
// special handling.

#include <complex>

namespace pasts::kernels {

using Complex = std::complex<double>;

/// n! as a double. Exact integer arithmetic for n <= 20, lgamma beyond.
/// Overflows to +inf past 170.
[[nodiscard]] double factorial(int n);

/// n! / (n - k)!, for 0 <= k <= n.
[[nodiscard]] double falling_factorial(int n, int k);

/// Binomial coefficient as a double.
[[nodiscard]] double binomial(int n, int k);

/// S_m(x, y) = sum_k 2^{-m} (-1)^k C(m,k) C(2m-2k, m) x^{m-2k} y^k.
/// Evaluated by the scaled Legendre recurrence
///   (n+1) S_{n+1} = (2n+1) x S_n - n y S_{n-1}.
[[nodiscard]] double scaled_legendre(int m, double x, double y);

/// h_k(u, d) = sum_j (-1)^j k!/(j!(k-2j)!) u^{k-2j} d^j, via
///   h_{k+1} = u h_k - 2k d h_{k-1}.
[[nodiscard]] Complex scaled_hermite(int k, Complex u, double d);

/// Physicists' Hermite polynomial H_n(z).
[[nodiscard]] Complex hermite(int n, Complex z);

/// Laguerre polynomial L_n(x).
[[nodiscard]] double laguerre(int n, double x);

/// Associated Laguerre polynomial L_n^{(alpha)}(x).
[[nodiscard]] double assoc_laguerre(int n, int alpha, double x);

/// sum_{l=0}^{m} (m!)^2 chi^l / (l! ((m-l)!)^2) * |h_{m-l}(-i u, d)|^2.
///
/// This is the value at s = t = 0 of
///   d^{2m}/ds^m dt^m exp[d (s^2 + t^2) + chi s t + u t + conj(u) s],
/// the generating-function derivative behind every photon-added Wigner
/// factor. Real for real d and chi.
[[nodiscard]] double bilinear_hermite_sum(int m, double d, double chi, Complex u);

}  // namespace pasts::kernels
