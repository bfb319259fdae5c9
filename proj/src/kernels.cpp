#include "pasts/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pasts::kernels {

namespace {

constexpr std::array<std::uint64_t, 21> kFactorials = [] {
    std::array<std::uint64_t, 21> t{};
    t[0] = 1;
    for (std::size_t i = 1; i < t.size(); ++i) t[i] = t[i - 1] * i;
    return t;
}();

void require_order(int n, const char* what) {
    if (n < 0) throw std::invalid_argument(std::string(what) + ": negative order");
}

}  // namespace

double factorial(int n) {
    require_order(n, "factorial");
    if (n <= 20) return static_cast<double>(kFactorials[static_cast<std::size_t>(n)]);
    if (n > 170) return HUGE_VAL;
    return std::round(std::exp(std::lgamma(n + 1.0)));
}

double falling_factorial(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("falling_factorial: need 0 <= k <= n");
    if (n <= 20) {
        return static_cast<double>(kFactorials[static_cast<std::size_t>(n)] /
                                   kFactorials[static_cast<std::size_t>(n - k)]);
    }
    double r = 1.0;
    for (int i = n - k + 1; i <= n; ++i) r *= i;
    return r;
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    if (n <= 20) {
        return static_cast<double>(kFactorials[static_cast<std::size_t>(n)] /
                                   (kFactorials[static_cast<std::size_t>(k)] *
                                    kFactorials[static_cast<std::size_t>(n - k)]));
    }
    k = std::min(k, n - k);
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return std::round(r);
}

double scaled_legendre(int m, double x, double y) {
    require_order(m, "scaled_legendre");
    if (m == 0) return 1.0;
    double prev = 1.0;
    double cur = x;
    for (int n = 1; n < m; ++n) {
        const double next = ((2.0 * n + 1.0) * x * cur - n * y * prev) / (n + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

Complex scaled_hermite(int k, Complex u, double d) {
    require_order(k, "scaled_hermite");
    if (k == 0) return {1.0, 0.0};
    Complex prev{1.0, 0.0};
    Complex cur = u;
    for (int n = 1; n < k; ++n) {
        const Complex next = u * cur - (2.0 * n * d) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

Complex hermite(int n, Complex z) {
    require_order(n, "hermite");
    if (n == 0) return {1.0, 0.0};
    Complex prev{1.0, 0.0};
    Complex cur = 2.0 * z;
    for (int k = 1; k < n; ++k) {
        const Complex next = 2.0 * z * cur - (2.0 * k) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double laguerre(int n, double x) { return assoc_laguerre(n, 0, x); }

double assoc_laguerre(int n, int alpha, double x) {
    require_order(n, "laguerre");
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = 1.0 + alpha - x;
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double bilinear_hermite_sum(int m, double d, double chi, Complex u) {
    require_order(m, "bilinear_hermite_sum");
    if (m == 0) return 1.0;
    // |h_k(-i u, d)|^2 for k = 0..m in one recurrence pass.
    std::vector<double> h_sq(static_cast<std::size_t>(m) + 1);
    const Complex v = Complex(0.0, -1.0) * u;
    Complex prev{1.0, 0.0};
    Complex cur = v;
    h_sq[0] = 1.0;
    h_sq[1] = std::norm(v);
    for (int k = 1; k < m; ++k) {
        const Complex next = v * cur - (2.0 * k * d) * prev;
        prev = cur;
        cur = next;
        h_sq[static_cast<std::size_t>(k) + 1] = std::norm(cur);
    }
    // (m!)^2 / (l! ((m-l)!)^2) = C(m,l) * m!/(m-l)!, accumulated as a running
    // product to stay finite for large m.
    double sum = 0.0;
    double coeff = 1.0;  // l = 0: C(m,0) * m!/m! = 1
    double chi_pow = 1.0;
    for (int l = 0; l <= m; ++l) {
        sum += coeff * chi_pow * h_sq[static_cast<std::size_t>(m - l)];
        // coeff(l+1)/coeff(l) = (m-l)/(l+1) * (m-l)
        coeff *= static_cast<double>(m - l) * (m - l) / (l + 1.0);
        chi_pow *= chi;
    }
    return sum;
}

}  // namespace pasts::kernels
