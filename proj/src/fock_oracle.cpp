#include "pasts/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <unsupported/Eigen/MatrixFunctions>

#include "pasts/errors.hpp"
#include "pasts/kernels.hpp"

namespace pasts::fock {

namespace {

using Complex = std::complex<double>;

int padded_dim(int dim) { return dim + std::max(40, dim); }

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

void require_dim(int dim) {
    if (dim < 2) throw InvalidParameter("Fock dimension must be >= 2, got " + std::to_string(dim));
}

// Real annihilation operator, a|n> = sqrt(n)|n-1>.
Eigen::MatrixXd annihilation(int dim) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

// exp[s (a^2 - a^+2) / 2]; the generator is real antisymmetric.
Eigen::MatrixXd squeeze_operator(double s, int dim) {
    const Eigen::MatrixXd a = annihilation(dim);
    const Eigen::MatrixXd a2 = a * a;
    const Eigen::MatrixXd gen = 0.5 * s * (a2 - a2.transpose());
    return gen.exp();
}

FockState normalized(Eigen::MatrixXcd rho, int dim) {
    FockState out;
    out.dim = dim;
    out.trace_raw = rho.trace().real();
    out.rho = std::move(rho) / out.trace_raw;
    return out;
}

}  // namespace

void FockState::check_invariants() const {
    if (rho.rows() != dim || rho.cols() != dim) {
        throw ConsistencyError("FockState: rho shape does not match dim");
    }
    const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (herm > 1e-12) {
        throw ConsistencyError("FockState: not Hermitian, deviation " + sci(herm));
    }
    const double tr = rho.trace().real();
    if (std::abs(tr - 1.0) > 1e-10) {
        throw ConsistencyError("FockState: trace " + sci(tr));
    }
    const Eigen::MatrixXcd sym = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym, Eigen::EigenvaluesOnly);
    const double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < -1e-9) {
        throw ConsistencyError("FockState: negative eigenvalue " + sci(min_eig));
    }
}

FockState build_sts(double lambda, double n_c, int dim, const OracleOptions& options) {
    StateSpec{lambda, n_c, 0}.validate();
    require_dim(dim);
    const double ratio = n_c / (n_c + 1.0);
    const double thermal_tail = std::pow(ratio, dim);
    if (thermal_tail > options.thermal_tail_tolerance) {
        throw TruncationError("thermal tail beyond dim " + std::to_string(dim) + " is " +
                              sci(thermal_tail));
    }

    const int work = padded_dim(dim);
    Eigen::VectorXd thermal(work);
    for (int n = 0; n < work; ++n) thermal(n) = std::pow(ratio, n) / (n_c + 1.0);

    const double s = options.flip_squeeze_sign ? lambda : -lambda;
    const Eigen::MatrixXd U = squeeze_operator(s, work);
    const Eigen::MatrixXd full = U * thermal.asDiagonal() * U.transpose();

    Eigen::MatrixXcd rho = full.topLeftCorner(dim, dim).cast<Complex>();
    const double kept = rho.trace().real();
    const double leaked = full.trace() - kept;
    if (leaked > options.truncation_tolerance) {
        throw TruncationError("squeezed thermal state leaks " + sci(leaked) +
                              " probability past dim " + std::to_string(dim));
    }
    return normalized(std::move(rho), dim);
}

FockState add_photons(const FockState& state, int m, const OracleOptions& options) {
    if (m < 0) throw InvalidParameter("m must be >= 0");
    if (m == 0) return state;
    const int dim = state.dim;
    if (dim - m < 10) {
        throw TruncationError("add_photons: dim " + std::to_string(dim) +
                              " leaves fewer than 10 levels after adding " + std::to_string(m));
    }
    // f(i) = sqrt((i+m)!/i!): a^{+m}|i> = f(i)|i+m>.
    std::vector<double> f(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) {
        double v = 1.0;
        for (int k = 1; k <= m; ++k) v *= i + k;
        f[static_cast<std::size_t>(i)] = std::sqrt(v);
    }
    double lost = 0.0;
    double total = 0.0;
    for (int i = 0; i < dim; ++i) {
        const double w = f[static_cast<std::size_t>(i)] * f[static_cast<std::size_t>(i)] *
                         state.rho(i, i).real();
        total += w;
        if (i >= dim - m) lost += w;
    }
    if (lost > options.truncation_tolerance * total) {
        throw TruncationError("add_photons: relative weight " + sci(lost / total) +
                              " pushed past dim " + std::to_string(dim));
    }

    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (int k = m; k < dim; ++k) {
        for (int j = m; j < dim; ++j) {
            out(j, k) = f[static_cast<std::size_t>(j - m)] * f[static_cast<std::size_t>(k - m)] *
                        state.rho(j - m, k - m);
        }
    }
    return normalized(std::move(out), dim);
}

FockState subtract_photons(const FockState& state, int m) {
    if (m < 0) throw InvalidParameter("m must be >= 0");
    if (m == 0) return state;
    const int dim = state.dim;
    // a^m|i+m> = f(i)|i>, f(i) = sqrt((i+m)!/i!).
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    auto f = [m](int i) {
        double v = 1.0;
        for (int k = 1; k <= m; ++k) v *= i + k;
        return std::sqrt(v);
    };
    for (int k = 0; k + m < dim; ++k) {
        for (int j = 0; j + m < dim; ++j) {
            out(j, k) = f(j) * f(k) * state.rho(j + m, k + m);
        }
    }
    if (!(out.trace().real() > 0.0)) {
        throw DomainError("subtract_photons: state has no population above m");
    }
    return normalized(std::move(out), dim);
}

namespace {

// d rho / d(kt) for the thermal channel with unit decay rate.
void lindblad_rhs(const Eigen::MatrixXcd& rho, double bath, const std::vector<double>& sq,
                  Eigen::MatrixXcd& out) {
    const int dim = static_cast<int>(rho.rows());
    const double up = bath + 1.0;
    for (int k = 0; k < dim; ++k) {
        for (int j = 0; j < dim; ++j) {
            Complex v = -(up * (j + k) + bath * (j + k + 2)) * rho(j, k);
            if (j + 1 < dim && k + 1 < dim) {
                v += 2.0 * up * sq[static_cast<std::size_t>(j + 1)] *
                     sq[static_cast<std::size_t>(k + 1)] * rho(j + 1, k + 1);
            }
            if (j > 0 && k > 0) {
                v += 2.0 * bath * sq[static_cast<std::size_t>(j)] * sq[static_cast<std::size_t>(k)] *
                     rho(j - 1, k - 1);
            }
            out(j, k) = v;
        }
    }
}

}  // namespace

FockState lindblad_evolve(const FockState& state, const ChannelSpec& channel, int steps) {
    channel.validate();
    if (steps < 0) throw InvalidParameter("steps must be >= 0");
    if (channel.kt == 0.0) return state;
    if (steps == 0) {
        // RK4 is stable for h times the spectral radius below about 2.78; the
        // generator's radius is at most twice its largest diagonal rate.
        const double max_rate = (2.0 * channel.bath_mean + 1.0) * 2.0 * (state.dim - 1) +
                                2.0 * channel.bath_mean;
        const double h_max = std::min(1e-3, 1.25 / max_rate);
        steps = static_cast<int>(std::ceil(channel.kt / h_max - 1e-9));
    }
    const double h = channel.kt / steps;
    const int dim = state.dim;

    std::vector<double> sq(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) sq[static_cast<std::size_t>(i)] = std::sqrt(static_cast<double>(i));

    Eigen::MatrixXcd rho = state.rho;
    Eigen::MatrixXcd k1(dim, dim), k2(dim, dim), k3(dim, dim), k4(dim, dim), tmp(dim, dim);
    const double start_trace = rho.trace().real();
    for (int s = 0; s < steps; ++s) {
        lindblad_rhs(rho, channel.bath_mean, sq, k1);
        tmp = rho + (0.5 * h) * k1;
        lindblad_rhs(tmp, channel.bath_mean, sq, k2);
        tmp = rho + (0.5 * h) * k2;
        lindblad_rhs(tmp, channel.bath_mean, sq, k3);
        tmp = rho + h * k3;
        lindblad_rhs(tmp, channel.bath_mean, sq, k4);
        rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        tmp = rho.adjoint();
        rho = 0.5 * (rho + tmp);
    }
    const double drift = std::abs(rho.trace().real() - start_trace);
    if (drift > 1e-6) {
        throw IntegrationError("lindblad_evolve: trace drifted by " + sci(drift));
    }
    return normalized(std::move(rho), dim);
}

double trusted_radius(int dim) { return std::sqrt(dim / 5.0); }

Eigen::MatrixXcd displacement_matrix(Complex beta, int dim) {
    require_dim(dim);
    Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(dim, dim);
    const double r = std::abs(beta);
    if (r == 0.0) return Eigen::MatrixXcd::Identity(dim, dim);
    const double x = r * r;
    const double log_r = std::log(r);
    const Complex phase = beta / r;
    // j >= k: sqrt(k!/j!) beta^{j-k} e^{-x/2} L_k^{(j-k)}(x); j < k uses (-conj beta).
    for (int d = 0; d < dim; ++d) {
        const Complex up = std::pow(phase, d);
        const Complex down = std::pow(-std::conj(phase), d);
        double l_prev = 0.0;
        double l_cur = 1.0;
        for (int n = 0; n + d < dim; ++n) {
            if (n == 1) {
                l_prev = 1.0;
                l_cur = 1.0 + d - x;
            } else if (n > 1) {
                const double next =
                    ((2.0 * (n - 1) + 1.0 + d - x) * l_cur - (n - 1 + d) * l_prev) / n;
                l_prev = l_cur;
                l_cur = next;
            }
            const double mag = std::exp(0.5 * (std::lgamma(n + 1.0) - std::lgamma(n + d + 1.0)) +
                                        d * log_r - 0.5 * x) *
                               l_cur;
            D(n + d, n) = mag * up;
            if (d > 0) D(n, n + d) = mag * down;
        }
    }
    return D;
}

double wigner_parity(const FockState& state, PhasePoint p) {
    const Complex alpha = p.value();
    if (std::abs(alpha) > trusted_radius(state.dim)) {
        throw TruncationError("wigner_parity: |alpha| = " + std::to_string(std::abs(alpha)) +
                              " exceeds trusted radius " +
                              std::to_string(trusted_radius(state.dim)) + " at dim " +
                              std::to_string(state.dim));
    }
    const Eigen::MatrixXcd D = displacement_matrix(2.0 * alpha, state.dim);
    // tr(rho D Pi) = sum_{j,k} rho(k, j) D(j, k) (-1)^k
    Complex acc{0.0, 0.0};
    for (int k = 0; k < state.dim; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        acc += sign * state.rho.row(k).transpose().cwiseProduct(D.col(k)).sum();
    }
    return acc.real() / M_PI;
}

double squeezed_number_identity_check(int n, double lambda, int dim) {
    if (n < 0) throw InvalidParameter("n must be >= 0");
    require_dim(dim);
    if (n + 10 > dim) throw TruncationError("dim too small for squeezed number state");
    const int work = padded_dim(dim);
    const Eigen::MatrixXd S = squeeze_operator(lambda, work);
    const Eigen::VectorXd vac = S.col(0);
    const Eigen::VectorXd target = S.col(n);

    // h_n(u, d) = sum_j (-1)^j n!/(j!(n-2j)!) u^{n-2j} d^j with u = sqrt2 sech(l) a^+,
    // d = -tanh(l); powers of a^+ applied to the squeezed vacuum.
    const double sech = 1.0 / std::cosh(lambda);
    const double d = -std::tanh(lambda);
    std::vector<Eigen::VectorXd> raised{vac};
    for (int k = 1; k <= n; ++k) {
        Eigen::VectorXd next = Eigen::VectorXd::Zero(work);
        const Eigen::VectorXd& prev = raised.back();
        for (int i = 0; i + 1 < work; ++i) next(i + 1) = std::sqrt(i + 1.0) * prev(i);
        raised.push_back(std::move(next));
    }
    Eigen::VectorXd built = Eigen::VectorXd::Zero(work);
    for (int j = 0; 2 * j <= n; ++j) {
        const double c = ((j % 2 == 0) ? 1.0 : -1.0) * kernels::factorial(n) /
                         (kernels::factorial(j) * kernels::factorial(n - 2 * j)) *
                         std::pow(std::sqrt(2.0) * sech, n - 2 * j) * std::pow(d, j);
        built += c * raised[static_cast<std::size_t>(n - 2 * j)];
    }
    built /= std::sqrt(std::pow(2.0, n) * kernels::factorial(n));
    return (target.head(dim) - built.head(dim)).norm();
}

std::vector<double> diagonal(const FockState& state) {
    std::vector<double> out(static_cast<std::size_t>(state.dim));
    for (int i = 0; i < state.dim; ++i) out[static_cast<std::size_t>(i)] = state.rho(i, i).real();
    return out;
}

double mean_photon(const FockState& state) { return factorial_moment(state, 1); }

double factorial_moment(const FockState& state, int k) {
    double acc = 0.0;
    for (int i = k; i < state.dim; ++i) acc += kernels::falling_factorial(i, k) * state.rho(i, i).real();
    return acc;
}

double purity(const FockState& state) { return overlap(state, state); }

double overlap(const FockState& a, const FockState& b) {
    if (a.dim != b.dim) throw InvalidParameter("overlap: dimension mismatch");
    // tr(A B) = sum_{jk} A(j,k) B(k,j)
    return a.rho.cwiseProduct(b.rho.transpose()).sum().real();
}

}  // namespace pasts::fock
