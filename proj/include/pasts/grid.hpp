#pragma once

// Phase-space lattices and their sampling.
//
// Every lattice point is an independent evaluation, so sampling is
// embarrassingly parallel. Execution::serial is the reference path kept for
// testing; Execution::parallel splits rows across OpenMP threads. Both write
// each value to its fixed slot, so the outputs are bitwise identical.

#include <cstddef>
#include <vector>

#include "pasts/analytics.hpp"
#include "pasts/decoherence.hpp"

namespace pasts::grid {

enum class Execution { serial, parallel };

inline constexpr std::size_t kMaxGridPoints = 10'000'000;

/// Inclusive lattice: n points from min to max on each axis (n = 1 gives min).
struct GridSpec {
    double min_re = -3.0;
    double max_re = 3.0;
    int n_re = 61;
    double min_im = -3.0;
    double max_im = 3.0;
    int n_im = 61;

    /// Throws InvalidParameter on non-finite bounds, n < 1, max < min or
    /// more than kMaxGridPoints points.
    void validate() const;

    [[nodiscard]] std::size_t size() const {
        return static_cast<std::size_t>(n_re) * static_cast<std::size_t>(n_im);
    }
    [[nodiscard]] double re_at(int i) const;
    [[nodiscard]] double im_at(int j) const;
    [[nodiscard]] double step_re() const;
    [[nodiscard]] double step_im() const;

    /// Cell centers of an n x n midpoint rule on [lo, hi]^2.
    [[nodiscard]] static GridSpec midpoint(double lo, double hi, int n);
};

/// Row-major samples with the imaginary coordinate varying fastest.
struct WignerGrid {
    GridSpec spec;
    std::vector<double> values;

    [[nodiscard]] double at(int i, int j) const {
        return values[static_cast<std::size_t>(i) * static_cast<std::size_t>(spec.n_im) +
                      static_cast<std::size_t>(j)];
    }
    [[nodiscard]] PhasePoint point(int i, int j) const { return {spec.re_at(i), spec.im_at(j)}; }

    /// Midpoint-rule integral: sum of samples times the cell area.
    [[nodiscard]] double integrate() const;
    [[nodiscard]] double min() const;
    [[nodiscard]] double max() const;
};

template <class Fn>
[[nodiscard]] WignerGrid sample(const GridSpec& spec, const Fn& fn, Execution exec) {
    spec.validate();
    WignerGrid out{spec, std::vector<double>(spec.size())};
    const int rows = spec.n_re;
    const int cols = spec.n_im;
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < rows; ++i) {
            const double re = spec.re_at(i);
            for (int j = 0; j < cols; ++j) {
                out.values[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) +
                           static_cast<std::size_t>(j)] = fn(PhasePoint{re, spec.im_at(j)});
            }
        }
    } else {
        for (int i = 0; i < rows; ++i) {
            const double re = spec.re_at(i);
            for (int j = 0; j < cols; ++j) {
                out.values[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) +
                           static_cast<std::size_t>(j)] = fn(PhasePoint{re, spec.im_at(j)});
            }
        }
    }
    return out;
}

[[nodiscard]] WignerGrid sample_wigner(const GridSpec& spec, const StateSpec& state,
                                       Execution exec = Execution::parallel);

[[nodiscard]] WignerGrid sample_evolved_wigner(const GridSpec& spec, const StateSpec& state,
                                               const ChannelSpec& channel,
                                               Execution exec = Execution::parallel);

/// Number of worker threads the parallel path will use.
[[nodiscard]] int worker_count();

}  // namespace pasts::grid
