#include "pasts/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pasts/errors.hpp"

namespace pasts::grid {

void GridSpec::validate() const {
    for (double v : {min_re, max_re, min_im, max_im}) {
        if (!std::isfinite(v)) throw InvalidParameter("grid bounds must be finite");
    }
    if (n_re < 1 || n_im < 1) throw InvalidParameter("grid point counts must be >= 1");
    if (max_re < min_re || max_im < min_im) throw InvalidParameter("grid max must be >= min");
    if (size() > kMaxGridPoints) {
        throw InvalidParameter("grid has " + std::to_string(size()) + " points, limit is " +
                               std::to_string(kMaxGridPoints));
    }
}

double GridSpec::step_re() const { return n_re > 1 ? (max_re - min_re) / (n_re - 1) : 0.0; }
double GridSpec::step_im() const { return n_im > 1 ? (max_im - min_im) / (n_im - 1) : 0.0; }
double GridSpec::re_at(int i) const { return min_re + i * step_re(); }
double GridSpec::im_at(int j) const { return min_im + j * step_im(); }

GridSpec GridSpec::midpoint(double lo, double hi, int n) {
    const double h = (hi - lo) / n;
    return GridSpec{lo + 0.5 * h, hi - 0.5 * h, n, lo + 0.5 * h, hi - 0.5 * h, n};
}

double WignerGrid::integrate() const {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum * spec.step_re() * spec.step_im();
}

double WignerGrid::min() const { return *std::min_element(values.begin(), values.end()); }
double WignerGrid::max() const { return *std::max_element(values.begin(), values.end()); }

WignerGrid sample_wigner(const GridSpec& spec, const StateSpec& state, Execution exec) {
    const analytics::WignerEvaluator eval(state);
    return sample(spec, eval, exec);
}

WignerGrid sample_evolved_wigner(const GridSpec& spec, const StateSpec& state,
                                 const ChannelSpec& channel, Execution exec) {
    const decoherence::EvolvedWignerEvaluator eval(state, channel);
    return sample(spec, eval, exec);
}

int worker_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace pasts::grid
