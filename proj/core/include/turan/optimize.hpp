#ifndef TURAN_OPTIMIZE_HPP
#define TURAN_OPTIMIZE_HPP

#include <functional>
#include <random>
#include <span>
#include <vector>

namespace turan {

// Maximizes a smooth function over the probability simplex with multiplicative
// exponentiated-gradient steps: x_i <- x_i * exp(eta * g_i), renormalized.
// The update preserves nonnegativity and the unit sum without projection, and
// keeps zero coordinates at zero, so a start confined to a face stays on it.

struct AscentOptions {
  int max_iters = 3000;
  double tol = 1e-12;           // stop when relative improvement drops below
  double residual_tol = 1e-10;  // stop when support gradient deviation drops below
};

struct AscentResult {
  double value = 0.0;
  std::vector<double> x;
  int iterations = 0;
  double residual = 0.0;
};

using SimplexValueFn = std::function<double(std::span<const double>)>;
using SimplexGradFn = std::function<std::vector<double>(std::span<const double>)>;

AscentResult maximize_on_simplex(const SimplexValueFn& value,
                                 const SimplexGradFn& gradient,
                                 std::vector<double> start,
                                 const AscentOptions& options = {});

// First-order optimality defect: max_i over the support of |g_i - <x, g>|.
double simplex_residual(std::span<const double> x, std::span<const double> grad);

// Dirichlet(1) sample, i.e. a uniformly random simplex point.
std::vector<double> random_simplex_point(int n, std::mt19937_64& rng);

}  // namespace turan

#endif
