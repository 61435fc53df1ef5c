#include "turan/optimize.hpp"

#include "turan/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace turan {

double simplex_residual(std::span<const double> x, std::span<const double> grad) {
  constexpr double kSupportEps = 1e-14;
  double mean = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) mean += x[i] * grad[i];
  double residual = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > kSupportEps) residual = std::max(residual, std::abs(grad[i] - mean));
  return residual;
}

AscentResult maximize_on_simplex(const SimplexValueFn& value,
                                 const SimplexGradFn& gradient,
                                 std::vector<double> start,
                                 const AscentOptions& options) {
  const int n = static_cast<int>(start.size());
  AscentResult result;
  result.x = std::move(start);
  if (n == 0) return result;

  double v = value(result.x);
  if (!std::isfinite(v)) throw validation_error("simplex ascent: non-finite value at start");

  std::vector<double> grad, trial(n);
  int iters_done = 0;
  for (int iter = 0; iter < options.max_iters; ++iter) {
    ++iters_done;
    grad = gradient(result.x);
    if (simplex_residual(result.x, grad) < options.residual_tol) break;

    double gmax = -1e300;
    for (int i = 0; i < n; ++i)
      if (result.x[i] > 0.0) gmax = std::max(gmax, grad[i]);

    double eta = 1.0;
    bool improved = false, converged = false;
    for (int halving = 0; halving < 60; ++halving) {
      double z = 0.0;
      for (int i = 0; i < n; ++i) {
        trial[i] = result.x[i] <= 0.0 ? 0.0 : result.x[i] * std::exp(eta * (grad[i] - gmax));
        z += trial[i];
      }
      if (z > 0.0) {
        for (int i = 0; i < n; ++i) trial[i] /= z;
        double tv = value(trial);
        if (!std::isfinite(tv))
          throw validation_error("simplex ascent: non-finite value during iteration");
        if (tv > v) {
          converged = (tv - v) / std::max(v, 1e-300) < options.tol;
          result.x.swap(trial);
          v = tv;
          improved = true;
          break;
        }
      }
      eta *= 0.5;
    }
    if (!improved || converged) break;  // no step improves, or gain below tol
  }

  result.value = v;
  result.iterations = iters_done;
  grad = gradient(result.x);
  result.residual = simplex_residual(result.x, grad);
  return result;
}

std::vector<double> random_simplex_point(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::vector<double> x(n);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    double u;
    do {
      u = uniform(rng);
    } while (u <= 0.0);
    x[i] = -std::log(u);
    sum += x[i];
  }
  for (int i = 0; i < n; ++i) x[i] /= sum;
  return x;
}

}  // namespace turan
