#include "turan/lagrangian.hpp"

#include "turan/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace turan {

namespace {

double factorial_d(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void check_dimension(const RMultigraph& g, std::size_t dim) {
  if (static_cast<int>(dim) != g.n())
    throw validation_error("weight vector has dimension " + std::to_string(dim) +
                           ", graph has " + std::to_string(g.n()) + " vertices");
}

}  // namespace

double evaluate_p(const RMultigraph& g, std::span<const double> x) {
  check_dimension(g, x.size());
  const double r_fact = factorial_d(g.r());
  double sum = 0.0;
  for (const auto& edge : g.edges()) {
    double term = 1.0;
    edge.for_groups([&](int v, int m) {
      for (int i = 0; i < m; ++i) term *= x[v];
      term /= factorial_d(m);
    });
    sum += term;
  }
  return r_fact * sum;
}

Rational evaluate_p(const RMultigraph& g, const std::vector<Rational>& x) {
  check_dimension(g, x.size());
  Rational sum = 0;
  for (const auto& edge : g.edges()) {
    Rational term = 1;
    edge.for_groups([&](int v, int m) {
      term *= rat_pow(x[v], m);
      term /= Rational(factorial(m));
    });
    sum += term;
  }
  return Rational(factorial(g.r())) * sum;
}

std::vector<double> gradient_p(const RMultigraph& g, std::span<const double> x) {
  check_dimension(g, x.size());
  const double r_fact = factorial_d(g.r());
  std::vector<double> grad(g.n(), 0.0);
  std::vector<std::pair<int, int>> groups;
  for (const auto& edge : g.edges()) {
    groups.clear();
    edge.for_groups([&](int v, int m) { groups.emplace_back(v, m); });
    // d/dx_v of prod_w x_w^{m_w}/m_w! = x_v^{m_v-1}/(m_v-1)! * prod_{w!=v} ...
    for (std::size_t k = 0; k < groups.size(); ++k) {
      double term = 1.0;
      for (std::size_t j = 0; j < groups.size(); ++j) {
        auto [v, m] = groups[j];
        int mm = (j == k) ? m - 1 : m;
        for (int i = 0; i < mm; ++i) term *= x[v];
        term /= factorial_d(mm);
      }
      grad[groups[k].first] += r_fact * term;
    }
  }
  return grad;
}

void validate_simplex_point(std::span<const double> x, double tol) {
  double sum = 0.0;
  for (double w : x) {
    if (!(w >= 0.0)) throw validation_error("simplex point: negative weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > tol)
    throw validation_error("simplex point: weights sum to " + format_double(sum, 17));
}

void validate_simplex_point(const std::vector<Rational>& x) {
  Rational sum = 0;
  for (const auto& w : x) {
    if (w < 0) throw validation_error("simplex point: negative weight");
    sum += w;
  }
  if (sum != 1) throw validation_error("simplex point: weights must sum to exactly 1");
}

bool duality_check(const RMultigraph& g, const std::vector<Rational>& x,
                   Rational* defect) {
  validate_simplex_point(x);
  Rational total = evaluate_p(g, x) + evaluate_p(complement(g), x);
  if (defect) *defect = total - 1;
  return total == 1;
}

Rational lambda_exact_complete(int t, int r) {
  if (r < 1) throw validation_error("lambda_exact_complete: uniformity must be >= 1");
  if (t < r)
    throw validation_error("lambda_exact_complete: need t >= r, got t=" +
                           std::to_string(t) + " r=" + std::to_string(r));
  return Rational(binomial(t, r) * factorial(r), int_pow(Int(t), r));
}

namespace {

void for_each_subset(int n, int max_size, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> acc;
  std::function<void(int)> rec = [&](int next) {
    if (!acc.empty()) fn(acc);
    if (static_cast<int>(acc.size()) == max_size) return;
    for (int v = next; v < n; ++v) {
      acc.push_back(v);
      rec(v + 1);
      acc.pop_back();
    }
  };
  rec(0);
}

}  // namespace

LagrangianReport lambda_estimate(const RMultigraph& g, const LambdaConfig& config) {
  LagrangianReport report;
  report.seed = config.seed;

  if (g.n() == 0 || g.edges().empty()) {
    // lambda(empty graph) = 0; edgeless graphs have p identically 0.
    report.witness.assign(g.n(), g.n() > 0 ? 1.0 / g.n() : 0.0);
    return report;
  }

  const AscentOptions options{config.max_iters, config.tol, 1e-10};
  auto value_fn = [&g](std::span<const double> x) { return evaluate_p(g, x); };
  auto grad_fn = [&g](std::span<const double> x) { return gradient_p(g, x); };

  double best = -1.0;
  std::vector<double> best_x;
  auto consider = [&](const AscentResult& res) {
    report.iterations += res.iterations;
    if (res.value > best) {
      best = res.value;
      best_x = res.x;
    }
  };

  // Uniform start.
  consider(maximize_on_simplex(value_fn, grad_fn,
                               std::vector<double>(g.n(), 1.0 / g.n()), options));

  // Face enumeration: the multiplicative update never leaves a face, so the
  // ascent restricted to support S coincides with the ascent of the induced
  // subgraph G[S]; solving the induced problem is equivalent and cheaper.
  if (g.n() <= config.subset_enum_limit) {
    int max_size = std::min(g.n(), 6);
    for_each_subset(g.n(), max_size, [&](const std::vector<int>& subset) {
      RMultigraph sub = induced(g, subset);
      if (sub.edges().empty()) return;
      auto sub_value = [&sub](std::span<const double> x) { return evaluate_p(sub, x); };
      auto sub_grad = [&sub](std::span<const double> x) { return gradient_p(sub, x); };
      AscentResult res = maximize_on_simplex(
          sub_value, sub_grad, std::vector<double>(sub.n(), 1.0 / sub.n()), options);
      std::vector<double> lifted(g.n(), 0.0);
      for (std::size_t i = 0; i < subset.size(); ++i) lifted[subset[i]] = res.x[i];
      res.x = std::move(lifted);
      consider(res);
    });
  }

  for (const auto& start : config.extra_starts) {
    if (static_cast<int>(start.size()) != g.n())
      throw validation_error("lambda_estimate: extra start has wrong dimension");
    consider(maximize_on_simplex(value_fn, grad_fn, start, options));
  }

  for (int restart = 0; restart < config.restarts; ++restart) {
    std::mt19937_64 rng(mix_seed(config.seed, static_cast<std::uint64_t>(restart)));
    consider(maximize_on_simplex(value_fn, grad_fn, random_simplex_point(g.n(), rng), options));
    ++report.restarts_used;
  }

  // Recompute so that estimate == p_G(witness) holds exactly as reported.
  report.witness = std::move(best_x);
  report.estimate = std::clamp(evaluate_p(g, report.witness), 0.0, 1.0);
  auto grad = gradient_p(g, report.witness);
  report.gradient_residual = simplex_residual(report.witness, grad);
  return report;
}

}  // namespace turan
