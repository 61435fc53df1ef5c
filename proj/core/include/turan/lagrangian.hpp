#ifndef TURAN_LAGRANGIAN_HPP
#define TURAN_LAGRANGIAN_HPP

#include "turan/hypergraph.hpp"
#include "turan/numeric.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace turan {

// Edge polynomial p_G(x) = r! * sum over edges D of prod_v x_v^{D(v)} / D(v)!
// evaluated on weight vectors indexed by the vertices of G.
double evaluate_p(const RMultigraph& g, std::span<const double> x);
Rational evaluate_p(const RMultigraph& g, const std::vector<Rational>& x);

std::vector<double> gradient_p(const RMultigraph& g, std::span<const double> x);

// Throws validation_error unless x is entrywise >= 0 and sums to 1 within tol.
void validate_simplex_point(std::span<const double> x, double tol = 1e-12);
void validate_simplex_point(const std::vector<Rational>& x);

// Exact p_G(x) + p_complement(x) == 1 for x on the rational simplex.
// Returns false and fills *defect with p+pc-1 on violation.
bool duality_check(const RMultigraph& g, const std::vector<Rational>& x,
                   Rational* defect = nullptr);

// lambda(K_t^r) = C(t,r) * r! / t^r, the uniform-weight value of the complete
// r-graph; closed-form optimization oracle. Requires t >= r.
Rational lambda_exact_complete(int t, int r);

struct LambdaConfig {
  int restarts = 64;          // Dirichlet(1) random starts
  int max_iters = 3000;       // ascent iterations per start
  double tol = 1e-12;         // relative-improvement stop
  std::uint64_t seed = 1;
  // Faces are enumerated (uniform start on every vertex subset of size
  // <= min(n, 6)) only when n is at most this; beyond it the subset count
  // explodes and random starts have to carry face coverage.
  int subset_enum_limit = 15;
  // Additional caller-supplied start vectors (each of dimension v(G)).
  std::vector<std::vector<double>> extra_starts;
};

struct LagrangianReport {
  double estimate = 0.0;      // valid lower bound on lambda(G)
  std::vector<double> witness;
  int restarts_used = 0;
  long long iterations = 0;   // summed over all ascents
  double gradient_residual = 0.0;
  std::uint64_t seed = 1;
};

// Multi-start exponentiated-gradient ascent of p_G over the simplex.
// The estimate is always p_G(witness) recomputed, hence a valid lower bound.
LagrangianReport lambda_estimate(const RMultigraph& g, const LambdaConfig& config = {});

}  // namespace turan

#endif
