#ifndef TURAN_CONJECTURES_HPP
#define TURAN_CONJECTURES_HPP

#include "turan/hypergraph.hpp"
#include "turan/lagrangian.hpp"
#include "turan/numeric.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace turan {

// Square nonnegative matrix, row-major entries.
struct NonnegMatrix {
  int n = 0;
  std::vector<double> entries;

  static NonnegMatrix flat(int n);  // J_n: all entries 1/n^2
  double at(int i, int j) const { return entries[i * n + j]; }
  double& at(int i, int j) { return entries[i * n + j]; }
  double total() const;
};

// Ryser inclusion-exclusion over column subsets; exact in the rational
// overload. Guarded at n <= 12.
double permanent(const NonnegMatrix& a, int guard = 12);
Rational permanent(const std::vector<Rational>& entries, int n, int guard = 12);

// psi(A) = prod row sums + prod column sums - per(A), on matrices whose
// entries sum to 1.
double psi(const NonnegMatrix& a, int guard = 12);
Rational psi(const std::vector<Rational>& entries, int n, int guard = 12);

struct DittertConfig {
  int restarts = 64;
  int max_iters = 3000;
  double tol = 1e-12;
  std::uint64_t seed = 1;
};

struct DittertReport {
  double best_psi = 0.0;
  NonnegMatrix best;
  int restarts_used = 0;
  long long iterations = 0;
  std::uint64_t seed = 1;
};

// Multi-start ascent of psi over the entry simplex. Deterministic starts:
// J_n and every permutation matrix divided by n. Lower bound on max psi.
DittertReport dittert_search(int n, const DittertConfig& config = {}, int guard = 4);

// n-uniform hypergraph on [n]^k (row-major vertex ids) whose edges are the
// n-sets injective in at least one coordinate. Equals the k-th strong power
// of the single n-edge under the same indexing.
RMultigraph hajek_hypergraph(int n, int k, long long vertex_guard = 100,
                             long long enum_guard = 3'000'000);

// 1 - (1 - n!/n^n)^k, the value of p at the uniform point, exactly.
Rational hajek_uniform_value(int n, int k);

// The 9 words of the [4,2,3] self-dual ternary code with generator rows
// (1,0,1,1) and (0,1,1,2).
std::array<std::array<int, 4>, 9> tetracode_words();

struct HajekSearchReport {
  LagrangianReport report;
  double uniform_value = 0.0;
  bool exceeds_uniform = false;
  bool used_tetracode_starts = false;
};

// lambda_estimate on hajek_hypergraph(n,k) with structured starts: for
// (n,k) = (3,4), the uniform point on the tetracode support. Exploratory;
// exceeding the uniform value is reported, never asserted.
HajekSearchReport hajek_counterexample_search(int n, int k, LambdaConfig config = {});

struct KmCheckResult {
  double rate = 0.0;         // (1/k) log2 1/(1 - lambda_est)
  double lower_bound = 0.0;  // log2 1/(1 - r!/r^r)
  double upper_bound = 0.0;  // r!/r^(r-1)
  bool lower_ok = false;
  bool upper_consistent = false;
};

// Sandwich check for the hashing-rate window of the k-th strong power of an
// r-edge, given a certified lower bound lambda_est.
KmCheckResult korner_marton_check(int r, int k, double lambda_est);

}  // namespace turan

#endif
