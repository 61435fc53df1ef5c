#include "turan/conjectures.hpp"

#include "turan/constructions.hpp"
#include "turan/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace turan {

NonnegMatrix NonnegMatrix::flat(int n) {
  NonnegMatrix m{n, std::vector<double>(static_cast<std::size_t>(n) * n,
                                        1.0 / (static_cast<double>(n) * n))};
  return m;
}

double NonnegMatrix::total() const {
  double s = 0.0;
  for (double v : entries) s += v;
  return s;
}

namespace {

void check_permanent_guard(int n, int guard) {
  if (n < 0) throw validation_error("permanent: negative order");
  if (n > guard)
    throw guard_error("permanent: order " + std::to_string(n) + " exceeds guard " +
                      std::to_string(guard));
}

// per(A) = (-1)^n sum over column subsets S of (-1)^|S| prod_i sum_{j in S} a_ij
template <typename T>
T ryser_permanent(const std::vector<T>& a, int n) {
  if (n == 0) return T(1);
  T result(0);
  const std::uint32_t full = 1u << n;
  std::vector<T> row_sum(n);
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    for (int i = 0; i < n; ++i) {
      T s(0);
      const T* row = &a[static_cast<std::size_t>(i) * n];
      for (int j = 0; j < n; ++j)
        if (mask & (1u << j)) s += row[j];
      row_sum[i] = s;
    }
    T prod(1);
    for (int i = 0; i < n; ++i) prod *= row_sum[i];
    int bits = __builtin_popcount(mask);
    if ((n - bits) % 2 == 0)
      result += prod;
    else
      result -= prod;
  }
  return result;
}

}  // namespace

double permanent(const NonnegMatrix& a, int guard) {
  check_permanent_guard(a.n, guard);
  return ryser_permanent(a.entries, a.n);
}

Rational permanent(const std::vector<Rational>& entries, int n, int guard) {
  check_permanent_guard(n, guard);
  if (static_cast<std::size_t>(n) * n != entries.size())
    throw validation_error("permanent: entry count does not match order");
  return ryser_permanent(entries, n);
}

double psi(const NonnegMatrix& a, int guard) {
  for (double v : a.entries)
    if (!(v >= 0.0)) throw validation_error("psi: negative entry");
  if (std::abs(a.total() - 1.0) > 1e-12)
    throw validation_error("psi: entries must sum to 1");
  double rows = 1.0, cols = 1.0;
  for (int i = 0; i < a.n; ++i) {
    double r = 0.0, c = 0.0;
    for (int j = 0; j < a.n; ++j) {
      r += a.at(i, j);
      c += a.at(j, i);
    }
    rows *= r;
    cols *= c;
  }
  return rows + cols - permanent(a, guard);
}

Rational psi(const std::vector<Rational>& entries, int n, int guard) {
  Rational total = 0;
  for (const auto& v : entries) {
    if (v < 0) throw validation_error("psi: negative entry");
    total += v;
  }
  if (total != 1) throw validation_error("psi: entries must sum to exactly 1");
  Rational rows = 1, cols = 1;
  for (int i = 0; i < n; ++i) {
    Rational r = 0, c = 0;
    for (int j = 0; j < n; ++j) {
      r += entries[static_cast<std::size_t>(i) * n + j];
      c += entries[static_cast<std::size_t>(j) * n + i];
    }
    rows *= r;
    cols *= c;
  }
  return rows + cols - permanent(entries, n, guard);
}

namespace {

// gradient of psi: d/da_ij = prod_{k!=i} r_k + prod_{k!=j} c_k - per(minor_ij)
std::vector<double> psi_gradient(std::span<const double> x, int n) {
  std::vector<double> row(n, 0.0), col(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      row[i] += x[static_cast<std::size_t>(i) * n + j];
      col[j] += x[static_cast<std::size_t>(i) * n + j];
    }
  auto leave_one_out = [n](const std::vector<double>& v) {
    // products prod_{k != i} v_k, stable against zeros via prefix/suffix
    std::vector<double> pre(n + 1, 1.0), suf(n + 1, 1.0), out(n);
    for (int i = 0; i < n; ++i) pre[i + 1] = pre[i] * v[i];
    for (int i = n - 1; i >= 0; --i) suf[i] = suf[i + 1] * v[i];
    for (int i = 0; i < n; ++i) out[i] = pre[i] * suf[i + 1];
    return out;
  };
  std::vector<double> row_loo = leave_one_out(row), col_loo = leave_one_out(col);

  std::vector<double> grad(static_cast<std::size_t>(n) * n, 0.0);
  std::vector<double> minor_entries(static_cast<std::size_t>(n - 1) * (n - 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int idx = 0;
      for (int a = 0; a < n; ++a) {
        if (a == i) continue;
        for (int b = 0; b < n; ++b) {
          if (b == j) continue;
          minor_entries[idx++] = x[static_cast<std::size_t>(a) * n + b];
        }
      }
      double minor_per = ryser_permanent(minor_entries, n - 1);
      grad[static_cast<std::size_t>(i) * n + j] = row_loo[i] + col_loo[j] - minor_per;
    }
  return grad;
}

}  // namespace

DittertReport dittert_search(int n, const DittertConfig& config, int guard) {
  if (n < 1) throw validation_error("dittert_search: order must be >= 1");
  if (n > guard)
    throw guard_error("dittert_search: order " + std::to_string(n) +
                      " exceeds guard " + std::to_string(guard));

  const int dim = n * n;
  auto value_fn = [n](std::span<const double> x) {
    NonnegMatrix m{n, std::vector<double>(x.begin(), x.end())};
    // the ascent keeps the simplex, so no domain re-validation per step
    double rows = 1.0, cols = 1.0;
    for (int i = 0; i < n; ++i) {
      double r = 0.0, c = 0.0;
      for (int j = 0; j < n; ++j) {
        r += m.at(i, j);
        c += m.at(j, i);
      }
      rows *= r;
      cols *= c;
    }
    return rows + cols - ryser_permanent(m.entries, n);
  };
  auto grad_fn = [n](std::span<const double> x) { return psi_gradient(x, n); };

  const AscentOptions options{config.max_iters, config.tol, 1e-12};
  DittertReport report;
  report.seed = config.seed;
  double best = -1e300;
  std::vector<double> best_x;
  auto consider = [&](const AscentResult& res) {
    report.iterations += res.iterations;
    if (res.value > best) {
      best = res.value;
      best_x = res.x;
    }
  };

  // J_n first, then every permutation matrix / n.
  consider(maximize_on_simplex(value_fn, grad_fn,
                               std::vector<double>(dim, 1.0 / dim), options));
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<double> start(dim, 0.0);
    for (int i = 0; i < n; ++i) start[static_cast<std::size_t>(i) * n + perm[i]] = 1.0 / n;
    consider(maximize_on_simplex(value_fn, grad_fn, std::move(start), options));
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (int restart = 0; restart < config.restarts; ++restart) {
    std::mt19937_64 rng(mix_seed(config.seed, static_cast<std::uint64_t>(restart)));
    consider(maximize_on_simplex(value_fn, grad_fn, random_simplex_point(dim, rng), options));
    ++report.restarts_used;
  }

  report.best = NonnegMatrix{n, best_x};
  report.best_psi = best;
  return report;
}

RMultigraph hajek_hypergraph(int n, int k, long long vertex_guard, long long enum_guard) {
  if (n < 1 || k < 1) throw validation_error("hajek_hypergraph: need n, k >= 1");
  long long verts = 1;
  for (int i = 0; i < k; ++i) {
    verts *= n;
    if (verts > vertex_guard)
      throw guard_error("hajek_hypergraph: n^k exceeds vertex guard " +
                        std::to_string(vertex_guard));
  }
  Int subsets = binomial(static_cast<int>(verts), n);
  if (subsets > enum_guard)
    throw guard_error("hajek_hypergraph: C(n^k, n) = " + subsets.str() +
                      " exceeds enumeration guard " + std::to_string(enum_guard));

  // coordinate j of vertex id v, row-major over [n]^k
  std::vector<long long> stride(k, 1);
  for (int j = k - 2; j >= 0; --j) stride[j] = stride[j + 1] * n;
  auto coord = [&](long long v, int j) { return static_cast<int>((v / stride[j]) % n); };

  std::vector<MultisetEdge> edges;
  std::vector<int> pick(n);
  std::iota(pick.begin(), pick.end(), 0);
  std::vector<char> seen(n);
  while (true) {
    for (int j = 0; j < k; ++j) {
      std::fill(seen.begin(), seen.end(), 0);
      bool injective = true;
      for (int t = 0; t < n && injective; ++t) {
        int c = coord(pick[t], j);
        if (seen[c]) injective = false;
        seen[c] = 1;
      }
      if (injective) {
        edges.emplace_back(pick);
        break;
      }
    }
    int i = n - 1;
    while (i >= 0 && pick[i] == verts - n + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return RMultigraph::make(n, static_cast<int>(verts), std::move(edges));
}

Rational hajek_uniform_value(int n, int k) {
  if (n < 1 || k < 1) throw validation_error("hajek_uniform_value: need n, k >= 1");
  Rational lambda_edge(factorial(n), int_pow(Int(n), n));
  return 1 - rat_pow(1 - lambda_edge, k);
}

std::array<std::array<int, 4>, 9> tetracode_words() {
  constexpr std::array<int, 4> g1{1, 0, 1, 1};
  constexpr std::array<int, 4> g2{0, 1, 1, 2};
  std::array<std::array<int, 4>, 9> words{};
  int idx = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      for (int j = 0; j < 4; ++j) words[idx][j] = (a * g1[j] + b * g2[j]) % 3;
      ++idx;
    }
  return words;
}

HajekSearchReport hajek_counterexample_search(int n, int k, LambdaConfig config) {
  RMultigraph g = hajek_hypergraph(n, k);
  HajekSearchReport out;
  if (n == 3 && k == 4) {
    // uniform weight on the 9 tetracode words, seen as vertices of [3]^4
    std::vector<double> start(g.n(), 0.0);
    for (const auto& w : tetracode_words()) {
      int v = ((w[0] * 3 + w[1]) * 3 + w[2]) * 3 + w[3];
      start[v] = 1.0 / 9.0;
    }
    config.extra_starts.push_back(std::move(start));
    out.used_tetracode_starts = true;
  }
  out.report = lambda_estimate(g, config);
  out.uniform_value = to_double(hajek_uniform_value(n, k));
  out.exceeds_uniform = out.report.estimate > out.uniform_value + 1e-9;
  return out;
}

KmCheckResult korner_marton_check(int r, int k, double lambda_est) {
  if (r < 1 || k < 1) throw validation_error("korner_marton_check: need r, k >= 1");
  if (!(lambda_est >= 0.0) || lambda_est > 1.0)
    throw validation_error("korner_marton_check: lambda estimate outside [0,1]");
  KmCheckResult res;
  double lambda_edge = to_double(Rational(factorial(r), int_pow(Int(r), r)));
  res.lower_bound = std::log2(1.0 / (1.0 - lambda_edge));
  res.upper_bound = to_double(Rational(factorial(r), int_pow(Int(r), r - 1)));
  res.rate = lambda_est < 1.0
                 ? std::log2(1.0 / (1.0 - lambda_est)) / k
                 : std::numeric_limits<double>::infinity();
  res.lower_ok = res.rate + 1e-9 >= res.lower_bound;
  res.upper_consistent = res.rate <= res.upper_bound + 1e-9;
  return res;
}

}  // namespace turan
