#ifndef TURAN_EXTREMAL_HPP
#define TURAN_EXTREMAL_HPP

#include "turan/hypergraph.hpp"
#include "turan/numeric.hpp"

#include <vector>

namespace turan {

// Finite truncation of a forbidden family: simple graphs, one uniformity.
struct ForbiddenFamily {
  int r = 2;
  std::vector<RMultigraph> members;

  static ForbiddenFamily make(int r, std::vector<RMultigraph> members);
  static ForbiddenFamily make(std::vector<RMultigraph> members);  // r from first
};

struct ExBruteResult {
  long long max_edges = 0;
  RMultigraph witness;
};

// Exact maximum edge count of a family-free r-graph on n vertices, by DFS
// over candidate edges in lexicographic order with forbidden-subgraph and
// count-bound pruning. Returns 0 with an edgeless witness when no free graph
// exists (some member embeds into the empty graph). guard bounds C(n,r).
ExBruteResult ex_brute(int n, const ForbiddenFamily& family, long long guard = 35);

struct PiPoint {
  int n = 0;
  long long ex = 0;
  Rational density;  // ex / C(n,r)
};

// The finite density sequence ex(n,.)/C(n,r) for n in [n_min, n_max];
// nonincreasing in n.
std::vector<PiPoint> pi_sequence(const ForbiddenFamily& family, int n_min,
                                 int n_max, long long guard = 35);

}  // namespace turan

#endif
