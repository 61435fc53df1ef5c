#include "turan/extremal.hpp"

#include <algorithm>

namespace turan {

ForbiddenFamily ForbiddenFamily::make(int r, std::vector<RMultigraph> members) {
  if (r < 1) throw validation_error("ForbiddenFamily: uniformity must be >= 1");
  for (const auto& g : members) {
    if (g.r() != r) throw validation_error("ForbiddenFamily: mixed uniformities");
    if (!g.simple()) throw validation_error("ForbiddenFamily: members must be simple");
  }
  return ForbiddenFamily{r, std::move(members)};
}

ForbiddenFamily ForbiddenFamily::make(std::vector<RMultigraph> members) {
  if (members.empty())
    throw validation_error("ForbiddenFamily: cannot infer uniformity from empty list");
  int r = members.front().r();
  return make(r, std::move(members));
}

namespace {

// Backtracking check: is there an injective embedding of `pattern` into the
// host edge set that maps some pattern edge onto `anchor`? Used when the DFS
// adds `anchor`, so earlier copies were already excluded.
struct AnchoredEmbed {
  const RMultigraph& pattern;
  const std::vector<MultisetEdge>& host_edges;  // sorted
  int host_n;
  std::vector<int> assign;
  std::vector<char> used;
  std::vector<std::vector<int>> edges_containing;

  AnchoredEmbed(const RMultigraph& p, const std::vector<MultisetEdge>& edges, int n)
      : pattern(p), host_edges(edges), host_n(n), assign(p.n(), -1), used(n, 0),
        edges_containing(p.n()) {
    for (std::size_t i = 0; i < p.edges().size(); ++i)
      p.edges()[i].for_groups([&](int v, int) {
        edges_containing[v].push_back(static_cast<int>(i));
      });
  }

  bool host_has(const MultisetEdge& e) const {
    return std::binary_search(host_edges.begin(), host_edges.end(), e);
  }

  // Vertices are pre-assigned out of order by the anchor, so completeness of
  // an edge has to be tested explicitly rather than by assignment order.
  bool consistent(int v) const {
    for (int ei : edges_containing[v]) {
      std::vector<int> verts;
      verts.reserve(pattern.r());
      bool complete = true;
      for (int w : pattern.edges()[ei].verts()) {
        if (assign[w] < 0) {
          complete = false;
          break;
        }
        verts.push_back(assign[w]);
      }
      if (complete && !host_has(MultisetEdge(std::move(verts)))) return false;
    }
    return true;
  }

  bool extend(int v) {
    while (v < pattern.n() && assign[v] >= 0) ++v;
    if (v == pattern.n()) return true;
    for (int w = 0; w < host_n; ++w) {
      if (used[w]) continue;
      assign[v] = w;
      used[w] = 1;
      if (consistent(v) && extend(v + 1)) return true;
      used[w] = 0;
      assign[v] = -1;
    }
    return false;
  }

  bool anchored_at(const MultisetEdge& anchor) {
    for (const auto& pedge : pattern.edges()) {
      const auto& pv = pedge.verts();
      const auto& av = anchor.verts();
      // try every bijection between the pattern edge and the anchor edge
      std::vector<int> target = av;
      std::sort(target.begin(), target.end());
      do {
        std::fill(assign.begin(), assign.end(), -1);
        std::fill(used.begin(), used.end(), 0);
        bool ok = true;
        for (std::size_t i = 0; i < pv.size() && ok; ++i) {
          if (assign[pv[i]] >= 0 || used[target[i]]) ok = false;
          assign[pv[i]] = target[i];
          used[target[i]] = 1;
        }
        // verify pattern edges already complete under the partial map
        if (ok) {
          for (const auto& pe : pattern.edges()) {
            bool complete = true;
            for (int w : pe.verts())
              if (assign[w] < 0) {
                complete = false;
                break;
              }
            if (complete) {
              std::vector<int> verts;
              for (int w : pe.verts()) verts.push_back(assign[w]);
              if (!host_has(MultisetEdge(std::move(verts)))) {
                ok = false;
                break;
              }
            }
          }
        }
        if (ok && extend(0)) return true;
      } while (std::next_permutation(target.begin(), target.end()));
    }
    return false;
  }
};

struct ExSearch {
  int n;
  const ForbiddenFamily& family;
  std::vector<MultisetEdge> candidates;
  std::vector<MultisetEdge> current;  // kept sorted: candidates added in lex order
  std::vector<MultisetEdge> best_edges;
  long long best = -1;

  ExSearch(int verts, const ForbiddenFamily& fam) : n(verts), family(fam) {
    candidates = set_universe(n, fam.r);
  }

  bool creates_forbidden(const MultisetEdge& added) {
    for (const auto& f : family.members) {
      if (f.n() > n || f.edges().empty()) continue;
      AnchoredEmbed search(f, current, n);
      if (search.anchored_at(added)) return true;
    }
    return false;
  }

  void dfs(std::size_t index) {
    if (static_cast<long long>(current.size()) > best) {
      best = static_cast<long long>(current.size());
      best_edges = current;
    }
    if (index == candidates.size()) return;
    // bound: even taking every remaining candidate cannot beat the best
    if (static_cast<long long>(current.size() + (candidates.size() - index)) <= best)
      return;

    current.push_back(candidates[index]);
    if (!creates_forbidden(candidates[index])) dfs(index + 1);
    current.pop_back();

    dfs(index + 1);
  }
};

}  // namespace

ExBruteResult ex_brute(int n, const ForbiddenFamily& family, long long guard) {
  if (n < 0) throw validation_error("ex_brute: negative vertex count");
  Int m = binomial(n, family.r);
  if (m > guard)
    throw guard_error("ex_brute: C(n,r) = " + m.str() + " exceeds guard " +
                      std::to_string(guard));

  // A member without edges embeds into every graph with at least v(F)
  // vertices, so no free graph exists and ex = 0 by convention.
  for (const auto& f : family.members)
    if (f.edges().empty() && f.n() <= n)
      return ExBruteResult{0, RMultigraph::empty(family.r, n)};

  if (family.members.empty()) {
    RMultigraph full = RMultigraph::complete(family.r, n);
    return ExBruteResult{full.edge_count(), full};
  }

  ExSearch search(n, family);
  search.dfs(0);
  return ExBruteResult{search.best,
                       RMultigraph::make(family.r, n, std::move(search.best_edges))};
}

std::vector<PiPoint> pi_sequence(const ForbiddenFamily& family, int n_min, int n_max,
                                 long long guard) {
  if (n_min < family.r || n_min > n_max)
    throw validation_error("pi_sequence: need r <= n_min <= n_max");
  std::vector<PiPoint> points;
  for (int n = n_min; n <= n_max; ++n) {
    auto res = ex_brute(n, family, guard);
    points.push_back(PiPoint{n, res.max_edges,
                             Rational(res.max_edges) / Rational(binomial(n, family.r))});
  }
  return points;
}

}  // namespace turan
