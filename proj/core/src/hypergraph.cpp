#include "turan/hypergraph.hpp"

#include <algorithm>
#include <numeric>

namespace turan {

MultisetEdge::MultisetEdge(std::vector<int> verts) : verts_(std::move(verts)) {
  std::sort(verts_.begin(), verts_.end());
}

bool MultisetEdge::is_set() const {
  return std::adjacent_find(verts_.begin(), verts_.end()) == verts_.end();
}

int MultisetEdge::multiplicity(int v) const {
  auto range = std::equal_range(verts_.begin(), verts_.end(), v);
  return static_cast<int>(range.second - range.first);
}

bool MultisetEdge::contains(int v) const {
  return std::binary_search(verts_.begin(), verts_.end(), v);
}

RMultigraph RMultigraph::make(int r, int n, const std::vector<std::vector<int>>& edges) {
  std::vector<MultisetEdge> es;
  es.reserve(edges.size());
  for (const auto& e : edges) es.emplace_back(e);
  return make(r, n, std::move(es));
}

RMultigraph RMultigraph::make(int r, int n, std::vector<MultisetEdge> edges) {
  if (r < 1) throw validation_error("RMultigraph: uniformity must be >= 1");
  if (n < 0) throw validation_error("RMultigraph: negative vertex count");
  for (const auto& e : edges) {
    if (e.size() != r)
      throw validation_error("RMultigraph: edge of size " + std::to_string(e.size()) +
                             " in a " + std::to_string(r) + "-graph");
    for (int v : e.verts())
      if (v < 0 || v >= n)
        throw validation_error("RMultigraph: vertex id " + std::to_string(v) +
                               " out of range [0," + std::to_string(n) + ")");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  RMultigraph g;
  g.r_ = r;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.simple_ = std::all_of(g.edges_.begin(), g.edges_.end(),
                          [](const MultisetEdge& e) { return e.is_set(); });
  return g;
}

RMultigraph RMultigraph::empty(int r, int n) { return make(r, n, std::vector<MultisetEdge>{}); }

RMultigraph RMultigraph::single_edge(int r) {
  std::vector<int> verts(r);
  std::iota(verts.begin(), verts.end(), 0);
  return make(r, r, std::vector<MultisetEdge>{MultisetEdge(verts)});
}

RMultigraph RMultigraph::complete(int r, int t) {
  if (t < 0) throw validation_error("complete: negative order");
  return make(r, t, set_universe(t, r));
}

bool RMultigraph::has_edge(const MultisetEdge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

RMultigraph complement(const RMultigraph& g) {
  auto universe = multiset_universe(g.n(), g.r());
  std::vector<MultisetEdge> rest;
  rest.reserve(universe.size() - g.edges().size());
  std::set_difference(universe.begin(), universe.end(), g.edges().begin(),
                      g.edges().end(), std::back_inserter(rest));
  return RMultigraph::make(g.r(), g.n(), std::move(rest));
}

RMultigraph disjoint_union(const RMultigraph& g, const RMultigraph& h) {
  if (g.r() != h.r())
    throw validation_error("disjoint_union: uniformity mismatch");
  std::vector<MultisetEdge> edges = g.edges();
  for (const auto& e : h.edges()) {
    std::vector<int> verts = e.verts();
    for (int& v : verts) v += g.n();
    edges.emplace_back(std::move(verts));
  }
  return RMultigraph::make(g.r(), g.n() + h.n(), std::move(edges));
}

namespace {

// Emit every way of choosing, for each (part, m) group of the profile,
// an m-subset of that part; the union of the choices is one blown-up edge.
void emit_profile_edges(const std::vector<std::pair<int, int>>& groups,
                        const std::vector<int>& part_begin,
                        const std::vector<int>& part_size, std::size_t gi,
                        std::vector<int>& acc, std::vector<MultisetEdge>& out) {
  if (gi == groups.size()) {
    out.emplace_back(acc);
    return;
  }
  auto [part, m] = groups[gi];
  int size = part_size[part];
  if (m > size) return;
  std::vector<int> pick(m);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::size_t base = acc.size();
    for (int idx : pick) acc.push_back(part_begin[part] + idx);
    emit_profile_edges(groups, part_begin, part_size, gi + 1, acc, out);
    acc.resize(base);
    // next m-combination of [0, size)
    int i = m - 1;
    while (i >= 0 && pick[i] == size - m + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

RMultigraph blow_up(const RMultigraph& g, const std::vector<int>& sizes) {
  if (static_cast<int>(sizes.size()) != g.n())
    throw validation_error("blow_up: need one part size per vertex");
  for (int s : sizes)
    if (s < 1) throw validation_error("blow_up: part sizes must be positive");

  std::vector<int> part_begin(g.n(), 0);
  for (int i = 1; i < g.n(); ++i) part_begin[i] = part_begin[i - 1] + sizes[i - 1];
  int total = g.n() == 0 ? 0 : part_begin[g.n() - 1] + sizes[g.n() - 1];

  std::vector<MultisetEdge> edges;
  std::vector<int> acc;
  for (const auto& pattern : g.edges()) {
    std::vector<std::pair<int, int>> groups;
    pattern.for_groups([&](int v, int m) { groups.emplace_back(v, m); });
    emit_profile_edges(groups, part_begin, sizes, 0, acc, edges);
  }
  // Distinct profiles produce disjoint edge sets, so no dedupe is needed;
  // make() still normalizes.
  return RMultigraph::make(g.r(), total, std::move(edges));
}

RMultigraph blow_up_uniform(const RMultigraph& g, int t) {
  return blow_up(g, std::vector<int>(g.n(), t));
}

RMultigraph induced(const RMultigraph& g, const std::vector<int>& keep) {
  std::vector<int> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> relabel(g.n(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= g.n())
      throw validation_error("induced: vertex out of range");
    relabel[sorted[i]] = static_cast<int>(i);
  }
  std::vector<MultisetEdge> edges;
  for (const auto& e : g.edges()) {
    std::vector<int> verts;
    verts.reserve(e.size());
    bool inside = true;
    for (int v : e.verts()) {
      if (relabel[v] < 0) {
        inside = false;
        break;
      }
      verts.push_back(relabel[v]);
    }
    if (inside) edges.emplace_back(std::move(verts));
  }
  return RMultigraph::make(g.r(), static_cast<int>(sorted.size()), std::move(edges));
}

namespace {

// (edge count at v, total multiplicity of v) -- isomorphism invariant.
std::vector<std::pair<int, int>> degree_profile(const RMultigraph& g) {
  std::vector<std::pair<int, int>> deg(g.n(), {0, 0});
  for (const auto& e : g.edges())
    e.for_groups([&](int v, int m) {
      deg[v].first += 1;
      deg[v].second += m;
    });
  return deg;
}

MultisetEdge map_edge(const MultisetEdge& e, const std::vector<int>& f) {
  std::vector<int> verts;
  verts.reserve(e.size());
  for (int v : e.verts()) verts.push_back(f[v]);
  return MultisetEdge(std::move(verts));
}

struct EmbedSearch {
  const RMultigraph& pattern;
  const RMultigraph& host;
  bool injective;
  std::vector<int> assign;        // pattern vertex -> host vertex or -1
  std::vector<char> used;         // host vertex used (injective mode)
  std::vector<std::vector<int>> edges_closed_by;  // pattern edges whose max vertex is v

  EmbedSearch(const RMultigraph& p, const RMultigraph& h, bool inj)
      : pattern(p), host(h), injective(inj), assign(p.n(), -1), used(h.n(), 0),
        edges_closed_by(p.n()) {
    for (std::size_t i = 0; i < p.edges().size(); ++i) {
      const auto& verts = p.edges()[i].verts();
      if (!verts.empty()) edges_closed_by[verts.back()].push_back(static_cast<int>(i));
    }
  }

  bool feasible(int v) const {
    for (int ei : edges_closed_by[v])
      if (!host.has_edge(map_edge(pattern.edges()[ei], assign))) return false;
    return true;
  }

  bool search(int v) {
    if (v == pattern.n()) return true;
    for (int w = 0; w < host.n(); ++w) {
      if (injective && used[w]) continue;
      assign[v] = w;
      if (injective) used[w] = 1;
      if (feasible(v) && search(v + 1)) return true;
      if (injective) used[w] = 0;
      assign[v] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<EmbeddingMap> find_embedding(const RMultigraph& pattern,
                                           const RMultigraph& host,
                                           bool injective, int guard) {
  if (pattern.r() != host.r())
    throw validation_error("find_embedding: uniformity mismatch");
  if (pattern.n() > guard)
    throw guard_error("find_embedding: pattern has " + std::to_string(pattern.n()) +
                      " vertices, guard is " + std::to_string(guard));
  if (injective && pattern.n() > host.n()) return std::nullopt;
  if (pattern.n() == 0) return EmbeddingMap{{}, injective};

  EmbedSearch s(pattern, host, injective);
  if (!s.search(0)) return std::nullopt;
  return EmbeddingMap{s.assign, injective};
}

RMultigraph canonical_form(const RMultigraph& g, int guard) {
  if (g.n() > guard)
    throw guard_error("canonical_form: " + std::to_string(g.n()) +
                      " vertices exceeds guard " + std::to_string(guard));
  if (g.n() == 0) return g;

  std::vector<int> perm(g.n());  // old id -> new id
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<MultisetEdge> best, relabeled;
  bool have_best = false;
  do {
    relabeled.clear();
    relabeled.reserve(g.edges().size());
    for (const auto& e : g.edges()) relabeled.push_back(map_edge(e, perm));
    std::sort(relabeled.begin(), relabeled.end());
    if (!have_best || relabeled < best) {
      best = relabeled;
      have_best = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return RMultigraph::make(g.r(), g.n(), std::move(best));
}

namespace {

struct IsoSearch {
  const RMultigraph& a;
  const RMultigraph& b;
  std::vector<std::pair<int, int>> deg_a, deg_b;
  std::vector<int> assign;
  std::vector<char> used;
  std::vector<std::vector<int>> edges_closed_by;

  IsoSearch(const RMultigraph& x, const RMultigraph& y)
      : a(x), b(y), deg_a(degree_profile(x)), deg_b(degree_profile(y)),
        assign(x.n(), -1), used(y.n(), 0), edges_closed_by(x.n()) {
    for (std::size_t i = 0; i < x.edges().size(); ++i) {
      const auto& verts = x.edges()[i].verts();
      if (!verts.empty()) edges_closed_by[verts.back()].push_back(static_cast<int>(i));
    }
  }

  bool search(int v) {
    if (v == a.n()) return true;
    for (int w = 0; w < b.n(); ++w) {
      if (used[w] || deg_a[v] != deg_b[w]) continue;
      assign[v] = w;
      used[w] = 1;
      bool ok = true;
      for (int ei : edges_closed_by[v])
        if (!b.has_edge(map_edge(a.edges()[ei], assign))) {
          ok = false;
          break;
        }
      if (ok && search(v + 1)) return true;
      used[w] = 0;
      assign[v] = -1;
    }
    return false;
  }
};

}  // namespace

bool isomorphic(const RMultigraph& a, const RMultigraph& b, int guard) {
  if (a.r() != b.r() || a.n() != b.n() || a.edge_count() != b.edge_count())
    return false;
  if (a.n() > guard)
    throw guard_error("isomorphic: " + std::to_string(a.n()) +
                      " vertices exceeds guard " + std::to_string(guard));
  auto da = degree_profile(a);
  auto db = degree_profile(b);
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  // A vertex bijection mapping E(a) into E(b) with equal edge counts is an
  // isomorphism: distinct edges stay distinct under a bijection.
  IsoSearch s(a, b);
  return s.search(0);
}

namespace {

void enumerate_multisets(int n, int r, int min_v, std::vector<int>& acc,
                         std::vector<MultisetEdge>& out) {
  if (r == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int v = min_v; v < n; ++v) {
    acc.push_back(v);
    enumerate_multisets(n, r - 1, v, acc, out);
    acc.pop_back();
  }
}

void enumerate_sets(int n, int r, int min_v, std::vector<int>& acc,
                    std::vector<MultisetEdge>& out) {
  if (r == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int v = min_v; v + r <= n; ++v) {
    acc.push_back(v);
    enumerate_sets(n, r - 1, v + 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<MultisetEdge> multiset_universe(int n, int r) {
  std::vector<MultisetEdge> out;
  std::vector<int> acc;
  enumerate_multisets(n, r, 0, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

Int multiset_universe_size(int n, int r) { return binomial(n + r - 1, r); }

std::vector<MultisetEdge> set_universe(int n, int r) {
  std::vector<MultisetEdge> out;
  std::vector<int> acc;
  enumerate_sets(n, r, 0, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace turan
