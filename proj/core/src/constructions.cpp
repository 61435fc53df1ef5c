#include "turan/constructions.hpp"

#include <algorithm>

namespace turan {

namespace {

void require_simple(const RMultigraph& g, const char* op) {
  if (!g.simple())
    throw validation_error(std::string(op) + ": input must be a simple graph");
}

std::vector<int> shift(const std::vector<int>& verts, int offset) {
  std::vector<int> out = verts;
  for (int& v : out) v += offset;
  return out;
}

}  // namespace

RMultigraph star_product(const RMultigraph& g, const RMultigraph& h) {
  require_simple(g, "star_product");
  require_simple(h, "star_product");
  std::vector<MultisetEdge> edges;
  edges.reserve(g.edges().size() * h.edges().size());
  for (const auto& e : g.edges())
    for (const auto& f : h.edges()) {
      std::vector<int> verts = e.verts();
      for (int v : f.verts()) verts.push_back(v + g.n());
      edges.emplace_back(std::move(verts));
    }
  return RMultigraph::make(g.r() + h.r(), g.n() + h.n(), std::move(edges));
}

RMultigraph oplus_join(const RMultigraph& g, const RMultigraph& h) {
  if (g.r() != h.r()) throw validation_error("oplus_join: uniformity mismatch");
  require_simple(g, "oplus_join");
  require_simple(h, "oplus_join");
  const int r = g.r();
  std::vector<MultisetEdge> edges = g.edges();
  for (const auto& e : h.edges()) edges.emplace_back(shift(e.verts(), g.n()));
  // Crossing multisets: i >= 1 elements (with multiplicity) from V(G) and
  // r-i >= 1 from V(H).
  for (int i = 1; i < r; ++i) {
    auto left = multiset_universe(g.n(), i);
    auto right = multiset_universe(h.n(), r - i);
    for (const auto& a : left)
      for (const auto& b : right) {
        std::vector<int> verts = a.verts();
        for (int v : b.verts()) verts.push_back(v + g.n());
        edges.emplace_back(std::move(verts));
      }
  }
  return RMultigraph::make(r, g.n() + h.n(), std::move(edges));
}

RMultigraph cross_product(const RMultigraph& g, const RMultigraph& h) {
  if (g.r() != h.r()) throw validation_error("cross_product: uniformity mismatch");
  require_simple(g, "cross_product");
  require_simple(h, "cross_product");
  const int r = g.r();
  std::vector<MultisetEdge> edges = g.edges();
  for (const auto& e : h.edges()) edges.emplace_back(shift(e.verts(), g.n()));
  for (int i = 1; i < r; ++i) {
    auto left = set_universe(g.n(), i);
    auto right = set_universe(h.n(), r - i);
    for (const auto& a : left)
      for (const auto& b : right) {
        std::vector<int> verts = a.verts();
        for (int v : b.verts()) verts.push_back(v + g.n());
        edges.emplace_back(std::move(verts));
      }
  }
  return RMultigraph::make(r, g.n() + h.n(), std::move(edges));
}

RMultigraph strong_product(const RMultigraph& g, const RMultigraph& h) {
  if (g.r() != h.r()) throw validation_error("strong_product: uniformity mismatch");
  require_simple(g, "strong_product");
  require_simple(h, "strong_product");
  const int r = g.r();
  const int m = h.n();
  std::vector<MultisetEdge> edges;
  std::vector<int> verts(r), choice(r);

  // For an H-edge (v^1,...,v^r): one copy of each v^t, copy indices free.
  for (const auto& hedge : h.edges()) {
    const auto& hv = hedge.verts();
    std::fill(choice.begin(), choice.end(), 0);
    while (true) {
      for (int t = 0; t < r; ++t) verts[t] = choice[t] * m + hv[t];
      edges.emplace_back(verts);
      int t = r - 1;
      while (t >= 0 && choice[t] == g.n() - 1) choice[t--] = 0;
      if (t < 0) break;
      ++choice[t];
    }
  }
  // For a G-edge (i_1,...,i_r): one vertex from each part V_{i_j}, free.
  for (const auto& gedge : g.edges()) {
    const auto& gv = gedge.verts();
    std::fill(choice.begin(), choice.end(), 0);
    while (true) {
      for (int j = 0; j < r; ++j) verts[j] = gv[j] * m + choice[j];
      edges.emplace_back(verts);
      int j = r - 1;
      while (j >= 0 && choice[j] == m - 1) choice[j--] = 0;
      if (j < 0) break;
      ++choice[j];
    }
  }
  return RMultigraph::make(r, g.n() * m, std::move(edges));
}

RMultigraph strong_power(int r, int k, long long vertex_guard) {
  if (r < 1) throw validation_error("strong_power: uniformity must be >= 1");
  if (k < 1) throw validation_error("strong_power: exponent must be >= 1");
  long long verts = 1;
  for (int i = 0; i < k; ++i) {
    verts *= r;
    if (verts > vertex_guard)
      throw guard_error("strong_power: r^k = " + std::to_string(verts) +
                        "+ exceeds vertex guard " + std::to_string(vertex_guard));
  }
  RMultigraph power = RMultigraph::single_edge(r);
  for (int i = 1; i < k; ++i)
    power = strong_product(power, RMultigraph::single_edge(r));
  return power;
}

RMultigraph circ_product(const RMultigraph& g, const RMultigraph& h) {
  require_simple(g, "circ_product");
  require_simple(h, "circ_product");
  std::vector<MultisetEdge> edges;
  auto h_multisets = multiset_universe(h.n(), h.r());
  for (const auto& e : g.edges())
    for (const auto& f : h_multisets) {
      std::vector<int> verts = e.verts();
      for (int v : f.verts()) verts.push_back(v + g.n());
      edges.emplace_back(std::move(verts));
    }
  auto g_multisets = multiset_universe(g.n(), g.r());
  for (const auto& e : g_multisets)
    for (const auto& f : h.edges()) {
      std::vector<int> verts = e.verts();
      for (int v : f.verts()) verts.push_back(v + g.n());
      edges.emplace_back(std::move(verts));
    }
  return RMultigraph::make(g.r() + h.r(), g.n() + h.n(), std::move(edges));
}

RMultigraph j_augment(const RMultigraph& g) {
  if (g.r() < 2) throw validation_error("j_augment: requires uniformity >= 2");
  const int apex = g.n();
  std::vector<MultisetEdge> edges = g.edges();
  for (const auto& e : multiset_universe(g.n(), g.r() - 1)) {
    std::vector<int> verts = e.verts();
    verts.push_back(apex);
    edges.emplace_back(std::move(verts));
  }
  return RMultigraph::make(g.r(), g.n() + 1, std::move(edges));
}

}  // namespace turan
