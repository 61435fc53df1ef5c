#include <doctest.h>

#include "turan/hypergraph.hpp"

#include <random>
#include <sstream>

using namespace turan;

TEST_SUITE_BEGIN("hypergraph");

TEST_CASE("make_graph normalizes and validates") {
  RMultigraph triangle = RMultigraph::make(2, 3, {{1, 0}, {1, 2}, {0, 2}});
  CHECK(triangle.simple());
  CHECK(triangle.edge_count() == 3);
  CHECK(triangle == RMultigraph::complete(2, 3));

  RMultigraph k43 = RMultigraph::complete(3, 4);
  CHECK(k43.edge_count() == 4);
  CHECK(k43.simple());

  RMultigraph loop = RMultigraph::make(2, 2, {{0, 0}});
  CHECK_FALSE(loop.simple());

  // duplicates collapse, set semantics
  RMultigraph dup = RMultigraph::make(2, 3, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(dup.edge_count() == 1);

  CHECK_THROWS_AS(RMultigraph::make(2, 3, {{0, 1, 2}}), validation_error);
  CHECK_THROWS_AS(RMultigraph::make(2, 3, {{0, 3}}), validation_error);
  CHECK_THROWS_AS(RMultigraph::empty(0, 3), validation_error);
}

TEST_CASE("complement against the multiset universe") {
  RMultigraph single = RMultigraph::make(2, 2, {{0, 1}});
  RMultigraph comp = complement(single);
  CHECK(comp.edge_count() == 2);
  CHECK(comp.has_edge(MultisetEdge({0, 0})));
  CHECK(comp.has_edge(MultisetEdge({1, 1})));

  RMultigraph k3 = RMultigraph::complete(2, 3);
  CHECK(complement(complement(k3)) == k3);

  CHECK(complement(RMultigraph::empty(2, 2)).edge_count() == 3);  // C(3,2)
}

TEST_CASE("edge counts of G and its complement partition the universe") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 25; ++t) {
    int r = 1 + static_cast<int>(rng() % 4);
    int n = 1 + static_cast<int>(rng() % 5);
    std::vector<MultisetEdge> edges;
    for (const auto& e : multiset_universe(n, r))
      if (rng() & 1) edges.push_back(e);
    RMultigraph g = RMultigraph::make(r, n, edges);
    Int total = Int(g.edge_count()) + Int(complement(g).edge_count());
    CHECK(total == multiset_universe_size(n, r));
  }
}

TEST_CASE("disjoint union") {
  RMultigraph k3 = RMultigraph::complete(2, 3);
  RMultigraph two = disjoint_union(k3, k3);
  CHECK(two.n() == 6);
  CHECK(two.edge_count() == 6);

  CHECK(disjoint_union(k3, RMultigraph::empty(2, 0)) == k3);

  RMultigraph matching = disjoint_union(RMultigraph::single_edge(2), RMultigraph::single_edge(2));
  CHECK(matching.n() == 4);
  CHECK(matching.edge_count() == 2);
  CHECK(matching.has_edge(MultisetEdge({2, 3})));

  CHECK_THROWS_AS(disjoint_union(k3, RMultigraph::single_edge(3)), validation_error);
}

TEST_CASE("disjoint union is associative and commutative up to relabeling") {
  RMultigraph a = RMultigraph::make(2, 2, {{0, 1}});
  RMultigraph b = RMultigraph::complete(2, 3);
  RMultigraph c = RMultigraph::make(2, 3, {{0, 1}, {1, 2}});
  CHECK(canonical_form(disjoint_union(a, b)) == canonical_form(disjoint_union(b, a)));
  CHECK(canonical_form(disjoint_union(disjoint_union(a, b), c)) ==
        canonical_form(disjoint_union(a, disjoint_union(b, c))));
}

TEST_CASE("blow-up by profiles") {
  RMultigraph k3 = RMultigraph::complete(2, 3);
  RMultigraph blown = blow_up(k3, {2, 2, 2});
  CHECK(blown.n() == 6);
  CHECK(blown.edge_count() == 12);  // 3 part-pairs x 2*2 crossing pairs
  CHECK(blown.simple());

  // a loop pattern blows up to a complete graph inside the part
  RMultigraph loop = RMultigraph::make(2, 1, {{0, 0}});
  for (int t = 2; t <= 5; ++t)
    CHECK(blow_up(loop, {t}) == RMultigraph::complete(2, t));

  // trivial blow-up of a simple graph is the identity
  RMultigraph c4 = RMultigraph::make(2, 4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(blow_up(c4, {1, 1, 1, 1}) == c4);

  // blow-ups are simple even from multigraph patterns
  RMultigraph mixed = RMultigraph::make(3, 2, {{0, 0, 1}, {0, 1, 1}});
  CHECK(blow_up(mixed, {2, 3}).simple());

  CHECK_THROWS_AS(blow_up(k3, {1, 1}), validation_error);
  CHECK_THROWS_AS(blow_up(k3, {1, 0, 1}), validation_error);
}

TEST_CASE("induced subgraphs relabel") {
  RMultigraph k43 = RMultigraph::complete(3, 4);
  RMultigraph sub = induced(k43, {0, 1, 2});
  CHECK(sub == RMultigraph::single_edge(3));
  CHECK(induced(k43, {3}).edge_count() == 0);
}

TEST_CASE("embedding search") {
  RMultigraph k3 = RMultigraph::complete(2, 3);
  RMultigraph k4 = RMultigraph::complete(2, 4);
  RMultigraph c5 = RMultigraph::make(2, 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});

  auto found = find_embedding(k3, k4, true);
  REQUIRE(found.has_value());
  // witness maps edges to edges
  for (const auto& e : k3.edges()) {
    std::vector<int> image;
    for (int v : e.verts()) image.push_back(found->assignment[v]);
    CHECK(k4.has_edge(MultisetEdge(image)));
  }

  CHECK_FALSE(find_embedding(k3, c5, true).has_value());

  // homomorphism (non-injective): K_3 -> K_3 blow-up collapse direction,
  // and a loop pattern maps onto any vertex with a loop
  RMultigraph loop = RMultigraph::make(2, 1, {{0, 0}});
  RMultigraph host = RMultigraph::make(2, 2, {{0, 0}, {0, 1}});
  CHECK(find_embedding(loop, host, false).has_value());
  CHECK_FALSE(find_embedding(loop, k3, false).has_value());

  CHECK_THROWS_AS(find_embedding(RMultigraph::complete(2, 13), RMultigraph::complete(2, 13), true),
                  guard_error);
}

TEST_CASE("canonical form and isomorphism") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 15; ++t) {
    int n = 2 + static_cast<int>(rng() % 5);
    int r = 1 + static_cast<int>(rng() % 3);
    std::vector<MultisetEdge> edges;
    for (const auto& e : multiset_universe(n, r))
      if (rng() & 1) edges.push_back(e);
    RMultigraph g = RMultigraph::make(r, n, edges);

    // relabel by a random permutation
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<MultisetEdge> relabeled;
    for (const auto& e : g.edges()) {
      std::vector<int> verts;
      for (int v : e.verts()) verts.push_back(perm[v]);
      relabeled.emplace_back(std::move(verts));
    }
    RMultigraph h = RMultigraph::make(r, n, std::move(relabeled));
    CHECK(canonical_form(g) == canonical_form(h));
    CHECK(isomorphic(g, h));
  }

  RMultigraph c6 = RMultigraph::make(2, 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  RMultigraph two_triangles = disjoint_union(RMultigraph::complete(2, 3), RMultigraph::complete(2, 3));
  CHECK_FALSE(isomorphic(c6, two_triangles));  // same degree sequence, different graphs

  CHECK_THROWS_AS(canonical_form(RMultigraph::complete(2, 9)), guard_error);
}

TEST_CASE("text format round trip is byte-stable") {
  RMultigraph g = RMultigraph::make(3, 4, {{0, 0, 2}, {1, 2, 3}, {0, 1, 2}});
  std::string text = serialize_graph(g);
  CHECK(text == "3 4\n0 0 2\n0 1 2\n1 2 3\n");
  CHECK(parse_graph_text(text) == g);
  CHECK(serialize_graph(parse_graph_text(text)) == text);

  RMultigraph with_comments = parse_graph_text("# uniformity and vertex count\n3 4\n0 0 2 # a loop-ish edge\n1 2 3\n0 1 2\n");
  CHECK(with_comments == g);

  CHECK_THROWS_AS(parse_graph_text("3\n0 1 2\n"), validation_error);
  CHECK_THROWS_AS(parse_graph_text("2 3\n0 x\n"), validation_error);
  CHECK_THROWS_AS(parse_graph_text(""), validation_error);
}

TEST_CASE("round trip through a random corpus") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 20; ++t) {
    int r = 1 + static_cast<int>(rng() % 4);
    int n = 1 + static_cast<int>(rng() % 6);
    std::vector<MultisetEdge> edges;
    for (const auto& e : multiset_universe(n, r))
      if (rng() & 1) edges.push_back(e);
    RMultigraph g = RMultigraph::make(r, n, edges);
    CHECK(parse_graph_text(serialize_graph(g)) == g);
  }
}

TEST_SUITE_END();
