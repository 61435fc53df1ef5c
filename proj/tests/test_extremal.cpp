#include <doctest.h>

#include "turan/extremal.hpp"
#include "turan/hypergraph.hpp"

#include <random>

using namespace turan;

TEST_SUITE_BEGIN("extremal");

namespace {

// independent oracle: enumerate all edge subsets (only for tiny C(n,r))
long long exhaustive_ex(int n, const ForbiddenFamily& family) {
  auto candidates = set_universe(n, family.r);
  const std::size_t m = candidates.size();
  REQUIRE(m <= 20);
  long long best = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<MultisetEdge> edges;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1u << i)) edges.push_back(candidates[i]);
    RMultigraph g = RMultigraph::make(family.r, n, edges);
    bool free = true;
    for (const auto& f : family.members) {
      if (f.n() > n) continue;
      if (find_embedding(f, g, true).has_value()) {
        free = false;
        break;
      }
    }
    if (free) best = std::max(best, g.edge_count());
  }
  return best;
}

}  // namespace

TEST_CASE("triangle-free maxima at tiny scale") {
  ForbiddenFamily triangle = ForbiddenFamily::make({RMultigraph::complete(2, 3)});
  auto r4 = ex_brute(4, triangle);
  CHECK(r4.max_edges == 4);  // C_4
  auto r5 = ex_brute(5, triangle);
  CHECK(r5.max_edges == 6);

  // witnesses really are triangle-free
  CHECK_FALSE(find_embedding(RMultigraph::complete(2, 3), r5.witness, true).has_value());
  CHECK(r5.witness.edge_count() == 6);
}

TEST_CASE("empty family means nothing is forbidden") {
  ForbiddenFamily none = ForbiddenFamily::make(2, {});
  auto res = ex_brute(5, none);
  CHECK(res.max_edges == 10);
  CHECK(res.witness == RMultigraph::complete(2, 5));
}

TEST_CASE("edgeless member forces the zero convention") {
  // two isolated vertices embed into everything on >= 2 vertices
  ForbiddenFamily family = ForbiddenFamily::make({RMultigraph::empty(2, 2)});
  auto res = ex_brute(4, family);
  CHECK(res.max_edges == 0);
  CHECK(res.witness.edge_count() == 0);
}

TEST_CASE("agrees with exhaustive enumeration") {
  std::mt19937_64 rng(71);
  ForbiddenFamily triangle = ForbiddenFamily::make({RMultigraph::complete(2, 3)});
  for (int n = 3; n <= 5; ++n)
    CHECK(ex_brute(n, triangle).max_edges == exhaustive_ex(n, triangle));

  ForbiddenFamily k43 = ForbiddenFamily::make({RMultigraph::complete(3, 4)});
  for (int n = 4; n <= 5; ++n)
    CHECK(ex_brute(n, k43).max_edges == exhaustive_ex(n, k43));

  // random 2-graph families on 4 vertices
  for (int t = 0; t < 6; ++t) {
    std::vector<MultisetEdge> edges;
    for (const auto& e : set_universe(4, 2))
      if (rng() & 1) edges.push_back(e);
    if (edges.empty()) continue;
    ForbiddenFamily family = ForbiddenFamily::make({RMultigraph::make(2, 4, edges)});
    CHECK(ex_brute(5, family).max_edges == exhaustive_ex(5, family));
  }
}

TEST_CASE("larger families can only lower the maximum") {
  std::mt19937_64 rng(73);
  RMultigraph k3 = RMultigraph::complete(2, 3);
  RMultigraph p3 = RMultigraph::make(2, 3, {{0, 1}, {1, 2}});
  ForbiddenFamily small = ForbiddenFamily::make({k3});
  ForbiddenFamily larger = ForbiddenFamily::make({k3, p3});
  for (int n = 3; n <= 6; ++n)
    CHECK(ex_brute(n, small).max_edges >= ex_brute(n, larger).max_edges);
}

TEST_CASE("density sequence is monotone") {
  ForbiddenFamily triangle = ForbiddenFamily::make({RMultigraph::complete(2, 3)});
  auto seq = pi_sequence(triangle, 3, 6);
  REQUIRE(seq.size() == 4);
  for (std::size_t i = 1; i < seq.size(); ++i) CHECK(seq[i].density <= seq[i - 1].density);
  CHECK(seq[0].density == Rational(2, 3));  // ex(3)=2 over C(3,2)=3

  ForbiddenFamily none = ForbiddenFamily::make(2, {});
  for (const auto& p : pi_sequence(none, 2, 5)) CHECK(p.density == 1);
}

TEST_CASE("guards and validation") {
  ForbiddenFamily triangle = ForbiddenFamily::make({RMultigraph::complete(2, 3)});
  CHECK_THROWS_AS(ex_brute(10, triangle), guard_error);  // C(10,2)=45 > 35
  CHECK_THROWS_AS(ForbiddenFamily::make({RMultigraph::complete(2, 3),
                                         RMultigraph::complete(3, 4)}),
                  validation_error);
  CHECK_THROWS_AS(ForbiddenFamily::make({RMultigraph::make(2, 2, {{0, 0}})}), validation_error);
  CHECK_THROWS_AS(pi_sequence(triangle, 1, 5), validation_error);
}

TEST_SUITE_END();
