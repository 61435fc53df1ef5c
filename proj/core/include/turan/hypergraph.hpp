#ifndef TURAN_HYPERGRAPH_HPP
#define TURAN_HYPERGRAPH_HPP

#include "turan/numeric.hpp"

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace turan {

// An r-multiset of vertex ids, stored as the sorted expanded id sequence
// (repeats allowed). Lexicographic order on that sequence.
class MultisetEdge {
 public:
  MultisetEdge() = default;
  explicit MultisetEdge(std::vector<int> verts);

  const std::vector<int>& verts() const { return verts_; }
  int size() const { return static_cast<int>(verts_.size()); }
  bool is_set() const;
  int multiplicity(int v) const;
  bool contains(int v) const;

  // Calls f(vertex, multiplicity) once per distinct vertex, in id order.
  template <typename F>
  void for_groups(F&& f) const {
    std::size_t i = 0;
    while (i < verts_.size()) {
      std::size_t j = i;
      while (j < verts_.size() && verts_[j] == verts_[i]) ++j;
      f(verts_[i], static_cast<int>(j - i));
      i = j;
    }
  }

  auto operator<=>(const MultisetEdge&) const = default;

 private:
  std::vector<int> verts_;
};

// Immutable r-multigraph value: uniformity r >= 1, vertices 0..n-1, a
// duplicate-free sorted edge set. simple() means every edge is a proper set.
class RMultigraph {
 public:
  RMultigraph() = default;

  static RMultigraph make(int r, int n, const std::vector<std::vector<int>>& edges);
  static RMultigraph make(int r, int n, std::vector<MultisetEdge> edges);
  static RMultigraph empty(int r, int n);
  static RMultigraph single_edge(int r);   // e_r on r vertices
  static RMultigraph complete(int r, int t);  // K_t^r

  int r() const { return r_; }
  int n() const { return n_; }
  bool simple() const { return simple_; }
  const std::vector<MultisetEdge>& edges() const { return edges_; }
  long long edge_count() const { return static_cast<long long>(edges_.size()); }
  bool has_edge(const MultisetEdge& e) const;

  bool operator==(const RMultigraph&) const = default;

 private:
  int r_ = 1;
  int n_ = 0;
  bool simple_ = true;
  std::vector<MultisetEdge> edges_;
};

struct EmbeddingMap {
  std::vector<int> assignment;  // pattern vertex -> host vertex
  bool injective = false;
};

// Complement against the full multiset universe V^(r).
RMultigraph complement(const RMultigraph& g);

// H's vertex ids shifted by v(G); edge sets concatenated.
RMultigraph disjoint_union(const RMultigraph& g, const RMultigraph& h);

// Profile blow-up: vertex i becomes a part of sizes[i] vertices; an r-set is
// an edge iff its part profile is an edge of the pattern. Always simple.
RMultigraph blow_up(const RMultigraph& g, const std::vector<int>& sizes);
RMultigraph blow_up_uniform(const RMultigraph& g, int t);

// Induced subgraph on the given vertices, relabeled 0..|keep|-1 in id order.
RMultigraph induced(const RMultigraph& g, const std::vector<int>& keep);

// Backtracking search for a homomorphism (edges map onto edges as multiset
// images) or an embedding when injective is set. Guard bounds v(pattern).
std::optional<EmbeddingMap> find_embedding(const RMultigraph& pattern,
                                           const RMultigraph& host,
                                           bool injective, int guard = 12);

// Lexicographically minimal relabeling over all vertex permutations, with
// degree-profile pruning. Desk scale only.
RMultigraph canonical_form(const RMultigraph& g, int guard = 8);
bool isomorphic(const RMultigraph& a, const RMultigraph& b, int guard = 12);

// All r-multisets on vertices 0..n-1, sorted. Size is C(n+r-1, r).
std::vector<MultisetEdge> multiset_universe(int n, int r);
Int multiset_universe_size(int n, int r);

// All r-subsets of 0..n-1, sorted.
std::vector<MultisetEdge> set_universe(int n, int r);

// Text format: header "r n", one edge per line as space-separated vertex ids
// with repetition; '#' starts a comment line. Serialization is byte-stable
// for normalized graphs.
RMultigraph parse_graph(std::istream& in);
RMultigraph parse_graph_text(const std::string& text);
RMultigraph load_graph(const std::string& path);
std::string serialize_graph(const RMultigraph& g);
void save_graph(const RMultigraph& g, const std::string& path);

}  // namespace turan

#endif
