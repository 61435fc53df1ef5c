#ifndef TURAN_CONSTRUCTIONS_HPP
#define TURAN_CONSTRUCTIONS_HPP

#include "turan/hypergraph.hpp"

namespace turan {

// (r+s)-graph on V(G) ⊔ V(H) whose edges are unions of a G-edge and an
// H-edge. Inputs must be simple.
RMultigraph star_product(const RMultigraph& g, const RMultigraph& h);

// r-multigraph: E(G) ⊔ E(H) plus every r-multiset (repetition allowed)
// meeting both vertex classes. Same uniformity required.
RMultigraph oplus_join(const RMultigraph& g, const RMultigraph& h);

// r-graph: E(G) ⊔ E(H) plus every crossing r-SET. Simple inputs.
RMultigraph cross_product(const RMultigraph& g, const RMultigraph& h);

// Grid-style strong product: v(G)*v(H) vertices indexed (i,v) -> i*v(H)+v.
// For each H-edge, all transversals across its copy rows; for each G-edge,
// all transversals across the chosen parts. Simple inputs, same uniformity.
RMultigraph strong_product(const RMultigraph& g, const RMultigraph& h);

// Left-associated k-fold strong product of the single r-edge; r^k vertices.
RMultigraph strong_power(int r, int k, long long vertex_guard = 100);

// (r+s)-multigraph: G-edges completed by arbitrary s-multisets of V(H), and
// symmetrically. Simple inputs.
RMultigraph circ_product(const RMultigraph& g, const RMultigraph& h);

// Adds an apex vertex v with edges {v} ∪ e over all (r-1)-multisets e of
// V(G), keeping E(G). Requires r >= 2. Multigraph in general.
RMultigraph j_augment(const RMultigraph& g);

}  // namespace turan

#endif
