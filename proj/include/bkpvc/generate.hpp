#ifndef BKPVC_GENERATE_HPP
#define BKPVC_GENERATE_HPP

#include <cstdint>

#include "bkpvc/forest.hpp"

namespace bkpvc {

/// Tight family for the directed bound. F_1 is a directed path on k vertices;
/// F_{i+1} is a directed path on 2k vertices (ids 0..2k-1, root 0) whose k-th
/// vertex (id k-1) gets an arc to the root of a copy of F_i shifted by 2k.
/// n = k(2i-1), i leaves, i-1 branching vertices. InvalidParams if i < 1 or
/// k < 2.
RootedDirectedForest gen_directed_extremal(std::size_t i, std::size_t k);

/// Tight family for the undirected bound. F_1 is a path on k+1 vertices;
/// F_{i+1} adds two new k-vertex paths to F_i, each joined by one edge to the
/// highest-id leaf of F_i. New vertices get the next ids, so F_i is the
/// subgraph induced by the first k(2i-1)+1 ids. InvalidParams as above.
UndirectedForest gen_undirected_extremal(std::size_t i, std::size_t k);

// Seeded random forests, reproducible for equal arguments (within one
// standard library implementation). component_bias in [0,1] is the chance
// that a vertex after the first starts a new component. Vertex ids are
// shuffled so that parents need not precede children. InvalidParams if
// n < 1 or the bias is out of range.
RootedDirectedForest random_directed_forest(std::size_t n, std::uint64_t seed, double component_bias);
UndirectedForest random_undirected_forest(std::size_t n, std::uint64_t seed, double component_bias);
AnyForest gen_random(ForestKind kind, std::size_t n, std::uint64_t seed, double component_bias);

}  // namespace bkpvc

#endif
