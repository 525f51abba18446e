#pragma once

#include <packlab/graph.hpp>

#include <vector>

namespace packlab {

// Standard graph families. Vertices are labelled class by class in the order
// the classes are listed, so outputs are reproducible.

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

/// K_{1,leaves}; the centre is vertex 0.
Graph star_graph(int leaves);

/// Complete multipartite graph with the given class sizes (zeros allowed).
Graph complete_multipartite(const std::vector<int> & class_sizes);

/// Sizes of the near-equal split of m into min(m, s) nonempty classes,
/// larger classes first.
std::vector<int> balanced_parts(int m, int s);

/// T(m, s): complete multipartite on m vertices with s near-equal classes.
/// When m <= s every class is a singleton and the result is K_m.
Graph turan_graph(int m, int s);

/// Complement of T(m, s): disjoint near-equal cliques.
Graph turan_complement(int m, int s);

/// Complete r-partite graph with r-2 classes of size n/r followed by one class
/// of size n/r-1 and one of size n/r+1. Rejects r < 2 or r not dividing n.
Graph t_star(int n, int r);

} // namespace packlab
