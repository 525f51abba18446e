#pragma once

#include <packlab/graph.hpp>

#include <optional>
#include <string>
#include <vector>

namespace packlab {

/// Vertex-disjoint r-cliques covering every vertex.
struct PackingCertificate {
    std::vector<VertexSet> blocks;
};

/// Independent classes covering every vertex, sizes differing by at most one.
struct ColouringCertificate {
    std::vector<VertexSet> classes;
};

/// A vertex order visiting every vertex once along edges of the graph.
struct HamiltonPath {
    std::vector<int> order;
};

// Validators are written against the certificate definitions only and share
// no code with the solvers that produce certificates. Each returns a
// description of the first defect found, or nullopt when the certificate holds.

std::optional<std::string> packing_defect(const Graph & g, const PackingCertificate & cert, int r);
std::optional<std::string> colouring_defect(const Graph & g, const ColouringCertificate & cert, int k);
std::optional<std::string> hamilton_path_defect(const Graph & g, const HamiltonPath & path);

/// Defect if the parts are not pairwise disjoint or do not cover V(G).
std::optional<std::string> partition_defect(const Graph & g, const std::vector<VertexSet> & parts);

} // namespace packlab
