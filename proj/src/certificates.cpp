#include <packlab/certificates.hpp>

#include <algorithm>

namespace packlab {

std::optional<std::string> partition_defect(const Graph & g, const std::vector<VertexSet> & parts)
{
    std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p].universe() != g.order())
            return "part " + std::to_string(p) + " has the wrong universe";
        for (int v : parts[p]) {
            if (owner[static_cast<std::size_t>(v)] != -1)
                return "vertex " + std::to_string(v) + " lies in parts " + std::to_string(owner[static_cast<std::size_t>(v)])
                    + " and " + std::to_string(p);
            owner[static_cast<std::size_t>(v)] = static_cast<int>(p);
        }
    }
    for (int v = 0; v < g.order(); ++v)
        if (owner[static_cast<std::size_t>(v)] == -1)
            return "vertex " + std::to_string(v) + " is uncovered";
    return std::nullopt;
}

std::optional<std::string> packing_defect(const Graph & g, const PackingCertificate & cert, int r)
{
    if (auto d = partition_defect(g, cert.blocks))
        return d;
    for (std::size_t b = 0; b < cert.blocks.size(); ++b) {
        const auto & block = cert.blocks[b];
        if (block.size() != r)
            return "block " + std::to_string(b) + " has " + std::to_string(block.size()) + " vertices, expected "
                + std::to_string(r);
        for (int u : block)
            for (int v : block)
                if (u < v && ! g.adjacent(u, v))
                    return "block " + std::to_string(b) + " misses edge " + std::to_string(u) + "-" + std::to_string(v);
    }
    return std::nullopt;
}

std::optional<std::string> colouring_defect(const Graph & g, const ColouringCertificate & cert, int k)
{
    if (static_cast<int>(cert.classes.size()) != k)
        return "expected " + std::to_string(k) + " classes, got " + std::to_string(cert.classes.size());
    if (auto d = partition_defect(g, cert.classes))
        return d;
    int smallest = g.order(), largest = 0;
    for (std::size_t c = 0; c < cert.classes.size(); ++c) {
        const auto & cls = cert.classes[c];
        smallest = std::min(smallest, cls.size());
        largest = std::max(largest, cls.size());
        for (int u : cls)
            for (int v : cls)
                if (u < v && g.adjacent(u, v))
                    return "class " + std::to_string(c) + " contains edge " + std::to_string(u) + "-" + std::to_string(v);
    }
    if (largest - smallest > 1)
        return "class sizes range from " + std::to_string(smallest) + " to " + std::to_string(largest);
    return std::nullopt;
}

std::optional<std::string> hamilton_path_defect(const Graph & g, const HamiltonPath & path)
{
    if (static_cast<int>(path.order.size()) != g.order())
        return "path has " + std::to_string(path.order.size()) + " vertices, graph has " + std::to_string(g.order());
    std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
    for (std::size_t i = 0; i < path.order.size(); ++i) {
        int v = path.order[i];
        if (v < 0 || v >= g.order() || seen[static_cast<std::size_t>(v)])
            return "vertex " + std::to_string(v) + " repeated or out of range";
        seen[static_cast<std::size_t>(v)] = true;
        if (i > 0 && ! g.adjacent(path.order[i - 1], v))
            return "consecutive vertices " + std::to_string(path.order[i - 1]) + "," + std::to_string(v) + " not adjacent";
    }
    return std::nullopt;
}

} // namespace packlab
