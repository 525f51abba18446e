#include <packlab/errors.hpp>
#include <packlab/families.hpp>

#include <algorithm>
#include <string>

namespace packlab {

Graph complete_graph(int n)
{
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

Graph empty_graph(int n)
{
    return Graph(n);
}

Graph path_graph(int n)
{
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n)
{
    if (n < 3)
        throw RangeError("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph star_graph(int leaves)
{
    if (leaves < 0)
        throw RangeError("star needs a nonnegative leaf count");
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v)
        g.add_edge(0, v);
    return g;
}

Graph complete_multipartite(const std::vector<int> & class_sizes)
{
    std::vector<int> label;
    for (std::size_t c = 0; c < class_sizes.size(); ++c) {
        if (class_sizes[c] < 0)
            throw RangeError("negative class size");
        label.insert(label.end(), static_cast<std::size_t>(class_sizes[c]), static_cast<int>(c));
    }
    Graph g(static_cast<int>(label.size()));
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (label[static_cast<std::size_t>(u)] != label[static_cast<std::size_t>(v)])
                g.add_edge(u, v);
    return g;
}

std::vector<int> balanced_parts(int m, int s)
{
    if (m < 0 || s < 1)
        throw RangeError("balanced_parts needs m >= 0 and s >= 1");
    int parts = std::min(m, s);
    std::vector<int> sizes;
    if (parts == 0)
        return sizes;
    int q = m / parts, extra = m % parts;
    for (int i = 0; i < parts; ++i)
        sizes.push_back(q + (i < extra ? 1 : 0));
    return sizes;
}

Graph turan_graph(int m, int s)
{
    if (m < 0 || s < 1)
        throw RangeError("turan_graph needs m >= 0 and s >= 1");
    return complete_multipartite(balanced_parts(m, s));
}

Graph turan_complement(int m, int s)
{
    if (m < 0 || s < 1)
        throw RangeError("turan_complement needs m >= 0 and s >= 1");
    Graph g(m);
    int start = 0;
    for (int size : balanced_parts(m, s)) {
        for (int u = start; u < start + size; ++u)
            for (int v = u + 1; v < start + size; ++v)
                g.add_edge(u, v);
        start += size;
    }
    return g;
}

Graph t_star(int n, int r)
{
    if (r < 2)
        throw RangeError("t_star needs r >= 2, got " + std::to_string(r));
    if (n <= 0 || n % r != 0)
        throw RangeError("t_star needs r | n with n/r >= 1, got n=" + std::to_string(n) + " r=" + std::to_string(r));
    int part = n / r;
    std::vector<int> sizes(static_cast<std::size_t>(r - 2), part);
    sizes.push_back(part - 1);
    sizes.push_back(part + 1);
    return complete_multipartite(sizes);
}

} // namespace packlab
