#include <packlab/errors.hpp>
#include <packlab/graph_io.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>

namespace packlab {

namespace {

constexpr char graph6_offset = 63;
constexpr char graph6_max = 126;
constexpr std::string_view graph6_header = ">>graph6<<";

void put_order(std::string & out, std::int64_t n)
{
    if (n <= 62) {
        out.push_back(static_cast<char>(n + graph6_offset));
    }
    else if (n <= 258047) {
        out.push_back(graph6_max);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + graph6_offset));
    }
    else {
        out.push_back(graph6_max);
        out.push_back(graph6_max);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + graph6_offset));
    }
}

int sextet(char c)
{
    if (c < graph6_offset || c > graph6_max)
        throw ParseError("graph6: character code " + std::to_string(static_cast<int>(static_cast<unsigned char>(c)))
            + " outside 63..126");
    return c - graph6_offset;
}

std::string_view trim(std::string_view s)
{
    while (! s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n'))
        s.remove_prefix(1);
    while (! s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
        s.remove_suffix(1);
    return s;
}

long long parse_int(std::string_view token, const char * what)
{
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(std::string("edge list: bad ") + what + " '" + std::string(token) + "'");
    return value;
}

} // namespace

std::string encode_graph6(const Graph & g)
{
    std::string out;
    const std::int64_t n = g.order();
    put_order(out, n);

    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + graph6_offset));
                acc = filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + graph6_offset));
    return out;
}

Graph decode_graph6(std::string_view text)
{
    if (text.starts_with(graph6_header))
        text.remove_prefix(graph6_header.size());
    if (text.ends_with('\n'))
        text.remove_suffix(1);
    if (text.ends_with('\r'))
        text.remove_suffix(1);
    if (text.empty())
        throw ParseError("graph6: empty input");

    std::size_t pos = 0;
    std::int64_t n = 0;
    auto take = [&](int count) {
        if (pos + static_cast<std::size_t>(count) > text.size())
            throw ParseError("graph6: truncated order field");
        for (int k = 0; k < count; ++k)
            n = (n << 6) | sextet(text[pos++]);
    };
    if (text[0] != graph6_max) {
        take(1);
    }
    else if (text.size() > 1 && text[1] == graph6_max) {
        pos = 2;
        take(6);
    }
    else {
        pos = 1;
        take(3);
    }
    if (n > max_graph_order)
        throw CapExceeded("graph6: order " + std::to_string(n) + " exceeds cap " + std::to_string(max_graph_order));

    const std::int64_t bits = n * (n - 1) / 2;
    const std::size_t expected = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() - pos != expected)
        throw ParseError("graph6: expected " + std::to_string(expected) + " edge bytes for order " + std::to_string(n)
            + ", got " + std::to_string(text.size() - pos));

    Graph g(static_cast<int>(n));
    std::int64_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int byte = sextet(text[pos + static_cast<std::size_t>(k / 6)]);
            if ((byte >> (5 - k % 6)) & 1)
                g.add_edge(i, j);
        }
    if (bits % 6 != 0) {
        int last = sextet(text.back());
        if (last & ((1 << (6 - bits % 6)) - 1))
            throw ParseError("graph6: nonzero padding bits");
    }
    return g;
}

std::string encode_edge_list(const Graph & g)
{
    std::ostringstream out;
    out << "n=" << g.order() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

Graph decode_edge_list(std::string_view text)
{
    std::optional<Graph> g;
    std::size_t line_no = 0;
    while (! text.empty()) {
        auto eol = text.find('\n');
        auto line = trim(text.substr(0, eol));
        text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
        ++line_no;
        if (line.empty() || line.front() == '#')
            continue;

        if (! g) {
            if (! line.starts_with("n="))
                throw ParseError("edge list: expected 'n=<N>' header on line " + std::to_string(line_no));
            long long n = parse_int(trim(line.substr(2)), "vertex count");
            if (n < 0)
                throw ParseError("edge list: negative vertex count");
            g.emplace(static_cast<int>(std::min<long long>(n, max_graph_order + 1LL)));
            continue;
        }

        auto space = line.find_first_of(" \t");
        if (space == std::string_view::npos)
            throw ParseError("edge list: expected 'u v' on line " + std::to_string(line_no));
        long long u = parse_int(trim(line.substr(0, space)), "vertex");
        long long v = parse_int(trim(line.substr(space + 1)), "vertex");
        if (u < 0 || v < 0 || u >= g->order() || v >= g->order() || u == v)
            throw ParseError("edge list: invalid edge on line " + std::to_string(line_no));
        g->add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (! g)
        throw ParseError("edge list: missing 'n=<N>' header");
    return std::move(*g);
}

Graph decode_graph(std::string_view text, GraphFormat format)
{
    if (format == GraphFormat::automatic) {
        auto body = trim(text);
        while (body.starts_with('#')) {
            auto eol = body.find('\n');
            body = eol == std::string_view::npos ? std::string_view{} : trim(body.substr(eol + 1));
        }
        format = body.starts_with("n=") ? GraphFormat::edge_list : GraphFormat::graph6;
    }
    if (format == GraphFormat::edge_list)
        return decode_edge_list(text);
    return decode_graph6(trim(text));
}

} // namespace packlab
