#include "qwalk/graph_io.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

namespace qwalk {

namespace {

using Code = ParseError::Code;

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
}

std::string format_weight(double w) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), w);
    return std::string(buf, p);
}

Graph parse_edgelist(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string_view>> lines;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++lineno;
        std::string_view line = text.substr(pos, end - pos);
        if (!split_ws(line).empty()) lines.emplace_back(lineno, line);
        pos = end + 1;
    }
    if (lines.empty()) throw ParseError(Code::malformed_header, 1, "empty input");

    auto header = split_ws(lines[0].second);
    std::size_t n = 0, m = 0;
    if (header.size() != 2 || !parse_number(header[0], n) || !parse_number(header[1], m) || n == 0)
        throw ParseError(Code::malformed_header, lines[0].first, "expected header \"n m\" with n >= 1");

    Graph g(n);
    std::map<std::pair<std::size_t, std::size_t>, double> seen;
    std::vector<char> looped(n, 0);
    std::size_t edges = 0;

    auto vertex = [&](std::string_view tok, std::size_t ln) {
        std::size_t v = 0;
        if (!parse_number(tok, v)) throw ParseError(Code::malformed_line, ln, "bad vertex index '" + std::string(tok) + "'");
        if (v >= n) throw ParseError(Code::index_out_of_range, ln, "vertex " + std::string(tok) + " out of range");
        return v;
    };
    auto weight = [&](std::string_view tok, std::size_t ln) {
        double w = 0.0;
        if (!parse_number(tok, w) || !std::isfinite(w))
            throw ParseError(Code::malformed_line, ln, "bad weight '" + std::string(tok) + "'");
        return w;
    };

    for (std::size_t k = 1; k < lines.size(); ++k) {
        auto [ln, line] = lines[k];
        auto tok = split_ws(line);
        if (tok[0] == "loop") {
            if (tok.size() != 3) throw ParseError(Code::malformed_line, ln, "expected \"loop u w\"");
            std::size_t u = vertex(tok[1], ln);
            double w = weight(tok[2], ln);
            if (looped[u]) throw ParseError(Code::duplicate_edge, ln, "loop at vertex " + std::to_string(u) + " repeated");
            looped[u] = 1;
            g.set_loop(u, w);
            continue;
        }
        if (edges == m) throw ParseError(Code::edge_count_mismatch, ln, "more edge lines than declared");
        if (tok.size() != 2 && tok.size() != 3) throw ParseError(Code::malformed_line, ln, "expected \"u v\" or \"u v w\"");
        std::size_t u = vertex(tok[0], ln);
        std::size_t v = vertex(tok[1], ln);
        if (u == v) throw ParseError(Code::malformed_line, ln, "self edge; use a loop line");
        double w = tok.size() == 3 ? weight(tok[2], ln) : 1.0;
        if (w == 0.0) throw ParseError(Code::malformed_line, ln, "zero edge weight");
        if (auto it = seen.find({v, u}); it != seen.end()) {
            if (it->second != w)
                throw ParseError(Code::asymmetric_weight, ln,
                                 "edge " + std::to_string(u) + "-" + std::to_string(v) + " weight differs from reverse line");
            throw ParseError(Code::duplicate_edge, ln, "edge repeated");
        }
        if (seen.count({u, v})) throw ParseError(Code::duplicate_edge, ln, "edge repeated");
        seen[{u, v}] = w;
        g.set_edge(u, v, w);
        ++edges;
    }
    if (edges != m)
        throw ParseError(Code::edge_count_mismatch, lines.back().first,
                         "declared " + std::to_string(m) + " edges, found " + std::to_string(edges));
    return g;
}

Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.substr(0, 10) == ">>graph6<<") text.remove_prefix(10);
    for (char c : text)
        if (c < 63 || c > 126) throw ParseError(Code::invalid_graph6, 1, "character outside graph6 range");
    if (text.empty()) throw ParseError(Code::invalid_graph6, 1, "empty graph6 string");

    auto sixbits = [&](std::size_t i) { return static_cast<unsigned>(text[i] - 63); };
    std::size_t n = 0;
    std::size_t pos = 0;
    if (text[0] != 126) {
        n = sixbits(0);
        pos = 1;
    } else if (text.size() >= 2 && text[1] != 126) {
        if (text.size() < 4) throw ParseError(Code::invalid_graph6, 1, "truncated size field");
        n = (sixbits(1) << 12) | (sixbits(2) << 6) | sixbits(3);
        pos = 4;
    } else {
        if (text.size() < 8) throw ParseError(Code::invalid_graph6, 1, "truncated size field");
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sixbits(i);
        pos = 8;
    }
    if (n == 0) throw ParseError(Code::invalid_graph6, 1, "graph6 graph has no vertices");

    const std::size_t bits = n * (n - 1) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes)
        throw ParseError(Code::invalid_graph6, 1, "expected " + std::to_string(bytes) + " data bytes");

    Graph g(n);
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++k) {
            unsigned byte = sixbits(pos + k / 6);
            if ((byte >> (5 - k % 6)) & 1u) g.set_edge(i, j);
        }
    for (; k < bytes * 6; ++k)
        if ((sixbits(pos + k / 6) >> (5 - k % 6)) & 1u) throw ParseError(Code::invalid_graph6, 1, "nonzero padding bits");
    return g;
}

std::string serialize_edgelist(const Graph& g) {
    std::ostringstream os;
    const std::size_t n = g.size();
    os << n << ' ' << g.edge_count() << '\n';
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double w = g.weight(i, j);
            if (w == 0.0) continue;
            os << i << ' ' << j;
            if (w != 1.0) os << ' ' << format_weight(w);
            os << '\n';
        }
    for (std::size_t i = 0; i < n; ++i)
        if (g.loop(i) != 0.0) os << "loop " << i << ' ' << format_weight(g.loop(i)) << '\n';
    return os.str();
}

std::string serialize_graph6(const Graph& g) {
    if (!g.is_simple()) throw ParseError(Code::unsupported_graph, 1, "graph6 only encodes simple unweighted graphs");
    const std::size_t n = g.size();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
    } else {
        out.append(2, static_cast<char>(126));
        for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
    }
    unsigned acc = 0;
    int filled = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

}  // namespace

std::string_view to_string(ParseError::Code code) {
    switch (code) {
        case Code::malformed_header: return "malformed_header";
        case Code::malformed_line: return "malformed_line";
        case Code::index_out_of_range: return "index_out_of_range";
        case Code::asymmetric_weight: return "asymmetric_weight";
        case Code::duplicate_edge: return "duplicate_edge";
        case Code::edge_count_mismatch: return "edge_count_mismatch";
        case Code::invalid_graph6: return "invalid_graph6";
        case Code::unsupported_graph: return "unsupported_graph";
    }
    return "unknown";
}

Graph parse_graph(std::string_view text, GraphFormat format) {
    return format == GraphFormat::edgelist ? parse_edgelist(text) : parse_graph6(text);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    return format == GraphFormat::edgelist ? serialize_edgelist(g) : serialize_graph6(g);
}

GraphFormat detect_format(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        auto tok = split_ws(text.substr(pos, end - pos));
        if (!tok.empty()) {
            std::size_t x = 0;
            bool two_ints = tok.size() == 2 && parse_number(tok[0], x) && parse_number(tok[1], x);
            return two_ints ? GraphFormat::edgelist : GraphFormat::graph6;
        }
        pos = end + 1;
    }
    return GraphFormat::edgelist;
}

GraphFormat parse_format_name(std::string_view name) {
    if (name == "edgelist") return GraphFormat::edgelist;
    if (name == "graph6") return GraphFormat::graph6;
    throw std::invalid_argument("unknown graph format '" + std::string(name) + "'");
}

}  // namespace qwalk
