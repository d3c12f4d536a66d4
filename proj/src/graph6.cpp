#include "graph6.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace hcdc {

namespace {

constexpr int g6_bias = 63;
constexpr const char* g6_header = ">>graph6<<";

[[noreturn]] void malformed(std::size_t offset, const std::string& why) {
    throw error(errc::malformed_graph6, why + " at byte " + std::to_string(offset));
}

int g6_byte(const std::string& s, std::size_t i) {
    if (i >= s.size())
        malformed(s.size(), "unexpected end of input");
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126)
        malformed(i, "byte outside printable graph6 range");
    return c - g6_bias;
}

} // namespace

Graph parse_graph6(const std::string& raw) {
    std::string line = raw;
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.pop_back();
    std::size_t off = 0;
    if (line.rfind(g6_header, 0) == 0)
        off = std::string(g6_header).size();
    if (off >= line.size())
        malformed(off, "empty graph6 line");

    long long n = 0;
    int b0 = g6_byte(line, off);
    if (b0 < 63) {
        n = b0;
        off += 1;
    } else {
        // 126 escape: 3-byte (18-bit) size, or 126 126 + 6-byte (36-bit).
        if (off + 1 < line.size() && static_cast<unsigned char>(line[off + 1]) == 126) {
            off += 2;
            for (int i = 0; i < 6; ++i)
                n = (n << 6) | g6_byte(line, off + i);
            off += 6;
        } else {
            off += 1;
            for (int i = 0; i < 3; ++i)
                n = (n << 6) | g6_byte(line, off + i);
            off += 3;
        }
    }
    if (n < 1)
        malformed(0, "graph6 order " + std::to_string(n) + " not supported");
    if (n > 100000)
        throw error(errc::too_large, "graph6 order " + std::to_string(n));

    const long long nbits = n * (n - 1) / 2;
    const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (line.size() - off != nbytes)
        malformed(line.size(),
                  "matrix payload has " + std::to_string(line.size() - off) + " bytes, expected " +
                      std::to_string(nbytes));

    std::vector<Edge> edges;
    long long bit = 0;
    int cur = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int sh = static_cast<int>(5 - bit % 6);
            if (bit % 6 == 0)
                cur = g6_byte(line, off + static_cast<std::size_t>(bit / 6));
            if ((cur >> sh) & 1)
                edges.push_back({u, v});
        }
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string encode_graph6(const Graph& g) {
    const long long n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + g6_bias));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + g6_bias));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + g6_bias));
        out.push_back(static_cast<char>((n & 0x3f) + g6_bias));
    } else {
        throw error(errc::too_large, "graph6 order " + std::to_string(n));
    }

    const long long nbits = n * (n - 1) / 2;
    long long bit = 0;
    int acc = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (bit % 6 == 5) {
                out.push_back(static_cast<char>(acc + g6_bias));
                acc = 0;
            }
        }
    }
    if (nbits % 6 != 0) {
        acc <<= 6 - nbits % 6;
        out.push_back(static_cast<char>(acc + g6_bias));
    }
    return out;
}

Graph parse_edge_list(std::istream& in) {
    auto next_token_line = [&in](std::string& line) -> bool {
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos)
                line.erase(hash);
            bool blank = true;
            for (char c : line)
                if (!std::isspace(static_cast<unsigned char>(c)))
                    blank = false;
            if (!blank)
                return true;
        }
        return false;
    };

    std::string line;
    if (!next_token_line(line))
        throw error(errc::io_error, "empty edge-list input");
    std::istringstream hdr(line);
    int n = 0;
    long long m = 0;
    if (!(hdr >> n >> m))
        throw error(errc::io_error, "bad edge-list header line: '" + line + "'");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_token_line(line))
            throw error(errc::io_error,
                        "expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        std::istringstream es(line);
        int u, v;
        if (!(es >> u >> v))
            throw error(errc::io_error, "bad edge line: '" + line + "'");
        edges.push_back(u < v ? Edge{u, v} : Edge{v, u});
    }
    return Graph::from_edge_list(n, edges);
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n() << " " << g.m() << "\n";
    for (const Edge& e : g.edges())
        out << e.u << " " << e.v << "\n";
    return out.str();
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
            line.pop_back();
        if (line.empty() || line == g6_header)
            continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

std::vector<Graph> read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw error(errc::io_error, "cannot open '" + path + "'");
    // Sniff: an edge-list file starts (after comments) with two decimal
    // numbers; anything else is treated as graph6 lines.
    std::string first;
    std::streampos pos = in.tellg();
    bool edge_list = false;
    while (std::getline(in, first)) {
        auto hash = first.find('#');
        if (hash != std::string::npos)
            first.erase(hash);
        std::istringstream probe(first);
        int a;
        long long b;
        std::string rest;
        if (probe >> a >> b && !(probe >> rest)) {
            edge_list = true;
            break;
        }
        bool blank = first.find_first_not_of(" \t\r") == std::string::npos;
        if (!blank)
            break;
    }
    in.clear();
    in.seekg(pos);
    if (edge_list)
        return {parse_edge_list(in)};
    return read_graph6_stream(in);
}

} // namespace hcdc
