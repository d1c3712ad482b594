#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

#include "slq/graph.hpp"

namespace slq {

struct Graph6Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// graph6 encoding: order byte 63+n for n <= 62, '~' plus three sextets for
/// larger n, then the upper triangle column-major, packed into 6-bit groups
/// offset by 63.
template <std::size_t W = 1>
std::string write_graph6(const BasicGraph<W>& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

template <std::size_t W = 1>
BasicGraph<W> read_graph6(const std::string& s) {
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= s.size()) throw Graph6Error("graph6: truncated input");
        unsigned char c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126) throw Graph6Error("graph6: character out of range");
        return c - 63;
    };
    long n;
    int first = next();
    if (first < 63) {
        n = first;
    } else {
        long a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
    }
    if (n > BasicGraph<W>::max_vertices)
        throw Graph6Error("graph6: order exceeds profile (" + std::to_string(n) + ")");
    BasicGraph<W> g(static_cast<int>(n));
    long bits = n * (n - 1) / 2;
    long groups = (bits + 5) / 6;
    long bit = 0;
    int col = 1, row = 0;
    for (long gi = 0; gi < groups; ++gi) {
        int v = next();
        for (int k = 5; k >= 0; --k, ++bit) {
            int b = (v >> k) & 1;
            if (bit < bits) {
                if (b) g.add_edge(row, col);
                if (++row == col) {
                    ++col;
                    row = 0;
                }
            } else if (b) {
                throw Graph6Error("graph6: nonzero padding bits");
            }
        }
    }
    if (pos != s.size()) throw Graph6Error("graph6: trailing characters");
    return g;
}

/// Plain edge-list text: "n m" on the first line, then one "u v" pair per
/// line with 0-based indices.
template <std::size_t W = 1>
std::string write_edge_list(const BasicGraph<W>& g) {
    std::ostringstream os;
    os << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

template <std::size_t W = 1>
BasicGraph<W> read_edge_list(const std::string& text) {
    std::istringstream is(text);
    long long n, m;
    if (!(is >> n >> m)) throw std::runtime_error("edge list: bad header");
    if (n < 0 || n > BasicGraph<W>::max_vertices) throw std::runtime_error("edge list: order out of profile");
    BasicGraph<W> g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        int u, v;
        if (!(is >> u >> v)) throw std::runtime_error("edge list: truncated");
        g.add_edge(u, v);
    }
    return g;
}

} // namespace slq
