#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "slq/graph.hpp"

namespace slq {

/// A graph together with a vertex partition (Turán parts, blowup classes).
template <std::size_t W = 1>
struct BasicPartitionedGraph {
    BasicGraph<W> graph;
    std::vector<std::vector<int>> parts;
};

using PartitionedGraph = BasicPartitionedGraph<1>;

/// Part sizes of T_{n,k}: the first n mod k parts get the extra vertex.
inline std::vector<int> turan_part_sizes(int n, int k) {
    if (k < 1) throw std::invalid_argument("turan: k >= 1 required");
    if (n < 0) throw std::invalid_argument("turan: n >= 0 required");
    std::vector<int> sizes(static_cast<std::size_t>(k), n / k);
    for (int i = 0; i < n % k; ++i) sizes[static_cast<std::size_t>(i)]++;
    return sizes;
}

/// Complete multipartite graph with the given part sizes, parts assigned by
/// ascending vertex index.
template <std::size_t W = 1>
BasicPartitionedGraph<W> complete_multipartite(const std::vector<int>& sizes) {
    int n = 0;
    for (int s : sizes) {
        if (s < 0) throw std::invalid_argument("negative part size");
        n += s;
    }
    BasicPartitionedGraph<W> out;
    out.graph = BasicGraph<W>(n);
    int next = 0;
    for (int s : sizes) {
        std::vector<int> part;
        part.reserve(static_cast<std::size_t>(s));
        for (int i = 0; i < s; ++i) part.push_back(next++);
        out.parts.push_back(std::move(part));
    }
    for (std::size_t a = 0; a < out.parts.size(); ++a)
        for (std::size_t b = a + 1; b < out.parts.size(); ++b)
            for (int u : out.parts[a])
                for (int v : out.parts[b]) out.graph.add_edge(u, v);
    return out;
}

/// Turán graph T_{n,k}.
template <std::size_t W = 1>
BasicPartitionedGraph<W> turan(int n, int k) {
    return complete_multipartite<W>(turan_part_sizes(n, k));
}

/// t-blowup H[t]: vertex i of H becomes the class [i*t, (i+1)*t).
template <std::size_t W = 1>
BasicPartitionedGraph<W> blowup(const BasicGraph<W>& h, int t) {
    if (t < 1) throw std::invalid_argument("blowup: t >= 1 required");
    int n = h.order() * t;
    BasicPartitionedGraph<W> out;
    out.graph = BasicGraph<W>(n);
    out.parts.resize(static_cast<std::size_t>(h.order()));
    for (int i = 0; i < h.order(); ++i)
        for (int c = 0; c < t; ++c) out.parts[static_cast<std::size_t>(i)].push_back(i * t + c);
    for (auto [u, v] : h.edges())
        for (int a = 0; a < t; ++a)
            for (int b = 0; b < t; ++b) out.graph.add_edge(u * t + a, v * t + b);
    return out;
}

/// Join: disjoint union of g1 and g2 plus all cross edges; g2 is shifted
/// above g1's vertices.
template <std::size_t W = 1>
BasicGraph<W> join(const BasicGraph<W>& g1, const BasicGraph<W>& g2) {
    int n1 = g1.order(), n2 = g2.order();
    BasicGraph<W> g(n1 + n2);
    for (auto [u, v] : g1.edges()) g.add_edge(u, v);
    for (auto [u, v] : g2.edges()) g.add_edge(n1 + u, n1 + v);
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v) g.add_edge(u, n1 + v);
    return g;
}

template <std::size_t W = 1>
BasicGraph<W> complete_graph(int n) {
    BasicGraph<W> g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

template <std::size_t W = 1>
BasicGraph<W> empty_graph(int n) {
    return BasicGraph<W>(n);
}

template <std::size_t W = 1>
BasicGraph<W> path_graph(int n) {
    BasicGraph<W> g(n);
    for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
    return g;
}

template <std::size_t W = 1>
BasicGraph<W> cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n >= 3 required");
    auto g = path_graph<W>(n);
    g.add_edge(n - 1, 0);
    return g;
}

/// K_k[t] plus one edge inside the first class (between its two lowest
/// vertices). Requires t >= 2; K_k^+[1] is left undefined.
template <std::size_t W = 1>
BasicGraph<W> kk_plus_blowup(int k, int t) {
    if (k < 1 || t < 2) throw std::invalid_argument("kk_plus_blowup: k >= 1 and t >= 2 required");
    auto g = blowup<W>(complete_graph<W>(k), t).graph;
    g.add_edge(0, 1);
    return g;
}

/// Split graph S_{n,k}: K_k joined to an independent set of n-k vertices.
template <std::size_t W = 1>
BasicGraph<W> split_graph(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("split_graph: 1 <= k <= n required");
    return join(complete_graph<W>(k), empty_graph<W>(n - k));
}

/// Generalized book B_{k,t} = K_k v I_t.
template <std::size_t W = 1>
BasicGraph<W> generalized_book(int k, int t) {
    if (k < 1 || t < 0) throw std::invalid_argument("generalized_book: k >= 1, t >= 0 required");
    return join(complete_graph<W>(k), empty_graph<W>(t));
}

/// T_{n,k} plus the edge between the two lowest-index vertices of part 1.
template <std::size_t W = 1>
BasicGraph<W> turan_plus_edge(int n, int k) {
    auto t = turan<W>(n, k);
    if (t.parts.empty() || t.parts[0].size() < 2)
        throw std::invalid_argument("turan_plus_edge: part 1 must have >= 2 vertices");
    auto g = t.graph;
    g.add_edge(t.parts[0][0], t.parts[0][1]);
    return g;
}

/// K_{s,n-s} plus one edge inside the larger side (the second side on ties).
template <std::size_t W = 1>
BasicGraph<W> complete_bipartite_plus_edge(int n, int s) {
    if (s < 0 || s > n) throw std::invalid_argument("complete_bipartite_plus_edge: 0 <= s <= n");
    auto g = complete_multipartite<W>({s, n - s}).graph;
    if (n - s >= s) {
        if (n - s < 2) throw std::invalid_argument("complete_bipartite_plus_edge: side too small");
        g.add_edge(s, s + 1);
    } else {
        if (s < 2) throw std::invalid_argument("complete_bipartite_plus_edge: side too small");
        g.add_edge(0, 1);
    }
    return g;
}

/// Parse a family descriptor such as "turan(7,3)", "kkplus(2,2)",
/// "split(5,1)", "book(2,4)", "turan+e(12,3)", "kbip+e(8,4)", "complete(5)",
/// "path(4)", "cycle(5)", "empty(3)".
template <std::size_t W = 1>
BasicGraph<W> named_family(const std::string& spec) {
    auto open = spec.find('(');
    if (open == std::string::npos || spec.back() != ')')
        throw std::invalid_argument("family descriptor must look like name(a,b)");
    std::string name = spec.substr(0, open);
    std::string argstr = spec.substr(open + 1, spec.size() - open - 2);
    std::vector<long> args;
    std::size_t pos = 0;
    while (pos < argstr.size()) {
        auto comma = argstr.find(',', pos);
        std::string tok = argstr.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        args.push_back(std::stol(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    auto need = [&](std::size_t c) {
        if (args.size() != c) throw std::invalid_argument("family " + name + ": wrong argument count");
    };
    if (name == "turan") { need(2); return turan<W>(static_cast<int>(args[0]), static_cast<int>(args[1])).graph; }
    if (name == "kkplus") { need(2); return kk_plus_blowup<W>(static_cast<int>(args[0]), static_cast<int>(args[1])); }
    if (name == "split") { need(2); return split_graph<W>(static_cast<int>(args[0]), static_cast<int>(args[1])); }
    if (name == "book") { need(2); return generalized_book<W>(static_cast<int>(args[0]), static_cast<int>(args[1])); }
    if (name == "turan+e") { need(2); return turan_plus_edge<W>(static_cast<int>(args[0]), static_cast<int>(args[1])); }
    if (name == "kbip+e") { need(2); return complete_bipartite_plus_edge<W>(static_cast<int>(args[0]), static_cast<int>(args[1])); }
    if (name == "complete") { need(1); return complete_graph<W>(static_cast<int>(args[0])); }
    if (name == "empty") { need(1); return empty_graph<W>(static_cast<int>(args[0])); }
    if (name == "path") { need(1); return path_graph<W>(static_cast<int>(args[0])); }
    if (name == "cycle") { need(1); return cycle_graph<W>(static_cast<int>(args[0])); }
    throw std::invalid_argument("unknown family: " + name);
}

} // namespace slq
