#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "slq/bits.hpp"

namespace slq {

/// Simple undirected graph over vertices 0..n-1 with bit-vector adjacency
/// rows. The default single-word profile handles n <= 64; wider profiles are
/// selected at compile time through the Words parameter.
template <std::size_t Words = 1>
class BasicGraph {
public:
    using Row = BitRow<Words>;
    static constexpr int max_vertices = Row::capacity;

    BasicGraph() = default;

    explicit BasicGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
        if (n < 0 || n > max_vertices)
            throw std::invalid_argument("graph order out of profile: " + std::to_string(n));
    }

    int order() const { return n_; }

    int degree(int v) const { return adj_[static_cast<std::size_t>(v)].count(); }

    long long edge_count() const {
        long long total = 0;
        for (const auto& row : adj_) total += row.count();
        return total / 2;
    }

    int min_degree() const {
        int d = n_ == 0 ? 0 : max_vertices;
        for (int v = 0; v < n_; ++v) d = d < degree(v) ? d : degree(v);
        return n_ == 0 ? 0 : d;
    }
    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = d > degree(v) ? d : degree(v);
        return d;
    }

    bool has_edge(int u, int v) const { return adj_[static_cast<std::size_t>(u)].test(v); }

    void add_edge(int u, int v) {
        check_pair(u, v);
        adj_[static_cast<std::size_t>(u)].set(v);
        adj_[static_cast<std::size_t>(v)].set(u);
    }
    void remove_edge(int u, int v) {
        check_pair(u, v);
        adj_[static_cast<std::size_t>(u)].reset(v);
        adj_[static_cast<std::size_t>(v)].reset(u);
    }

    const Row& row(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    /// Mask with bits 0..n-1 set.
    Row vertex_mask() const { return Row::below(n_); }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(edge_count()));
        for (int u = 0; u < n_; ++u)
            adj_[static_cast<std::size_t>(u)].for_each([&](int v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

    /// Symmetric rows and a zero diagonal; constructors maintain this, the
    /// check exists for data read from external sources.
    bool consistent() const {
        for (int u = 0; u < n_; ++u) {
            if (adj_[static_cast<std::size_t>(u)].test(u)) return false;
            if (adj_[static_cast<std::size_t>(u)].andnot(vertex_mask()).any()) return false;
            for (int v = u + 1; v < n_; ++v)
                if (has_edge(u, v) != has_edge(v, u)) return false;
        }
        return true;
    }

    /// G - v: indices above v shift down by one.
    BasicGraph deleted(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("delete_vertex: vertex out of range");
        BasicGraph g(n_ - 1);
        for (int u = 0; u < n_; ++u) {
            if (u == v) continue;
            int uu = u < v ? u : u - 1;
            adj_[static_cast<std::size_t>(u)].for_each([&](int w) {
                if (w == v || w <= u) return;
                int ww = w < v ? w : w - 1;
                g.add_edge(uu, ww);
            });
        }
        return g;
    }

    /// Connected component masks in ascending order of their lowest vertex.
    std::vector<Row> components() const {
        std::vector<Row> comps;
        Row seen{};
        for (int v = 0; v < n_; ++v) {
            if (seen.test(v)) continue;
            Row comp = Row::single(v);
            Row frontier = comp;
            while (frontier.any()) {
                Row next{};
                frontier.for_each([&](int u) { next |= adj_[static_cast<std::size_t>(u)]; });
                frontier = next.andnot(comp);
                comp |= frontier;
            }
            seen |= comp;
            comps.push_back(comp);
        }
        return comps;
    }

    /// Induced subgraph on the masked vertices plus the map from new indices
    /// back to the originals (ascending).
    std::pair<BasicGraph, std::vector<int>> induced(const Row& mask) const {
        std::vector<int> verts;
        mask.for_each([&](int v) {
            if (v < n_) verts.push_back(v);
        });
        BasicGraph g(static_cast<int>(verts.size()));
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j)
                if (has_edge(verts[i], verts[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
        return {std::move(g), std::move(verts)};
    }

    bool operator==(const BasicGraph&) const = default;

private:
    void check_pair(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
            throw std::invalid_argument("bad vertex pair");
    }

    int n_ = 0;
    std::vector<Row> adj_;
};

using Graph = BasicGraph<1>;

template <std::size_t W>
BasicGraph<W> delete_vertex(const BasicGraph<W>& g, int v) {
    return g.deleted(v);
}

/// Degree square sum (the first Zagreb index).
template <std::size_t W>
long long degree_square_sum(const BasicGraph<W>& g) {
    long long s = 0;
    for (int v = 0; v < g.order(); ++v) {
        long long d = g.degree(v);
        s += d * d;
    }
    return s;
}

} // namespace slq
