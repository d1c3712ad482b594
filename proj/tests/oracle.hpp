#pragma once

// Test-only oracles, kept independent of the library paths they check:
// dense Jacobi eigensolves on the full n x n matrices instead of power
// iteration, plain combination enumeration instead of pruned backtracking,
// and a straight-line re-implementation of the reduction loop.

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "slq/graph.hpp"
#include "slq/linalg.hpp"
#include "slq/subgraph.hpp"

namespace oracle {

using slq::BasicGraph;
using slq::Graph;

inline slq::SymMatrix q_matrix(const Graph& g) {
    slq::SymMatrix m(g.order());
    for (int u = 0; u < g.order(); ++u) {
        m.at(u, u) = g.degree(u);
        for (int v = 0; v < g.order(); ++v)
            if (g.has_edge(u, v)) m.at(u, v) += 1.0;
    }
    return m;
}

inline slq::SymMatrix a_matrix(const Graph& g) {
    slq::SymMatrix m(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v)
            if (g.has_edge(u, v)) m.at(u, v) = 1.0;
    return m;
}

inline std::vector<double> q_spectrum(const Graph& g) { return slq::jacobi_eigenvalues(q_matrix(g)); }

inline double q_value(const Graph& g) { return q_spectrum(g).back(); }

inline double lambda_value(const Graph& g) { return slq::jacobi_eigenvalues(a_matrix(g)).back(); }

/// Perron data mirroring the documented disconnected-graph convention:
/// per-component dense solve, winner by value with lowest-index tie-break,
/// vector zero off the winning component.
struct PerronData {
    double value = 0.0;
    std::vector<double> vec;
};

inline PerronData q_perron(const Graph& g) {
    PerronData out;
    out.vec.assign(static_cast<std::size_t>(g.order()), 0.0);
    bool have = false;
    for (const auto& mask : g.components()) {
        auto [comp, verts] = g.induced(mask);
        std::vector<std::vector<double>> vecs;
        auto eig = slq::jacobi_eigenvalues(q_matrix(comp), &vecs);
        double val = eig.back();
        if (have && val <= out.value) continue;
        have = true;
        out.value = val;
        std::fill(out.vec.begin(), out.vec.end(), 0.0);
        auto top = vecs.back();
        double norm = 0.0;
        for (double x : top) norm += x * x;
        norm = std::sqrt(norm);
        // Perron vector of a connected component: fix the sign to nonnegative
        double sign = 0.0;
        for (double x : top)
            if (std::abs(x) > 1e-9) {
                sign = x > 0 ? 1.0 : -1.0;
                break;
            }
        for (std::size_t i = 0; i < verts.size(); ++i)
            out.vec[static_cast<std::size_t>(verts[i])] = sign * top[i] / norm;
    }
    return out;
}

template <class F>
void combinations(int n, int r, F f) {
    std::vector<int> idx(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
    if (r > n) return;
    while (true) {
        f(idx);
        int i = r - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
        if (i < 0) break;
        idx[static_cast<std::size_t>(i)]++;
        for (int j = i + 1; j < r; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

inline long long count_cliques(const Graph& g, int r) {
    if (r == 1) return g.order();
    long long total = 0;
    combinations(g.order(), r, [&](const std::vector<int>& set) {
        for (std::size_t i = 0; i < set.size(); ++i)
            for (std::size_t j = i + 1; j < set.size(); ++j)
                if (!g.has_edge(set[i], set[j])) return;
        ++total;
    });
    return total;
}

/// K_parts[t] present as a subgraph? Plain enumeration of disjoint ordered
/// class tuples (first-class minimum fixed), no pruning.
inline bool has_blowup(const Graph& g, int parts, int t, bool need_edge_in_class0) {
    std::vector<std::vector<int>> classes;
    std::vector<bool> used(static_cast<std::size_t>(g.order()), false);

    auto cross_ok = [&](const std::vector<int>& c) {
        for (const auto& prev : classes)
            for (int u : prev)
                for (int v : c)
                    if (!g.has_edge(u, v)) return false;
        return true;
    };
    auto rec = [&](auto&& self) -> bool {
        if (static_cast<int>(classes.size()) == parts) {
            if (!need_edge_in_class0) return true;
            const auto& c0 = classes[0];
            for (std::size_t i = 0; i < c0.size(); ++i)
                for (std::size_t j = i + 1; j < c0.size(); ++j)
                    if (g.has_edge(c0[i], c0[j])) return true;
            return false;
        }
        std::vector<int> avail;
        for (int v = 0; v < g.order(); ++v)
            if (!used[static_cast<std::size_t>(v)]) avail.push_back(v);
        if (static_cast<int>(avail.size()) < t) return false;
        bool found = false;
        combinations(static_cast<int>(avail.size()), t, [&](const std::vector<int>& idx) {
            if (found) return;
            std::vector<int> c;
            for (int i : idx) c.push_back(avail[static_cast<std::size_t>(i)]);
            if (!cross_ok(c)) return;
            for (int v : c) used[static_cast<std::size_t>(v)] = true;
            classes.push_back(c);
            found = self(self);
            classes.pop_back();
            for (int v : c) used[static_cast<std::size_t>(v)] = false;
        });
        return found;
    };
    return rec(rec);
}

inline int max_blowup_t(const Graph& g, int parts, bool need_edge) {
    int best = 0;
    for (int t = need_edge ? 2 : 1; t * parts <= g.order(); ++t) {
        if (!has_blowup(g, parts, t, need_edge)) break;
        best = t;
    }
    return best;
}

inline bool has_ktt(const Graph& g, const std::vector<int>& within, int t) {
    const int nw = static_cast<int>(within.size());
    bool found = false;
    combinations(nw, t, [&](const std::vector<int>& ai) {
        if (found) return;
        std::vector<int> a;
        for (int i : ai) a.push_back(within[static_cast<std::size_t>(i)]);
        std::vector<int> rest;
        for (int v : within)
            if (std::find(a.begin(), a.end(), v) == a.end()) rest.push_back(v);
        combinations(static_cast<int>(rest.size()), t, [&](const std::vector<int>& bi) {
            if (found) return;
            for (int i : bi)
                for (int u : a)
                    if (!g.has_edge(u, rest[static_cast<std::size_t>(i)])) return;
            found = true;
        });
    });
    return found;
}

/// Straight-line reduction loop against dense Perron data; mirrors the
/// documented deletion rule (minimum coordinate, lowest index on ties).
struct OracleStep {
    int vertex;
    double q;
    int delta;
    int order;
};

inline std::vector<OracleStep> reduction_steps(Graph g, double gamma, double alpha, int algorithm,
                                               double beta) {
    std::vector<OracleStep> steps;
    const int n0 = g.order();
    const long long cap = static_cast<long long>(std::floor(beta * n0 + 1e-12));
    std::vector<int> ids;
    for (int v = 0; v < n0; ++v) ids.push_back(v);
    while (g.order() > 0) {
        int nn = g.order();
        int delta = g.min_degree();
        if (!(delta <= (gamma - alpha) * nn + 1e-12)) break;
        if (algorithm == 2 && static_cast<long long>(steps.size()) >= cap) break;
        auto perron = q_perron(g);
        int u = 0;
        for (int v = 1; v < nn; ++v)
            if (perron.vec[static_cast<std::size_t>(v)] < perron.vec[static_cast<std::size_t>(u)] - 1e-12) u = v;
        steps.push_back({ids[static_cast<std::size_t>(u)], perron.value, delta, nn});
        g = slq::delete_vertex(g, u);
        ids.erase(ids.begin() + u);
    }
    return steps;
}

} // namespace oracle
