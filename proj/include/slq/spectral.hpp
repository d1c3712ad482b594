#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "slq/graph.hpp"
#include "slq/linalg.hpp"

namespace slq {

/// Spectral radius estimate with its certificate. The eigenvector is
/// entrywise nonnegative with Euclidean norm 1; for a disconnected graph it
/// is supported on one radius-maximizing component (ties resolved toward the
/// component containing the lowest vertex index) and zero elsewhere.
struct SpectralResult {
    double value = 0.0;
    std::vector<double> eigenvector;
    double residual = 0.0;
    long long iterations = 0;
    bool converged = true;
};

enum class SpectralMatrix { SignlessLaplacian, Adjacency };

namespace detail {

/// Power iteration with a +1 diagonal shift on one connected component.
/// The shift keeps the iteration aperiodic on bipartite-structured
/// components; the reported value is the plain Rayleigh quotient of the
/// unshifted matrix, computed as dot(x, Mx)/dot(x, x).
template <std::size_t W>
void solve_component(const BasicGraph<W>& g, const std::vector<int>& degs, SpectralMatrix which,
                     double tol, std::vector<double>& x, double& value, double& residual,
                     long long& iterations, bool& converged) {
    const int n = g.order();
    const bool use_degrees = which == SpectralMatrix::SignlessLaplacian;
    x.assign(static_cast<std::size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> z(static_cast<std::size_t>(n));
    const long long max_iters = 1 + static_cast<long long>(100.0 * n * std::log(n + 2.0));
    value = 0.0;
    residual = 0.0;
    iterations = 0;
    converged = false;
    for (long long it = 0;; ++it) {
        // z = M x with M = Q or A
        for (int u = 0; u < n; ++u) {
            double s = use_degrees ? degs[static_cast<std::size_t>(u)] * x[static_cast<std::size_t>(u)] : 0.0;
            g.row(u).for_each([&](int v) { s += x[static_cast<std::size_t>(v)]; });
            z[static_cast<std::size_t>(u)] = s;
        }
        double xz = 0.0, xx = 0.0;
        for (int u = 0; u < n; ++u) {
            xz += x[static_cast<std::size_t>(u)] * z[static_cast<std::size_t>(u)];
            xx += x[static_cast<std::size_t>(u)] * x[static_cast<std::size_t>(u)];
        }
        double theta = xz / xx;
        double rr = 0.0;
        for (int u = 0; u < n; ++u) {
            double d = z[static_cast<std::size_t>(u)] - theta * x[static_cast<std::size_t>(u)];
            rr += d * d;
        }
        value = theta;
        residual = std::sqrt(rr);
        iterations = it;
        if (residual <= tol) {
            converged = true;
            return;
        }
        if (it >= max_iters) return;
        // power step on M + I
        double norm = 0.0;
        for (int u = 0; u < n; ++u) {
            z[static_cast<std::size_t>(u)] += x[static_cast<std::size_t>(u)];
            norm += z[static_cast<std::size_t>(u)] * z[static_cast<std::size_t>(u)];
        }
        norm = std::sqrt(norm);
        for (int u = 0; u < n; ++u) x[static_cast<std::size_t>(u)] = z[static_cast<std::size_t>(u)] / norm;
    }
}

template <std::size_t W>
SpectralResult radius(const BasicGraph<W>& g, SpectralMatrix which, double tol) {
    const int n = g.order();
    if (n < 1) throw std::invalid_argument("spectral radius: empty graph");
    SpectralResult best;
    best.eigenvector.assign(static_cast<std::size_t>(n), 0.0);
    bool have = false;
    bool all_converged = true;
    long long total_iters = 0;
    for (const auto& mask : g.components()) {
        auto [comp, verts] = g.induced(mask);
        std::vector<int> degs(verts.size());
        for (std::size_t i = 0; i < verts.size(); ++i) degs[i] = comp.degree(static_cast<int>(i));
        std::vector<double> x;
        double value, residual;
        long long iterations;
        bool converged;
        solve_component(comp, degs, which, tol, x, value, residual, iterations, converged);
        total_iters += iterations;
        all_converged = all_converged && converged;
        if (!have || value > best.value) {
            have = true;
            best.value = value;
            best.residual = residual;
            best.eigenvector.assign(static_cast<std::size_t>(n), 0.0);
            for (std::size_t i = 0; i < verts.size(); ++i)
                best.eigenvector[static_cast<std::size_t>(verts[i])] = x[i];
        }
    }
    best.iterations = total_iters;
    best.converged = all_converged;
    return best;
}

} // namespace detail

/// Signless Laplacian spectral radius q(G) with Perron vector.
template <std::size_t W>
SpectralResult q_radius(const BasicGraph<W>& g, double tol = 1e-10) {
    return detail::radius(g, SpectralMatrix::SignlessLaplacian, tol);
}

/// Adjacency spectral radius lambda(G).
template <std::size_t W>
SpectralResult lambda_radius(const BasicGraph<W>& g, double tol = 1e-10) {
    return detail::radius(g, SpectralMatrix::Adjacency, tol);
}

/// q of the complete multipartite graph with the given part sizes, via the
/// equitable quotient: entry (a,a) = n - s_a, entry (a,b) = s_b. The quotient
/// is symmetrized by the D^{1/2} similarity with D = diag(s) and solved
/// densely, an independent route from the power iteration.
inline double q_multipartite_exact(const std::vector<int>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("q_multipartite_exact: empty size list");
    int n = 0;
    for (int s : sizes) {
        if (s < 1) throw std::invalid_argument("q_multipartite_exact: sizes must be >= 1");
        n += s;
    }
    const int k = static_cast<int>(sizes.size());
    SymMatrix m(k);
    for (int a = 0; a < k; ++a) {
        m.at(a, a) = n - sizes[static_cast<std::size_t>(a)];
        for (int b = a + 1; b < k; ++b) {
            double v = std::sqrt(static_cast<double>(sizes[static_cast<std::size_t>(a)]) *
                                 static_cast<double>(sizes[static_cast<std::size_t>(b)]));
            m.at(a, b) = v;
            m.at(b, a) = v;
        }
    }
    auto eig = jacobi_eigenvalues(std::move(m));
    return eig.back();
}

/// The paper's chain of lower bounds on q(G): 4e/n, degree-power sum over m,
/// and twice the adjacency radius. The degree-power bound is absent if m = 0.
struct QLowerBounds {
    double four_e_over_n = 0.0;
    std::optional<double> degree_power_over_m;
    double twice_lambda = 0.0;
};

template <std::size_t W>
QLowerBounds q_lower_bounds(const BasicGraph<W>& g, double tol = 1e-10) {
    if (g.order() < 1) throw std::invalid_argument("q_lower_bounds: empty graph");
    QLowerBounds b;
    long long m = g.edge_count();
    b.four_e_over_n = 4.0 * static_cast<double>(m) / g.order();
    if (m >= 1)
        b.degree_power_over_m = static_cast<double>(degree_square_sum(g)) / static_cast<double>(m);
    b.twice_lambda = 2.0 * lambda_radius(g, tol).value;
    return b;
}

/// Vertex of minimum eigenvector coordinate, ties broken by lowest index.
inline int perron_min_vertex(const SpectralResult& res) {
    int arg = 0;
    for (int v = 1; v < static_cast<int>(res.eigenvector.size()); ++v)
        if (res.eigenvector[static_cast<std::size_t>(v)] < res.eigenvector[static_cast<std::size_t>(arg)]) arg = v;
    return arg;
}

} // namespace slq
