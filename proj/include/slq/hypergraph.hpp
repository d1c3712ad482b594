#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "slq/graph.hpp"
#include "slq/rng.hpp"
#include "slq/spectral.hpp"
#include "slq/subgraph.hpp"

namespace slq {

/// r-uniform hypergraph as a plain edge list of sorted r-sets. Shadows of
/// linear hypergraphs are generally not linear, so this carries no linearity
/// invariant; see LinearHypergraph below.
struct Hypergraph {
    int n = 0;
    int r = 2;
    std::vector<std::vector<int>> edges;
};

inline void validate_uniform(const Hypergraph& h) {
    if (h.r < 2) throw std::invalid_argument("hypergraph: uniformity r >= 2 required");
    if (h.n < 0) throw std::invalid_argument("hypergraph: negative order");
    for (const auto& e : h.edges) {
        if (static_cast<int>(e.size()) != h.r) throw std::invalid_argument("hypergraph: edge of wrong size");
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 || e[i] >= h.n) throw std::invalid_argument("hypergraph: vertex out of range");
            if (i > 0 && e[i] <= e[i - 1]) throw std::invalid_argument("hypergraph: edge not a sorted set");
        }
    }
}

/// Any two edges intersect in at most one vertex.
inline bool is_linear(const Hypergraph& h) {
    validate_uniform(h);
    for (std::size_t i = 0; i < h.edges.size(); ++i)
        for (std::size_t j = i + 1; j < h.edges.size(); ++j) {
            int common = 0;
            std::size_t a = 0, b = 0;
            const auto& e = h.edges[i];
            const auto& f = h.edges[j];
            while (a < e.size() && b < f.size()) {
                if (e[a] == f[b]) {
                    ++common;
                    ++a;
                    ++b;
                } else if (e[a] < f[b]) {
                    ++a;
                } else {
                    ++b;
                }
            }
            if (common > 1) return false;
        }
    return true;
}

/// Validated linear r-graph; the constructor is the linearity certificate.
class LinearHypergraph {
public:
    explicit LinearHypergraph(Hypergraph h) : h_(std::move(h)) {
        if (!is_linear(h_)) throw std::invalid_argument("hypergraph is not linear");
    }
    LinearHypergraph(int n, int r, std::vector<std::vector<int>> edges)
        : LinearHypergraph(Hypergraph{n, r, std::move(edges)}) {}

    int order() const { return h_.n; }
    int uniformity() const { return h_.r; }
    long long edge_count() const { return static_cast<long long>(h_.edges.size()); }
    const std::vector<std::vector<int>>& edges() const { return h_.edges; }
    const Hypergraph& raw() const { return h_; }

    std::vector<int> degrees() const {
        std::vector<int> d(static_cast<std::size_t>(h_.n), 0);
        for (const auto& e : h_.edges)
            for (int v : e) d[static_cast<std::size_t>(v)]++;
        return d;
    }

private:
    Hypergraph h_;
};

/// s-shadow: every s-subset of every edge, deduplicated. For a linear host
/// and s >= 2 no duplicates arise across distinct edges.
inline Hypergraph shadow(const LinearHypergraph& h, int s) {
    if (s < 2 || s > h.uniformity()) throw std::invalid_argument("shadow: 2 <= s <= r required");
    Hypergraph out;
    out.n = h.order();
    out.r = s;
    std::vector<int> idx(static_cast<std::size_t>(s));
    for (const auto& e : h.edges()) {
        for (int i = 0; i < s; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            std::vector<int> sub(static_cast<std::size_t>(s));
            for (int i = 0; i < s; ++i) sub[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            out.edges.push_back(std::move(sub));
            int i = s - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == h.uniformity() - s + i) --i;
            if (i < 0) break;
            idx[static_cast<std::size_t>(i)]++;
            for (int j = i + 1; j < s; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    std::sort(out.edges.begin(), out.edges.end());
    out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
    return out;
}

/// 2-shadow as a Graph.
template <std::size_t W = 1>
BasicGraph<W> shadow_graph(const LinearHypergraph& h) {
    auto s2 = shadow(h, 2);
    BasicGraph<W> g(s2.n);
    for (const auto& e : s2.edges) g.add_edge(e[0], e[1]);
    return g;
}

/// Maximizer state for q(H) over the nonnegative r-norm sphere.
struct HyperSpectralResult {
    double value = 0.0;
    std::vector<double> x;
    double residual = 0.0;
    long long iterations = 0;
    bool converged = false;
    bool monotone = true; // objective never decreased by more than 1e-12
};

namespace detail {

struct HyperObjective {
    const LinearHypergraph& h;
    std::vector<int> deg;

    explicit HyperObjective(const LinearHypergraph& hh) : h(hh), deg(hh.degrees()) {}

    /// gradient coordinates g_v = d_v x_v^{r-1} + sum_{e: v in e} prod_{w in e, w != v} x_w
    /// and the objective value sum d_v x_v^r + r sum_e x^e.
    double eval(const std::vector<double>& x, std::vector<double>* grad) const {
        const int r = h.uniformity();
        const int n = h.order();
        double obj = 0.0;
        if (grad) grad->assign(static_cast<std::size_t>(n), 0.0);
        for (int v = 0; v < n; ++v) {
            double xp = std::pow(x[static_cast<std::size_t>(v)], r - 1);
            obj += deg[static_cast<std::size_t>(v)] * xp * x[static_cast<std::size_t>(v)];
            if (grad) (*grad)[static_cast<std::size_t>(v)] += deg[static_cast<std::size_t>(v)] * xp;
        }
        for (const auto& e : h.edges()) {
            double full = 1.0;
            for (int v : e) full *= x[static_cast<std::size_t>(v)];
            obj += r * full;
            if (grad)
                for (int v : e) {
                    double partial = 1.0;
                    for (int w : e)
                        if (w != v) partial *= x[static_cast<std::size_t>(w)];
                    (*grad)[static_cast<std::size_t>(v)] += partial;
                }
        }
        return obj;
    }
};

inline void rnorm_normalize(std::vector<double>& x, int r) {
    double s = 0.0;
    for (double v : x) s += std::pow(v, r);
    double scale = std::pow(s, 1.0 / r);
    if (scale <= 0) throw std::runtime_error("q_hyper: zero iterate");
    for (double& v : x) v /= scale;
}

} // namespace detail

/// q(H) = max over the nonnegative r-norm unit sphere of
/// sum_v d(v) x_v^r + r sum_e prod_{v in e} x_v, via the fixed-point sweep
/// x_v <- ((d_v x_v^{r-1} + sum_{e: v} x^{e \ v}) / theta)^{1/(r-1)} with
/// renormalization, a monotone half-step fallback, and multiple starts
/// (uniform plus seeded random positives). Residual is the largest KKT
/// stationarity violation. For r = 2 the sweep is plain power iteration on
/// Q of the 2-graph.
inline HyperSpectralResult q_hyper(const LinearHypergraph& h, double tol = 1e-10, int restarts = 8,
                                   std::uint64_t seed = 0) {
    const int n = h.order();
    const int r = h.uniformity();
    if (n < 1) throw std::invalid_argument("q_hyper: empty vertex set");
    detail::HyperObjective obj(h);

    HyperSpectralResult best;
    long long total_iters = 0;
    if (h.edge_count() == 0) {
        best.x.assign(static_cast<std::size_t>(n), std::pow(1.0 / n, 1.0 / r));
        best.converged = true;
        return best;
    }

    const long long max_iters = std::max<long long>(2000, static_cast<long long>(200.0 * n * std::log(n + 2.0)));
    for (int restart = 0; restart < restarts; ++restart) {
        std::vector<double> x(static_cast<std::size_t>(n));
        if (restart == 0) {
            x.assign(static_cast<std::size_t>(n), 1.0);
        } else {
            auto rng = SplitMix64::stream(seed, static_cast<std::uint64_t>(restart));
            for (double& v : x) v = 0.05 + rng.next_unit();
        }
        detail::rnorm_normalize(x, r);

        std::vector<double> grad;
        double value = obj.eval(x, &grad);
        double residual = 0.0;
        bool converged = false;
        bool monotone = true;
        long long it = 0;
        for (; it < max_iters; ++it) {
            residual = 0.0;
            for (int v = 0; v < n; ++v) {
                double viol = std::abs(grad[static_cast<std::size_t>(v)] -
                                       value * std::pow(x[static_cast<std::size_t>(v)], r - 1));
                residual = std::max(residual, viol);
            }
            if (residual <= tol) {
                converged = true;
                break;
            }
            std::vector<double> fixed(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v)
                fixed[static_cast<std::size_t>(v)] = std::pow(grad[static_cast<std::size_t>(v)] / value, 1.0 / (r - 1));
            detail::rnorm_normalize(fixed, r);

            std::vector<double> next = fixed;
            double next_value = obj.eval(next, nullptr);
            double step = 1.0;
            while (next_value < value - 1e-15 && step > 1e-9) {
                step *= 0.5;
                for (int v = 0; v < n; ++v)
                    next[static_cast<std::size_t>(v)] = x[static_cast<std::size_t>(v)] +
                        step * (fixed[static_cast<std::size_t>(v)] - x[static_cast<std::size_t>(v)]);
                detail::rnorm_normalize(next, r);
                next_value = obj.eval(next, nullptr);
            }
            if (next_value < value - 1e-12) {
                monotone = false;
                break; // stalled; report the best iterate honestly
            }
            x = std::move(next);
            value = obj.eval(x, &grad);
        }
        total_iters += it;
        if (restart == 0 || value > best.value) {
            best.value = value;
            best.x = x;
            best.residual = residual;
            best.converged = converged;
            best.monotone = monotone;
        }
    }
    best.iterations = total_iters;
    return best;
}

/// r-expansion of a 2-graph: each edge enlarged by r-2 fresh vertices,
/// fresh ids assigned in lexicographic edge order starting at |V(F)|.
template <std::size_t W>
LinearHypergraph expansion(const BasicGraph<W>& f, int r) {
    if (r < 2) throw std::invalid_argument("expansion: r >= 2 required");
    auto es = f.edges();
    Hypergraph out;
    out.r = r;
    out.n = f.order() + (r - 2) * static_cast<int>(es.size());
    int fresh = f.order();
    for (auto [u, v] : es) {
        std::vector<int> e{u, v};
        for (int i = 0; i < r - 2; ++i) e.push_back(fresh++);
        std::sort(e.begin(), e.end());
        out.edges.push_back(std::move(e));
    }
    return LinearHypergraph(std::move(out));
}

/// Embedding of an r-expansion F^r into a linear host: injective vertex
/// images plus, for every F-edge, the unique host edge through the image
/// pair; distinct host edges whose expansion vertices avoid all images and
/// each other. Linearity makes the per-pair host edge unique, but the
/// disjointness of expansion vertices across chosen edges still has to be
/// enforced: two host edges may share a vertex that is an image of nothing.
template <std::size_t W>
std::optional<Witness> contains_expansion(const LinearHypergraph& h, const BasicGraph<W>& f, int r) {
    if (r != h.uniformity()) throw std::invalid_argument("contains_expansion: uniformity mismatch");
    const int nf = f.order();
    if (nf > h.order()) return std::nullopt;

    std::map<std::pair<int, int>, int> pair_edge;
    for (std::size_t ei = 0; ei < h.edges().size(); ++ei) {
        const auto& e = h.edges()[ei];
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b)
                pair_edge[{e[a], e[b]}] = static_cast<int>(ei);
    }
    auto edge_through = [&](int a, int b) -> int {
        auto it = pair_edge.find({std::min(a, b), std::max(a, b)});
        return it == pair_edge.end() ? -1 : it->second;
    };

    std::vector<int> image(static_cast<std::size_t>(nf), -1);
    std::vector<bool> vertex_used(static_cast<std::size_t>(h.order()), false); // images and expansion vertices
    std::vector<bool> edge_used(h.edges().size(), false);
    std::vector<int> chosen; // host edge per F-edge in discovery order
    std::vector<std::pair<int, int>> fedges = f.edges();

    auto rec = [&](auto&& self, int v) -> bool {
        if (v == nf) return true;
        for (int c = 0; c < h.order(); ++c) {
            if (vertex_used[static_cast<std::size_t>(c)]) continue;
            // try image[v] = c; bind every F-edge to v whose other end is mapped
            std::vector<int> bound_edges;
            std::vector<int> marked;
            bool ok = true;
            image[static_cast<std::size_t>(v)] = c;
            vertex_used[static_cast<std::size_t>(c)] = true;
            f.row(v).for_each([&](int u) {
                if (!ok || u > v || image[static_cast<std::size_t>(u)] < 0) return;
                int ei = edge_through(c, image[static_cast<std::size_t>(u)]);
                if (ei < 0 || edge_used[static_cast<std::size_t>(ei)]) {
                    ok = false;
                    return;
                }
                for (int w : h.edges()[static_cast<std::size_t>(ei)]) {
                    if (w == c || w == image[static_cast<std::size_t>(u)]) continue;
                    if (vertex_used[static_cast<std::size_t>(w)]) {
                        ok = false;
                        return;
                    }
                }
                edge_used[static_cast<std::size_t>(ei)] = true;
                bound_edges.push_back(ei);
                for (int w : h.edges()[static_cast<std::size_t>(ei)]) {
                    if (w == c || w == image[static_cast<std::size_t>(u)]) continue;
                    vertex_used[static_cast<std::size_t>(w)] = true;
                    marked.push_back(w);
                }
            });
            if (ok && self(self, v + 1)) {
                for (int ei : bound_edges) chosen.push_back(ei);
                return true;
            }
            for (int ei : bound_edges) edge_used[static_cast<std::size_t>(ei)] = false;
            for (int w : marked) vertex_used[static_cast<std::size_t>(w)] = false;
            vertex_used[static_cast<std::size_t>(c)] = false;
            image[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;

    Witness w{"expansion", {}, std::nullopt};
    w.classes.push_back(image);
    // recover host edges per F-edge from the final images
    std::vector<int> per_edge;
    for (auto [a, b] : fedges) per_edge.push_back(edge_through(image[static_cast<std::size_t>(a)], image[static_cast<std::size_t>(b)]));
    for (int ei : per_edge) w.classes.push_back(h.edges()[static_cast<std::size_t>(ei)]);
    return w;
}

/// Validity of an expansion witness against its host and pattern.
template <std::size_t W>
bool expansion_witness_valid(const Witness& w, const LinearHypergraph& h, const BasicGraph<W>& f) {
    if (w.kind != "expansion" || w.classes.empty()) return false;
    const auto& image = w.classes[0];
    if (static_cast<int>(image.size()) != f.order()) return false;
    std::vector<bool> used(static_cast<std::size_t>(h.order()), false);
    for (int c : image) {
        if (c < 0 || c >= h.order() || used[static_cast<std::size_t>(c)]) return false;
        used[static_cast<std::size_t>(c)] = true;
    }
    auto fedges = f.edges();
    if (w.classes.size() != fedges.size() + 1) return false;
    std::vector<std::vector<int>> blocks(w.classes.begin() + 1, w.classes.end());
    std::vector<std::vector<int>> have = blocks;
    for (auto& b : have) std::sort(b.begin(), b.end());
    std::sort(have.begin(), have.end());
    if (std::adjacent_find(have.begin(), have.end()) != have.end()) return false; // distinct host edges
    for (std::size_t i = 0; i < fedges.size(); ++i) {
        auto [a, b] = fedges[i];
        auto blk = blocks[i];
        std::sort(blk.begin(), blk.end());
        bool found = false;
        for (const auto& e : h.edges())
            if (e == blk) found = true;
        if (!found) return false;
        int ia = image[static_cast<std::size_t>(a)], ib = image[static_cast<std::size_t>(b)];
        if (!std::binary_search(blk.begin(), blk.end(), ia)) return false;
        if (!std::binary_search(blk.begin(), blk.end(), ib)) return false;
        for (int v : blk) {
            if (v == ia || v == ib) continue;
            if (used[static_cast<std::size_t>(v)]) return false; // hits an image or another edge's expansion vertex
            used[static_cast<std::size_t>(v)] = true;
        }
    }
    return true;
}

/// Definition-(a)-(e) audit of a k = r group design: groups of m consecutive
/// ids, blocks meeting every group at most once, every cross pair in exactly
/// one block. Pure integer checks.
inline bool design_audit(const LinearHypergraph& h, int m, int r) {
    if (h.order() != m * r) return false;
    auto group = [&](int v) { return v / m; };
    std::map<std::pair<int, int>, int> pair_cover;
    for (const auto& e : h.edges()) {
        std::vector<int> seen;
        for (int v : e) {
            if (std::find(seen.begin(), seen.end(), group(v)) != seen.end()) return false;
            seen.push_back(group(v));
        }
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b) pair_cover[{e[a], e[b]}]++;
    }
    for (int u = 0; u < h.order(); ++u)
        for (int v = u + 1; v < h.order(); ++v) {
            if (group(u) == group(v)) {
                if (pair_cover.count({u, v})) return false;
            } else if (pair_cover[{u, v}] != 1) {
                return false;
            }
        }
    return true;
}

inline bool is_prime(int m) {
    if (m < 2) return false;
    for (int d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

/// Transversal (k = r) design over Z_m, m prime: groups {i*m..i*m+m-1},
/// blocks {(i, a + i*b mod m) : i < min(r, m)} for (a,b) in Z_m^2, completed
/// by the slope point (m, b) when r = m + 1. Linear, m-regular, n = r*m; the
/// Definition (a)-(e) audit runs post-hoc.
inline LinearHypergraph transversal_design(int m, int r) {
    if (!is_prime(m)) throw std::invalid_argument("transversal_design: m must be prime");
    if (r < 2 || r > m + 1) throw std::invalid_argument("transversal_design: 2 <= r <= m+1 required");
    Hypergraph out;
    out.n = r * m;
    out.r = r;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            std::vector<int> block;
            for (int i = 0; i < std::min(r, m); ++i) block.push_back(i * m + (a + i * b) % m);
            if (r == m + 1) block.push_back(m * m + b);
            std::sort(block.begin(), block.end());
            out.edges.push_back(std::move(block));
        }
    LinearHypergraph h(std::move(out));
    if (!design_audit(h, m, r)) throw std::logic_error("transversal_design: audit failed");
    return h;
}

struct ShadowBound {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
    bool hyper_converged = false;
    bool graph_converged = false;
};

/// (r-1) q(H) <= q(shadow) within tol.
inline ShadowBound check_shadow_bound(const LinearHypergraph& h, double tol = 1e-8) {
    ShadowBound out;
    auto hres = q_hyper(h);
    auto gres = q_radius(shadow_graph(h));
    out.hyper_converged = hres.converged;
    out.graph_converged = gres.converged;
    out.lhs = (h.uniformity() - 1) * hres.value;
    out.rhs = gres.value;
    out.holds = out.lhs <= out.rhs + tol;
    return out;
}

/// Seeded random linear r-graph: uniformly sampled r-sets accepted while
/// linearity is preserved, until the edge target or the attempt budget is
/// reached.
inline LinearHypergraph random_linear(int n, int r, int target_edges, std::uint64_t seed) {
    if (r < 2 || n < r) throw std::invalid_argument("random_linear: need n >= r >= 2");
    auto rng = SplitMix64::stream(seed, 0);
    Hypergraph out;
    out.n = n;
    out.r = r;
    auto compatible = [&](const std::vector<int>& cand) {
        for (const auto& e : out.edges) {
            int common = 0;
            for (int v : cand)
                if (std::binary_search(e.begin(), e.end(), v)) ++common;
            if (common > 1) return false;
        }
        return true;
    };
    long long budget = 64LL * std::max(1, target_edges);
    while (static_cast<int>(out.edges.size()) < target_edges && budget-- > 0) {
        std::vector<int> cand;
        while (static_cast<int>(cand.size()) < r) {
            int v = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
            if (std::find(cand.begin(), cand.end(), v) == cand.end()) cand.push_back(v);
        }
        std::sort(cand.begin(), cand.end());
        if (compatible(cand)) out.edges.push_back(cand);
    }
    return LinearHypergraph(std::move(out));
}

/// Text format: header "n r m", then one sorted r-set per line.
inline std::string write_hypergraph(const Hypergraph& h) {
    std::ostringstream os;
    os << h.n << ' ' << h.r << ' ' << h.edges.size() << '\n';
    for (const auto& e : h.edges) {
        for (std::size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << e[static_cast<std::size_t>(i)];
        os << '\n';
    }
    return os.str();
}

inline std::string write_hypergraph(const LinearHypergraph& h) { return write_hypergraph(h.raw()); }

inline Hypergraph read_hypergraph(const std::string& text) {
    std::istringstream is(text);
    Hypergraph h;
    long long m;
    if (!(is >> h.n >> h.r >> m)) throw std::runtime_error("hypergraph text: bad header");
    for (long long i = 0; i < m; ++i) {
        std::vector<int> e(static_cast<std::size_t>(h.r));
        for (int j = 0; j < h.r; ++j)
            if (!(is >> e[static_cast<std::size_t>(j)])) throw std::runtime_error("hypergraph text: truncated");
        h.edges.push_back(std::move(e));
    }
    validate_uniform(h);
    return h;
}

} // namespace slq
