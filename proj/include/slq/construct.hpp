#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "slq/families.hpp"
#include "slq/graph.hpp"
#include "slq/rational.hpp"
#include "slq/rng.hpp"
#include "slq/spectral.hpp"
#include "slq/subgraph.hpp"

namespace slq {

/// One complete bipartite K_{t,t} (as a subgraph, intra-side edges
/// permitted) inside the induced subgraph on `within`, or nothing. First hit
/// of a lexicographic backtracking search, so deterministic.
template <std::size_t W>
std::optional<Witness> find_ktt(const BasicGraph<W>& g, BitRow<W> within, int t) {
    if (t < 1) throw std::invalid_argument("find_ktt: t >= 1 required");
    within &= g.vertex_mask();
    std::vector<int> side_a;
    BitRow<W> a_mask{};
    std::optional<Witness> result;

    auto rec = [&](auto&& self, int min_next, BitRow<W> common) -> bool {
        if (static_cast<int>(side_a.size()) == t) {
            auto bcand = common.andnot(a_mask);
            if (bcand.count() < t) return false;
            Witness w{"ktt", {side_a, {}}, std::nullopt};
            bcand.for_each([&](int v) {
                if (static_cast<int>(w.classes[1].size()) < t) w.classes[1].push_back(v);
            });
            result = std::move(w);
            return true;
        }
        auto cand = within.andnot(a_mask).andnot(BitRow<W>::below(min_next));
        bool found = false;
        cand.for_each([&](int v) {
            if (found) return;
            auto next_common = common & g.row(v);
            if (next_common.count() < t) return;
            side_a.push_back(v);
            a_mask.set(v);
            found = self(self, v + 1, next_common);
            if (!found) {
                side_a.pop_back();
                a_mask.reset(v);
            }
        });
        return found;
    };
    rec(rec, 0, within);
    return result;
}

template <std::size_t W>
std::optional<Witness> find_ktt(const BasicGraph<W>& g, int t) {
    return find_ktt(g, g.vertex_mask(), t);
}

/// The lexicographically smallest host edge of a K_{t,t} witness.
inline std::pair<int, int> smallest_cross_edge(const Witness& w) {
    std::pair<int, int> best{-1, -1};
    for (int a : w.classes[0])
        for (int b : w.classes[1]) {
            auto e = std::minmax(a, b);
            std::pair<int, int> cur{e.first, e.second};
            if (best.first < 0 || cur < best) best = cur;
        }
    return best;
}

/// Certified randomized construction output. All pass flags are recomputed
/// from the graph, never trusted from the builder.
struct ConstructionReport {
    Graph graph;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0; // stream index of the selected attempt
    int attempts = 0;         // attempts consumed (== stream+1 when passing)
    long long edge_count = 0;
    int t = 0;
    int deletions = 0;
    struct {
        double four_e_over_n = 0.0;
        double target = 0.0;
        bool pass = false;
    } q_bound_check;
    struct {
        std::string pattern;
        bool pass = false;
    } freeness_check;
    // Example 2.6 only: e(G') against (n/k)^2.
    std::optional<std::pair<long long, long long>> gprime_check;
    double q_value = 0.0;
    bool pass = false;
};

namespace detail {

/// Exact test 2*m*k*eden > n^2*((k-1)*eden + enum*k), i.e.
/// m > (1 - 1/k + eps) n^2 / 2.
inline bool edges_exceed(long long m, int n, int k, const Rational& eps) {
    __int128 lhs = static_cast<__int128>(2) * m * k * eps.den;
    __int128 rhs = static_cast<__int128>(n) * n * (static_cast<__int128>(k - 1) * eps.den + static_cast<__int128>(eps.num) * k);
    return lhs > rhs;
}

template <std::size_t W>
int delete_until_ktt_free(BasicGraph<W>& g, BitRow<W> within, int t) {
    int deletions = 0;
    while (auto w = find_ktt(g, within, t)) {
        auto [u, v] = smallest_cross_edge(*w);
        g.remove_edge(u, v);
        ++deletions;
    }
    return deletions;
}

} // namespace detail

/// Turán graph with random edges of density p = 2*eps*k^2 inside one part,
/// made K_{t,t}-free within that part by edge deletions. The result has no
/// K_{k+1}[t] blowup while the edge count certifies
/// q(G) >= 4e/n > 2(1 - 1/k + eps) n whenever the attempt passes. Attempts
/// draw independent seed streams; the first passing attempt is returned, or
/// the last one with pass=false once the cap is exhausted.
inline ConstructionReport example_2_4(int n, int k, const Rational& eps, std::uint64_t seed,
                                      int attempt_cap = 64) {
    if (k < 2) throw std::invalid_argument("example_2_4: k >= 2 required");
    if (n <= 0 || n % k != 0) throw std::invalid_argument("example_2_4: k must divide n");
    Rational p = eps * Rational(2 * static_cast<std::int64_t>(k) * k);
    if (!(eps > Rational(0)) || !(p < Rational(1)))
        throw std::invalid_argument("example_2_4: need 0 < eps < 1/(2k^2)");
    const int usize = n / k;
    const int t = std::max(1, static_cast<int>(std::ceil(2.0 * std::log(static_cast<double>(usize)) / std::log(1.0 / p.value()))));

    ConstructionReport rep;
    for (int attempt = 0; attempt < attempt_cap; ++attempt) {
        auto rng = SplitMix64::stream(seed, static_cast<std::uint64_t>(attempt));
        Graph g = turan<1>(n, k).graph;
        for (int u = 0; u < usize; ++u)
            for (int v = u + 1; v < usize; ++v)
                if (rng.bernoulli(p)) g.add_edge(u, v);
        auto umask = Graph::Row::below(usize);
        int deletions = detail::delete_until_ktt_free(g, umask, t);

        rep = ConstructionReport{};
        rep.graph = g;
        rep.seed = seed;
        rep.stream = static_cast<std::uint64_t>(attempt);
        rep.attempts = attempt + 1;
        rep.edge_count = g.edge_count();
        rep.t = t;
        rep.deletions = deletions;
        rep.freeness_check.pattern = "K_{" + std::to_string(t) + "," + std::to_string(t) + "} within U";
        rep.freeness_check.pass = !find_ktt(g, umask, t).has_value();
        rep.q_bound_check.four_e_over_n = 4.0 * static_cast<double>(rep.edge_count) / n;
        rep.q_bound_check.target = 2.0 * (1.0 - 1.0 / k + eps.value()) * n;
        rep.q_bound_check.pass = detail::edges_exceed(rep.edge_count, n, k, eps);
        rep.q_value = q_radius(g).value;
        rep.pass = rep.freeness_check.pass && rep.q_bound_check.pass;
        if (rep.pass) return rep;
    }
    rep.attempts = attempt_cap;
    return rep;
}

/// Random graph G(2n/k, 2/3) made K_{t,t}-free, then joined with
/// T_{n-2n/k, k-2} (nothing for k = 2). Certifies e(G') > (n/k)^2 and the
/// total edge count above (1 - 1/k) n^2 / 2; the q >= 2(1-1/k)n comparison is
/// recorded as well.
inline ConstructionReport example_2_6(int n, int k, std::uint64_t seed, int attempt_cap = 64) {
    if (k < 2) throw std::invalid_argument("example_2_6: k >= 2 required");
    if (n <= 0 || n % k != 0) throw std::invalid_argument("example_2_6: k must divide n");
    if (n <= 3 * k) throw std::invalid_argument("example_2_6: n > 3k required");
    const Rational p(2, 3);
    const int ng = 2 * n / k;
    const int t = static_cast<int>(std::ceil(2.0 * std::log(static_cast<double>(ng)) / std::log(1.5)));
    const long long gprime_target = static_cast<long long>(n / k) * (n / k);

    ConstructionReport rep;
    for (int attempt = 0; attempt < attempt_cap; ++attempt) {
        auto rng = SplitMix64::stream(seed, static_cast<std::uint64_t>(attempt));
        Graph gp(ng);
        for (int u = 0; u < ng; ++u)
            for (int v = u + 1; v < ng; ++v)
                if (rng.bernoulli(p)) gp.add_edge(u, v);
        auto gpmask = Graph::Row::below(ng);
        int deletions = detail::delete_until_ktt_free(gp, gpmask, t);
        long long gprime_edges = gp.edge_count();

        Graph partner = k == 2 ? Graph(0) : turan<1>(n - ng, k - 2).graph;
        Graph h = join(gp, partner);

        rep = ConstructionReport{};
        rep.graph = h;
        rep.seed = seed;
        rep.stream = static_cast<std::uint64_t>(attempt);
        rep.attempts = attempt + 1;
        rep.edge_count = h.edge_count();
        rep.t = t;
        rep.deletions = deletions;
        rep.gprime_check = std::make_pair(gprime_edges, gprime_target);
        rep.freeness_check.pattern = "K_{" + std::to_string(t) + "," + std::to_string(t) + "} within G'";
        rep.freeness_check.pass = !find_ktt(h, gpmask, t).has_value();
        rep.q_bound_check.four_e_over_n = 4.0 * static_cast<double>(rep.edge_count) / n;
        rep.q_bound_check.target = 2.0 * (1.0 - 1.0 / k) * n;
        rep.q_value = q_radius(h).value;
        rep.q_bound_check.pass = rep.q_value >= rep.q_bound_check.target;
        bool edges_ok = detail::edges_exceed(rep.edge_count, n, k, Rational(0));
        rep.pass = rep.freeness_check.pass && gprime_edges > gprime_target && edges_ok;
        if (rep.pass) return rep;
    }
    rep.attempts = attempt_cap;
    return rep;
}

} // namespace slq
