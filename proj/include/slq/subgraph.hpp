#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "slq/families.hpp"
#include "slq/graph.hpp"

namespace slq {

/// Certificate for a located substructure. `classes` carries the vertex sets
/// (blowup classes, or clique + apex set for books); `edge` the distinguished
/// edge where the pattern has one.
struct Witness {
    std::string kind;
    std::vector<std::vector<int>> classes;
    std::optional<std::pair<int, int>> edge;
};

/// Re-validate a witness against its host: every demanded edge must exist.
template <std::size_t W>
bool witness_valid(const Witness& w, const BasicGraph<W>& g) {
    auto in_range = [&](int v) { return v >= 0 && v < g.order(); };
    for (const auto& cls : w.classes)
        for (int v : cls)
            if (!in_range(v)) return false;
    std::vector<int> all;
    for (const auto& cls : w.classes) all.insert(all.end(), cls.begin(), cls.end());
    auto sorted = all;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

    if (w.kind == "blowup" || w.kind == "kkplus" || w.kind == "ktt") {
        for (std::size_t a = 0; a < w.classes.size(); ++a)
            for (std::size_t b = a + 1; b < w.classes.size(); ++b)
                for (int u : w.classes[a])
                    for (int v : w.classes[b])
                        if (!g.has_edge(u, v)) return false;
        if (w.kind == "kkplus") {
            if (!w.edge || w.classes.empty()) return false;
            auto [u, v] = *w.edge;
            auto& c0 = w.classes[0];
            bool uin = std::find(c0.begin(), c0.end(), u) != c0.end();
            bool vin = std::find(c0.begin(), c0.end(), v) != c0.end();
            return uin && vin && g.has_edge(u, v);
        }
        if (w.kind == "ktt" && w.classes.size() != 2) return false;
        return true;
    }
    if (w.kind == "book") {
        if (w.classes.size() != 2) return false;
        const auto& clique = w.classes[0];
        const auto& apex = w.classes[1];
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j)
                if (!g.has_edge(clique[i], clique[j])) return false;
        for (int a : apex)
            for (int c : clique)
                if (!g.has_edge(a, c)) return false;
        return true;
    }
    return false;
}

namespace detail {

template <std::size_t W>
long long count_cliques_in(const BasicGraph<W>& g, BitRow<W> cand, int need) {
    if (need == 0) return 1;
    if (cand.count() < need) return 0;
    if (need == 1) return cand.count();
    long long total = 0;
    cand.for_each([&](int v) {
        auto rest = cand & g.row(v);
        // only vertices above v, to count each clique once
        rest = rest.andnot(BitRow<W>::below(v + 1));
        total += count_cliques_in(g, rest, need - 1);
    });
    return total;
}

template <std::size_t W, class F>
bool for_each_clique(const BasicGraph<W>& g, BitRow<W> cand, int need, std::vector<int>& cur, F& f) {
    if (need == 0) return f(cur);
    if (cand.count() < need) return false;
    bool stop = false;
    cand.for_each([&](int v) {
        if (stop) return;
        cur.push_back(v);
        auto rest = (cand & g.row(v)).andnot(BitRow<W>::below(v + 1));
        stop = for_each_clique(g, rest, need - 1, cur, f);
        cur.pop_back();
    });
    return stop;
}

template <std::size_t W>
int max_clique_size(const BasicGraph<W>& g, BitRow<W> cand, int cur, int best) {
    if (cur + cand.count() <= best) return best;
    bool done = false;
    cand.for_each([&](int v) {
        if (done) return;
        auto rest = (cand & g.row(v)).andnot(BitRow<W>::below(v + 1));
        int got = max_clique_size(g, rest, cur + 1, best);
        if (got > best) best = got;
        if (cur + cand.count() <= best) done = true;
    });
    return best > cur ? best : cur;
}

/// Backtracking for K_parts[t] as a (not necessarily induced) subgraph.
/// Classes are filled in order; each vertex must be adjacent to everything in
/// the other classes, intra-class pairs are unconstrained. Symmetry is broken
/// by increasing class minima (except class 0 when it is pre-seeded).
template <std::size_t W>
struct BlowupSearch {
    const BasicGraph<W>& g;
    int parts;
    int t;
    bool seeded = false; // class 0 is distinguished, exempt from the min-ordering
    std::vector<std::vector<int>> classes;

    bool fill_class(std::size_t ci, int slot, int min_next, BitRow<W> cur_cand, BitRow<W> future) {
        if (slot == t) {
            if (ci + 1 == static_cast<std::size_t>(parts)) return true;
            // interchangeable classes are ordered by their minima
            int floor_idx = (seeded && ci == 0) ? 0 : classes[ci][0] + 1;
            classes.emplace_back();
            bool ok = fill_class(ci + 1, 0, floor_idx, future, future);
            if (!ok) classes.pop_back();
            return ok;
        }
        auto cand = cur_cand.andnot(BitRow<W>::below(min_next));
        if (cand.count() < t - slot) return false;
        bool found = false;
        cand.for_each([&](int v) {
            if (found) return;
            // future classes must be joined to v
            auto fut = future & g.row(v);
            int remaining_classes = parts - static_cast<int>(ci) - 1;
            if (fut.count() < remaining_classes * t) return;
            classes[ci].push_back(v);
            auto cur_rest = cur_cand;
            cur_rest.reset(v);
            if (fill_class(ci, slot + 1, v + 1, cur_rest, fut)) {
                found = true;
                return;
            }
            classes[ci].pop_back();
        });
        return found;
    }

    std::optional<std::vector<std::vector<int>>> run() {
        classes.clear();
        classes.emplace_back();
        auto all = g.vertex_mask();
        if (fill_class(0, 0, 0, all, all)) return classes;
        return std::nullopt;
    }

    /// Variant with class 0 seeded by a host edge (for K_k^+[t]).
    std::optional<std::vector<std::vector<int>>> run_seeded() {
        seeded = true;
        auto all = g.vertex_mask();
        for (auto [u, v] : g.edges()) {
            classes.clear();
            classes.push_back({u, v});
            auto future = all & g.row(u) & g.row(v);
            auto cur = all;
            cur.reset(u);
            cur.reset(v);
            if (fill_class(0, 2, 0, cur, future)) return classes;
        }
        return std::nullopt;
    }
};

} // namespace detail

/// Exact number of r-vertex cliques.
template <std::size_t W>
long long count_cliques(const BasicGraph<W>& g, int r) {
    if (r < 1) throw std::invalid_argument("count_cliques: r >= 1 required");
    if (r > g.order()) return 0;
    return detail::count_cliques_in(g, g.vertex_mask(), r);
}

template <std::size_t W>
int max_clique(const BasicGraph<W>& g) {
    return detail::max_clique_size(g, g.vertex_mask(), 0, 0);
}

/// Largest t with K_parts[t] a subgraph of g (intra-class edges permitted).
template <std::size_t W>
std::pair<int, Witness> max_blowup(const BasicGraph<W>& g, int parts) {
    if (parts < 2) throw std::invalid_argument("max_blowup: parts >= 2 required");
    Witness w{"blowup", {}, std::nullopt};
    int best = 0;
    for (int t = 1; t * parts <= g.order(); ++t) {
        detail::BlowupSearch<W> search{g, parts, t};
        auto found = search.run();
        if (!found) break;
        best = t;
        w.classes = *found;
    }
    return {best, w};
}

/// Largest t >= 2 with K_k[t] a subgraph such that some class carries a host
/// edge. Returns 0 when no such t exists; K_k^+[1] is not a meaningful
/// pattern (a size-1 class cannot host an edge) and is excluded by
/// convention.
template <std::size_t W>
std::pair<int, Witness> max_kk_plus(const BasicGraph<W>& g, int k) {
    if (k < 2) throw std::invalid_argument("max_kk_plus: k >= 2 required");
    Witness w{"kkplus", {}, std::nullopt};
    int best = 0;
    for (int t = 2; t * k <= g.order(); ++t) {
        detail::BlowupSearch<W> search{g, k, t};
        auto found = search.run_seeded();
        if (!found) break;
        best = t;
        w.classes = *found;
        w.edge = std::make_pair((*found)[0][0], (*found)[0][1]);
    }
    return {best, w};
}

struct JointResult {
    long long size = 0;
    std::optional<std::pair<int, int>> edge;
};

/// js_r(G): the largest number of r-cliques through a common edge. The
/// maximizing edge is the lexicographically first one.
template <std::size_t W>
JointResult joint_size(const BasicGraph<W>& g, int r) {
    if (r < 3) throw std::invalid_argument("joint_size: r >= 3 required");
    JointResult out;
    for (auto [u, v] : g.edges()) {
        auto common = g.row(u) & g.row(v);
        long long cnt = detail::count_cliques_in(g, common, r - 2);
        if (!out.edge || cnt > out.size) {
            out.size = cnt;
            out.edge = std::make_pair(u, v);
        }
    }
    return out;
}

/// Largest t with B_{k,t} a subgraph: max over k-cliques C of the common
/// neighborhood size outside C. The witness carries the first maximizing
/// clique and its apex set.
template <std::size_t W>
std::pair<int, Witness> generalized_book_size(const BasicGraph<W>& g, int k) {
    if (k < 2) throw std::invalid_argument("generalized_book_size: k >= 2 required");
    int best = -1;
    Witness w{"book", {}, std::nullopt};
    std::vector<int> cur;
    auto visit = [&](const std::vector<int>& clique) {
        auto common = g.vertex_mask();
        for (int v : clique) common &= g.row(v);
        int t = common.count();
        if (t > best) {
            best = t;
            w.classes.clear();
            w.classes.push_back(clique);
            std::vector<int> apex;
            common.for_each([&](int v) { apex.push_back(v); });
            w.classes.push_back(std::move(apex));
        }
        return false; // keep enumerating
    };
    detail::for_each_clique(g, g.vertex_mask(), k, cur, visit);
    if (best < 0) return {0, w};
    return {best, w};
}

/// Exact chromatic number by branch and bound between the clique lower bound
/// and a greedy upper bound. Exponential in the worst case; intended for the
/// desk-scale hosts used here.
template <std::size_t W>
int chromatic_number(const BasicGraph<W>& g) {
    const int n = g.order();
    if (n < 1) throw std::invalid_argument("chromatic_number: empty graph");
    if (g.edge_count() == 0) return 1;

    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });

    // greedy upper bound
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    int ub = 0;
    for (int v : order) {
        unsigned long long used = 0;
        g.row(v).for_each([&](int u) {
            if (color[static_cast<std::size_t>(u)] >= 0) used |= 1ull << color[static_cast<std::size_t>(u)];
        });
        int c = 0;
        while (used & (1ull << c)) ++c;
        color[static_cast<std::size_t>(v)] = c;
        ub = std::max(ub, c + 1);
    }
    int lb = max_clique(g);

    auto colorable = [&](int k) {
        std::vector<int> col(static_cast<std::size_t>(n), -1);
        auto rec = [&](auto&& self, std::size_t idx, int max_used) -> bool {
            if (idx == order.size()) return true;
            int v = order[idx];
            unsigned long long used = 0;
            g.row(v).for_each([&](int u) {
                if (col[static_cast<std::size_t>(u)] >= 0) used |= 1ull << col[static_cast<std::size_t>(u)];
            });
            int limit = std::min(k - 1, max_used + 1);
            for (int c = 0; c <= limit; ++c) {
                if (used & (1ull << c)) continue;
                col[static_cast<std::size_t>(v)] = c;
                if (self(self, idx + 1, std::max(max_used, c))) return true;
                col[static_cast<std::size_t>(v)] = -1;
            }
            return false;
        };
        return rec(rec, 0, -1);
    };

    for (int k = lb; k < ub; ++k)
        if (colorable(k)) return k;
    return ub;
}

/// Minimum number of edge edits (additions plus deletions) turning g into a
/// complete multipartite graph on a balanced k-partition. Exhaustive over
/// partitions, so restricted to n <= 14.
template <std::size_t W>
long long edit_distance_to_turan(const BasicGraph<W>& g, int k) {
    const int n = g.order();
    if (n > 14) throw std::invalid_argument("edit_distance_to_turan: exact profile requires n <= 14");
    if (k < 2) throw std::invalid_argument("edit_distance_to_turan: k >= 2 required");
    auto sizes = turan_part_sizes(n, k);
    long long sq = 0;
    for (int s : sizes) sq += static_cast<long long>(s) * s;
    const long long cross_pairs = (static_cast<long long>(n) * n - sq) / 2;
    const long long m = g.edge_count();

    std::vector<BitRow<W>> part_mask(sizes.size());
    std::vector<int> fill(sizes.size(), 0);
    long long best_intra = -1;

    auto rec = [&](auto&& self, int v, long long intra) -> void {
        if (best_intra >= 0 && intra >= best_intra) return;
        if (v == n) {
            best_intra = intra;
            return;
        }
        for (std::size_t p = 0; p < sizes.size(); ++p) {
            if (fill[p] == sizes[p]) continue;
            // identical empty parts are interchangeable
            if (fill[p] == 0) {
                bool skip = false;
                for (std::size_t q = 0; q < p; ++q)
                    if (fill[q] == 0 && sizes[q] == sizes[p]) {
                        skip = true;
                        break;
                    }
                if (skip) continue;
            }
            long long add = (g.row(v) & part_mask[p]).count();
            part_mask[p].set(v);
            fill[p]++;
            self(self, v + 1, intra + add);
            fill[p]--;
            part_mask[p].reset(v);
        }
    };
    rec(rec, 0, 0);
    return 2 * best_intra + cross_pairs - m;
}

} // namespace slq
