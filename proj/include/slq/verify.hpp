#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "slq/construct.hpp"
#include "slq/families.hpp"
#include "slq/graph.hpp"
#include "slq/graph6.hpp"
#include "slq/hypergraph.hpp"
#include "slq/rational.hpp"
#include "slq/reduction.hpp"
#include "slq/rng.hpp"
#include "slq/spectral.hpp"
#include "slq/subgraph.hpp"

namespace slq {

/// Labeled-graph enumeration: every edge subset of K_n exactly once, mask
/// ascending in the fixed pair order (0,1),(0,2),...,(0,n-1),(1,2),...
inline Graph graph_from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1) g.add_edge(u, v);
    return g;
}

template <class F>
void for_each_graph(int n, F f) {
    if (n < 0 || n > 7) throw std::invalid_argument("for_each_graph: full enumeration profile is n <= 7");
    const int pairs = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t{1} << pairs;
    for (std::uint64_t mask = 0; mask < total; ++mask) f(graph_from_mask(n, mask));
}

/// n = 8 is allowed only with a filter predicate.
template <class Pred, class F>
void for_each_graph_filtered(int n, Pred pred, F f) {
    if (n < 0 || n > 8) throw std::invalid_argument("for_each_graph_filtered: profile is n <= 8");
    const int pairs = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t{1} << pairs;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph g = graph_from_mask(n, mask);
        if (pred(g)) f(g);
    }
}

/// Brute-force isomorphism with a degree-sequence prefilter; profile n <= 8.
template <std::size_t W>
bool is_isomorphic(const BasicGraph<W>& g1, const BasicGraph<W>& g2) {
    if (g1.order() != g2.order()) return false;
    const int n = g1.order();
    if (n > 8) throw std::invalid_argument("is_isomorphic: brute-force profile is n <= 8");
    if (g1.edge_count() != g2.edge_count()) return false;
    std::vector<int> d1, d2;
    for (int v = 0; v < n; ++v) {
        d1.push_back(g1.degree(v));
        d2.push_back(g2.degree(v));
    }
    auto s1 = d1, s2 = d2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return false;

    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int c = 0; c < n; ++c) {
            if (used[static_cast<std::size_t>(c)] || d1[static_cast<std::size_t>(v)] != d2[static_cast<std::size_t>(c)]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (g1.has_edge(u, v) != g2.has_edge(map[static_cast<std::size_t>(u)], c)) ok = false;
            if (!ok) continue;
            map[static_cast<std::size_t>(v)] = c;
            used[static_cast<std::size_t>(c)] = true;
            if (self(self, v + 1)) return true;
            used[static_cast<std::size_t>(c)] = false;
            map[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

struct SuiteParams {
    int k = 2;
    double tol = 1e-8;      // violations must exceed this to count as failures
    double eig_tol = 1e-10; // eigensolver tolerance
    std::uint64_t seed = 1;
    int jobs = 1;
    int samples = 100;
};

struct SuiteFailure {
    std::string instance;
    std::string details;
};

struct VerificationReport {
    std::string suite;
    std::string instance_format = "graph6";
    int n_max = 0;
    SuiteParams params;
    long long instances = 0;
    std::vector<SuiteFailure> failures;
    bool has_extremal = false;
    std::string extremal_instance;
    double extremal_slack = 0.0;
    std::vector<std::pair<std::string, double>> statistics;
    double runtime_seconds = 0.0;
};

namespace detail {

struct SuiteAccumulator {
    long long instances = 0;
    std::vector<SuiteFailure> failures;
    bool has_extremal = false;
    std::string extremal_instance;
    double extremal_slack = 0.0;

    void fail(std::string inst, std::string details) {
        failures.push_back({std::move(inst), std::move(details)});
    }
    void slack(const std::string& inst, double s) {
        if (!has_extremal || s < extremal_slack) {
            has_extremal = true;
            extremal_slack = s;
            extremal_instance = inst;
        }
    }
    void merge(const SuiteAccumulator& o) {
        instances += o.instances;
        failures.insert(failures.end(), o.failures.begin(), o.failures.end());
        if (o.has_extremal) slack(o.extremal_instance, o.extremal_slack);
    }
};

/// Runs eval over every labeled graph on exactly n vertices, splitting the
/// mask range across jobs. Reports merge associatively and failures are
/// normalized by instance sort, so the result is independent of jobs.
template <class Eval>
void scan_masks(int n, int jobs, Eval eval, SuiteAccumulator& acc) {
    const int pairs = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t{1} << pairs;
    jobs = std::max(1, jobs);
    if (jobs == 1 || total < 1024) {
        for (std::uint64_t mask = 0; mask < total; ++mask) eval(graph_from_mask(n, mask), acc);
        return;
    }
    std::vector<SuiteAccumulator> parts(static_cast<std::size_t>(jobs));
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) {
        std::uint64_t lo = total / static_cast<std::uint64_t>(jobs) * static_cast<std::uint64_t>(j);
        std::uint64_t hi = j + 1 == jobs ? total : total / static_cast<std::uint64_t>(jobs) * static_cast<std::uint64_t>(j + 1);
        threads.emplace_back([&, lo, hi, j] {
            for (std::uint64_t mask = lo; mask < hi; ++mask) eval(graph_from_mask(n, mask), parts[static_cast<std::size_t>(j)]);
        });
    }
    for (auto& t : threads) t.join();
    for (const auto& p : parts) acc.merge(p);
}

} // namespace detail

inline std::vector<std::string> suite_names() {
    return {"q-turan", "counting", "degree-power", "eq6", "hofmeister", "lemma-min", "lemma-sdf", "shadow"};
}

/// Streams instances through one inequality of the paper and records
/// failures plus the minimum-slack instance. Strict inequalities count as
/// failures only beyond params.tol (1e-9 for the q-turan equality analysis).
inline VerificationReport run_suite(const std::string& name, int n_max, const SuiteParams& params) {
    VerificationReport rep;
    rep.suite = name;
    rep.n_max = n_max;
    rep.params = params;
    auto t0 = std::chrono::steady_clock::now();
    detail::SuiteAccumulator acc;
    const int k = params.k;

    if (name == "q-turan") {
        if (k < 2) throw std::invalid_argument("q-turan: k >= 2 required");
        for (int n = 1; n <= n_max; ++n) {
            const Graph tg = turan<1>(n, k).graph;
            const double ref = q_radius(tg, params.eig_tol).value;
            auto eval = [&, n](const Graph& g, detail::SuiteAccumulator& a) {
                a.instances++;
                if (count_cliques(g, k + 1) > 0) return;
                const double v = q_radius(g, params.eig_tol).value;
                if (v > ref + 1e-9) {
                    a.fail(write_graph6(g), "q=" + std::to_string(v) + " exceeds q(T_{n,k})=" + std::to_string(ref));
                    return;
                }
                if (ref - v <= 1e-9) {
                    if (!is_isomorphic(g, tg))
                        a.fail(write_graph6(g), "q matches q(T_{n,k}) but graph is not T_{n,k}");
                    return;
                }
                a.slack(write_graph6(g), ref - v);
            };
            detail::scan_masks(n, params.jobs, eval, acc);
        }
    } else if (name == "counting") {
        if (k < 2) throw std::invalid_argument("counting: k >= 2 required");
        for (int n = 1; n <= n_max; ++n) {
            auto eval = [&, n](const Graph& g, detail::SuiteAccumulator& a) {
                a.instances++;
                const double lam = lambda_radius(g, params.eig_tol).value;
                const double coeff = lam / n - 1.0 + 1.0 / k;
                if (coeff <= 0) return;
                const double bound = coeff * (static_cast<double>(k) * (k - 1) / (k + 1)) *
                                     std::pow(static_cast<double>(n) / k, k + 1);
                const double cnt = static_cast<double>(count_cliques(g, k + 1));
                if (cnt < bound - params.tol)
                    a.fail(write_graph6(g), "clique count " + std::to_string(cnt) + " below bound " + std::to_string(bound));
                else
                    a.slack(write_graph6(g), cnt - bound);
            };
            detail::scan_masks(n, params.jobs, eval, acc);
        }
    } else if (name == "degree-power") {
        if (k < 2) throw std::invalid_argument("degree-power: k >= 2 required");
        for (int n = 1; n <= n_max; ++n) {
            auto eval = [&, n](const Graph& g, detail::SuiteAccumulator& a) {
                a.instances++;
                if (count_cliques(g, k + 1) > 0) return;
                const long long sq = degree_square_sum(g);
                const long long m = g.edge_count();
                // k * sum d^2 <= 2 (k-1) m n, exact integers
                if (k * sq > 2 * (k - 1) * m * n)
                    a.fail(write_graph6(g), "degree power " + std::to_string(sq) + " exceeds 2(1-1/k)mn");
                else
                    a.slack(write_graph6(g), 2.0 * (1.0 - 1.0 / k) * static_cast<double>(m) * n - static_cast<double>(sq));
            };
            detail::scan_masks(n, params.jobs, eval, acc);
        }
    } else if (name == "eq6") {
        for (int n = 1; n <= n_max; ++n) {
            auto eval = [&, n](const Graph& g, detail::SuiteAccumulator& a) {
                a.instances++;
                const long long m = g.edge_count();
                if (m < 1) return;
                const double q = q_radius(g, params.eig_tol).value;
                const double bound = static_cast<double>(degree_square_sum(g)) / static_cast<double>(m);
                if (q < bound - params.tol)
                    a.fail(write_graph6(g), "q=" + std::to_string(q) + " below degree-power bound " + std::to_string(bound));
                else
                    a.slack(write_graph6(g), q - bound);
            };
            detail::scan_masks(n, params.jobs, eval, acc);
        }
    } else if (name == "hofmeister") {
        for (int n = 1; n <= n_max; ++n) {
            auto eval = [&, n](const Graph& g, detail::SuiteAccumulator& a) {
                a.instances++;
                const double lam = lambda_radius(g, params.eig_tol).value;
                const double bound = static_cast<double>(degree_square_sum(g)) / n;
                if (lam * lam < bound - params.tol)
                    a.fail(write_graph6(g), "lambda^2 below (1/n) sum d^2");
                else
                    a.slack(write_graph6(g), lam * lam - bound);
            };
            detail::scan_masks(n, params.jobs, eval, acc);
        }
    } else if (name == "lemma-min") {
        for (int n = 1; n <= n_max; ++n) {
            auto eval = [&](const Graph& g, detail::SuiteAccumulator& a) {
                if (g.components().size() != 1) return;
                a.instances++;
                auto chk = check_lemma_min(g, params.eig_tol);
                if (!chk.holds)
                    a.fail(write_graph6(g), "lhs=" + std::to_string(chk.lhs) + " rhs=" + std::to_string(chk.rhs));
                else
                    a.slack(write_graph6(g), chk.rhs - chk.lhs);
            };
            detail::scan_masks(n, params.jobs, eval, acc);
        }
    } else if (name == "lemma-sdf") {
        for (int n = 3; n <= n_max; ++n) {
            auto eval = [&](const Graph& g, detail::SuiteAccumulator& a) {
                if (g.components().size() != 1) return;
                a.instances++;
                auto chk = check_lemma_sdf(g, params.eig_tol);
                if (!chk.holds)
                    a.fail(write_graph6(g), "lhs=" + std::to_string(chk.lhs) + " rhs=" + std::to_string(chk.rhs));
                else
                    a.slack(write_graph6(g), chk.lhs - chk.rhs);
            };
            detail::scan_masks(n, params.jobs, eval, acc);
        }
    } else if (name == "shadow") {
        rep.instance_format = "hypergraph-text";
        auto check = [&](const LinearHypergraph& h, bool expect_equality) {
            acc.instances++;
            auto b = check_shadow_bound(h, params.tol);
            std::string inst = write_hypergraph(h);
            if (!b.holds)
                acc.fail(inst, "(r-1)q(H)=" + std::to_string(b.lhs) + " exceeds q(shadow)=" + std::to_string(b.rhs));
            else if (expect_equality && std::abs(b.lhs - b.rhs) > 1e-6)
                acc.fail(inst, "design equality violated: lhs=" + std::to_string(b.lhs) + " rhs=" + std::to_string(b.rhs));
            else
                acc.slack(inst, b.rhs - b.lhs);
        };
        for (int m : {2, 3, 5, 7})
            for (int r = 2; r <= m + 1; ++r) check(transversal_design(m, r), true);
        for (int i = 0; i < params.samples; ++i) {
            int n = 6 + i % 7; // orders 6..12
            check(random_linear(n, 3, n, SplitMix64::stream(params.seed, static_cast<std::uint64_t>(i)).next()), false);
        }
    } else {
        throw std::invalid_argument("unknown suite: " + name);
    }

    std::sort(acc.failures.begin(), acc.failures.end(),
              [](const SuiteFailure& a, const SuiteFailure& b) { return a.instance < b.instance; });
    rep.instances = acc.instances;
    rep.failures = std::move(acc.failures);
    rep.has_extremal = acc.has_extremal;
    rep.extremal_instance = acc.extremal_instance;
    rep.extremal_slack = acc.extremal_slack;
    rep.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

/// Search over graphs with q(G) > 2(1-1/k)n for the clique-counting
/// conjecture: reports the minimum of #K_{k+1} / (n/k)^(k-1) among
/// qualifying graphs, and flags any qualifying graph with zero copies as a
/// hard counterexample candidate. The unspecified O(n^{k-2}) term means the
/// ratio is a statistic, not a pass/fail verdict.
inline VerificationReport conjecture1_search(int n, int k, const SuiteParams& params) {
    if (k < 2) throw std::invalid_argument("conjecture1_search: k >= 2 required");
    if (n > 24) throw std::invalid_argument("conjecture1_search: profile is n <= 24");
    VerificationReport rep;
    rep.suite = "conjecture-9.2";
    rep.n_max = n;
    rep.params = params;
    auto t0 = std::chrono::steady_clock::now();
    detail::SuiteAccumulator acc;
    long long qualifying = 0;
    const double threshold = 2.0 * (1.0 - 1.0 / k) * n;
    const double denom = std::pow(static_cast<double>(n) / k, k - 1);

    auto eval = [&](const Graph& g, detail::SuiteAccumulator& a) {
        a.instances++;
        const double q = q_radius(g, params.eig_tol).value;
        if (q <= threshold + 1e-9) return;
        ++qualifying;
        const long long cnt = count_cliques(g, k + 1);
        if (cnt == 0) a.fail(write_graph6(g), "qualifying graph with zero K_{k+1} copies (hard candidate)");
        a.slack(write_graph6(g), static_cast<double>(cnt) / denom);
    };

    if (n <= 7) {
        detail::scan_masks(n, 1, eval, acc); // single-threaded: `qualifying` is shared
    } else {
        auto rng = SplitMix64::stream(params.seed, 0);
        for (int i = 0; i < params.samples; ++i) {
            double p = rng.next_unit();
            Graph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng.next_unit() < p) g.add_edge(u, v);
            eval(g, acc);
        }
    }

    rep.instances = acc.instances;
    rep.failures = std::move(acc.failures);
    rep.has_extremal = acc.has_extremal;
    rep.extremal_instance = acc.extremal_instance;
    rep.extremal_slack = acc.extremal_slack;
    rep.statistics.emplace_back("qualifying", static_cast<double>(qualifying));
    if (acc.has_extremal) rep.statistics.emplace_back("min_ratio", acc.extremal_slack);
    rep.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

/// One stability observation: does q reach 2(1-1/k-sigma)n while the edit
/// distance to T_{n,k} stays within eps*n^2? The freeness predicate comes
/// from the caller since the theorem quantifies over forbidden F. An
/// inconsistent observation at desk scale is a finite-n data point, not a
/// refutation.
struct StabilityProbe {
    double q_value = 0.0;
    double q_threshold = 0.0;
    bool free = false;
    bool hypothesis = false;
    long long edit_distance = 0;
    double eps_n2 = 0.0;
    bool conclusion = false;
    bool consistent = true;
};

template <std::size_t W, class Pred>
StabilityProbe stability_probe(const BasicGraph<W>& g, int k, const Rational& sigma, const Rational& eps,
                               Pred f_free, double eig_tol = 1e-10) {
    const int n = g.order();
    StabilityProbe out;
    out.q_value = q_radius(g, eig_tol).value;
    out.q_threshold = 2.0 * (1.0 - 1.0 / k - sigma.value()) * n;
    out.free = f_free(g);
    out.hypothesis = out.free && out.q_value >= out.q_threshold;
    out.edit_distance = edit_distance_to_turan(g, k);
    out.eps_n2 = eps.value() * n * n;
    out.conclusion = int_leq_scaled(out.edit_distance, eps, static_cast<std::int64_t>(n) * n);
    out.consistent = !(out.hypothesis && !out.conclusion);
    return out;
}

} // namespace slq
