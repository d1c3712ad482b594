#pragma once

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "slq/graph.hpp"
#include "slq/rational.hpp"
#include "slq/spectral.hpp"

namespace slq {

/// Parameters of the Perron-vector reduction loops. gamma/alpha/beta/slack
/// are exact rationals so the minimum-degree threshold comparison
/// delta <= (gamma-alpha)*order is decided in integers.
struct ReductionParams {
    Rational gamma;
    Rational alpha;
    Rational beta;
    Rational slack{0};
    double tol = 1e-10;
};

enum class ReductionOutcome { MinDegreeExit, BetaCapExit, Exhausted, SolverFailure };

inline std::string to_string(ReductionOutcome o) {
    switch (o) {
        case ReductionOutcome::MinDegreeExit: return "min-degree-exit";
        case ReductionOutcome::BetaCapExit: return "beta-cap-exit";
        case ReductionOutcome::Exhausted: return "exhausted";
        case ReductionOutcome::SolverFailure: return "solver-failure";
    }
    return "?";
}

/// One deletion: the removed vertex under its original id, its Perron
/// coordinate, and q / minimum degree / order of the graph it was deleted
/// from.
struct ReductionStep {
    int vertex;
    double min_coordinate;
    double q;
    int delta;
    int order;
};

/// Numeric record of the theorem conclusions for the terminal graph H.
/// These are reported, never asserted: the theorems promise them only for
/// sufficiently large n.
struct ReductionCertificates {
    bool q_growth = false;      // q(H) > 2*gamma*|H|
    bool min_degree = false;    // delta(H) > (gamma-alpha)*|H|, exact integers
    bool size = false;          // |H| > ceil(c*n), c = 6^(-3/(alpha*beta))
    bool case_i = false;        // algorithm 2 case (i): q(H) > 2*gamma*(1+alpha*beta/8)*|H|
};

template <std::size_t W>
struct BasicReductionTrace {
    int algorithm = 1;
    ReductionParams params;
    std::vector<ReductionStep> steps;
    BasicGraph<W> final_graph;
    double final_q = 0.0;
    int final_delta = 0;
    ReductionOutcome outcome = ReductionOutcome::MinDegreeExit;
    ReductionCertificates certified;
    bool solver_failed = false;
};

using ReductionTrace = BasicReductionTrace<1>;

namespace detail {

inline void validate_params(int algorithm, const ReductionParams& p) {
    const Rational zero{0};
    bool ok = p.alpha > zero && p.alpha <= Rational(2, 3) && p.alpha < p.gamma && p.beta > zero &&
              p.slack >= zero && p.gamma < Rational(1);
    if (algorithm == 1)
        ok = ok && p.beta < Rational(1, 2) && Rational(1, 2) + p.beta <= p.gamma;
    else if (algorithm == 2)
        ok = ok && p.beta < Rational(1) && p.gamma >= Rational(31, 48);
    else
        ok = false;
    if (!ok) throw std::invalid_argument("reduction: parameter profile violated for algorithm " + std::to_string(algorithm));
    if (!(p.tol > 0)) throw std::invalid_argument("reduction: tol must be positive");
}

template <std::size_t W>
BasicReductionTrace<W> run_reduction(const BasicGraph<W>& g, const ReductionParams& p, int algorithm) {
    validate_params(algorithm, p);
    BasicReductionTrace<W> trace;
    trace.algorithm = algorithm;
    trace.params = p;

    const int n0 = g.order();
    const Rational threshold = p.gamma - p.alpha;
    const long long beta_cap = (p.beta.num * static_cast<long long>(n0)) / p.beta.den;

    BasicGraph<W> cur = g;
    std::vector<int> original(static_cast<std::size_t>(n0));
    std::iota(original.begin(), original.end(), 0);

    while (true) {
        const int nn = cur.order();
        if (nn == 0) {
            trace.outcome = ReductionOutcome::Exhausted;
            break;
        }
        const int delta = cur.min_degree();
        if (!int_leq_scaled(delta, threshold, nn)) {
            trace.outcome = ReductionOutcome::MinDegreeExit;
            break;
        }
        if (algorithm == 2 && static_cast<long long>(trace.steps.size()) >= beta_cap) {
            trace.outcome = ReductionOutcome::BetaCapExit;
            break;
        }
        auto res = q_radius(cur, p.tol);
        if (!res.converged) {
            trace.outcome = ReductionOutcome::SolverFailure;
            trace.solver_failed = true;
            break;
        }
        const int u = perron_min_vertex(res);
        trace.steps.push_back({original[static_cast<std::size_t>(u)],
                               res.eigenvector[static_cast<std::size_t>(u)], res.value, delta, nn});
        cur = delete_vertex(cur, u);
        original.erase(original.begin() + u);
    }

    trace.final_graph = cur;
    const int h = cur.order();
    trace.final_delta = h > 0 ? cur.min_degree() : 0;
    if (h > 0) {
        auto res = q_radius(cur, p.tol);
        trace.final_q = res.value;
        if (!res.converged) trace.solver_failed = true;
        const double gamma = p.gamma.value();
        const double ab = p.alpha.value() * p.beta.value();
        trace.certified.q_growth = trace.final_q > 2.0 * gamma * h;
        trace.certified.min_degree = !int_leq_scaled(trace.final_delta, threshold, h);
        const double c = std::pow(6.0, -3.0 / ab);
        trace.certified.size = h > static_cast<long long>(std::ceil(c * n0));
        trace.certified.case_i = trace.final_q > 2.0 * gamma * (1.0 + ab / 8.0) * h;
    }
    return trace;
}

} // namespace detail

/// Algorithm driven by the loop guard delta(G_i) <= (gamma-alpha)|G_i|:
/// repeatedly deletes the minimum-Perron-coordinate vertex of Q.
template <std::size_t W>
BasicReductionTrace<W> reduce_algorithm1(const BasicGraph<W>& g, const ReductionParams& p) {
    return detail::run_reduction(g, p, 1);
}

/// Same deletion rule, hard-capped at floor(beta*n) deletions. The outcome
/// separates the two terminal cases of the two-case theorem.
template <std::size_t W>
BasicReductionTrace<W> reduce_algorithm2(const BasicGraph<W>& g, const ReductionParams& p) {
    return detail::run_reduction(g, p, 2);
}

struct LemmaCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
};

namespace detail {

/// Squared minimum coordinate, renormalized by the vector's squared norm so
/// symmetric instances evaluate exactly.
inline double min_coordinate_square(const SpectralResult& res, int u) {
    double xx = 0.0;
    for (double v : res.eigenvector) xx += v * v;
    double xu = res.eigenvector[static_cast<std::size_t>(u)];
    return (xu * xu) / xx;
}

} // namespace detail

/// x_u^2 (q^2 - 2 q delta + n delta) <= delta for the minimum Perron
/// coordinate x_u. Tolerance 1e-8 on the comparison.
template <std::size_t W>
LemmaCheck check_lemma_min(const BasicGraph<W>& g, double tol = 1e-10) {
    if (g.order() < 1) throw std::invalid_argument("check_lemma_min: empty graph");
    auto res = q_radius(g, tol);
    if (!res.converged) throw std::runtime_error("check_lemma_min: eigensolver did not converge");
    const double q = res.value;
    const double delta = g.min_degree();
    const double n = g.order();
    const double xu2 = detail::min_coordinate_square(res, perron_min_vertex(res));
    LemmaCheck out;
    out.lhs = xu2 * (q * q - 2.0 * q * delta + n * delta);
    out.rhs = delta;
    out.holds = out.lhs <= out.rhs + 1e-8;
    return out;
}

/// Vertex-deletion bound: q(G-u)/(n-2) against the Rayleigh-based lower
/// bound evaluated at the minimum Perron coordinate.
template <std::size_t W>
LemmaCheck check_lemma_sdf(const BasicGraph<W>& g, double tol = 1e-10) {
    const int n = g.order();
    if (n < 3) throw std::invalid_argument("check_lemma_sdf: n >= 3 required");
    auto res = q_radius(g, tol);
    if (!res.converged) throw std::runtime_error("check_lemma_sdf: eigensolver did not converge");
    const int u = perron_min_vertex(res);
    const double xu2 = detail::min_coordinate_square(res, u);
    if (1.0 - xu2 <= 1e-12) throw std::runtime_error("check_lemma_sdf: degenerate minimum coordinate");
    auto res_del = q_radius(delete_vertex(g, u), tol);
    if (!res_del.converged) throw std::runtime_error("check_lemma_sdf: eigensolver did not converge");
    const double ratio = (1.0 - n * xu2) / ((n - 2.0) * (1.0 - xu2));
    LemmaCheck out;
    out.lhs = res_del.value / (n - 2.0);
    out.rhs = res.value / (n - 1.0) * (1.0 + ratio) - ratio;
    out.holds = out.lhs >= out.rhs - 1e-8;
    return out;
}

} // namespace slq
