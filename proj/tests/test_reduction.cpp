#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "oracle.hpp"
#include "slq/families.hpp"
#include "slq/reduction.hpp"
#include "slq/verify.hpp"

using namespace slq;

namespace {

ReductionParams params1() {
    return {Rational(7, 10), Rational(1, 10), Rational(1, 20), Rational(0), 1e-10};
}

ReductionParams params2() {
    return {Rational(31, 48), Rational(1, 10), Rational(1, 6), Rational(0), 1e-10};
}

void compare_with_oracle(const Graph& g, const ReductionParams& p, int algorithm) {
    auto trace = algorithm == 1 ? reduce_algorithm1(g, p) : reduce_algorithm2(g, p);
    auto ref = oracle::reduction_steps(g, p.gamma.value(), p.alpha.value(), algorithm, p.beta.value());
    REQUIRE(trace.steps.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
        CHECK(trace.steps[i].vertex == ref[i].vertex);
        CHECK(trace.steps[i].delta == ref[i].delta);
        CHECK(trace.steps[i].order == ref[i].order);
        CHECK(std::abs(trace.steps[i].q - ref[i].q) < 1e-8);
    }
}

} // namespace

TEST_CASE("parameter profile validation") {
    CHECK_THROWS_AS(reduce_algorithm1(complete_graph<1>(4),
                                      ReductionParams{Rational(7, 10), Rational(3, 4), Rational(1, 20)}),
                    std::invalid_argument); // alpha > 2/3
    CHECK_THROWS_AS(reduce_algorithm1(complete_graph<1>(4),
                                      ReductionParams{Rational(7, 10), Rational(1, 10), Rational(1, 2)}),
                    std::invalid_argument); // beta >= 1/2
    CHECK_THROWS_AS(reduce_algorithm1(complete_graph<1>(4),
                                      ReductionParams{Rational(1, 2), Rational(1, 10), Rational(1, 20)}),
                    std::invalid_argument); // gamma < 1/2 + beta
    CHECK_THROWS_AS(reduce_algorithm2(complete_graph<1>(4),
                                      ReductionParams{Rational(3, 5), Rational(1, 10), Rational(1, 6)}),
                    std::invalid_argument); // gamma < 31/48
    CHECK_THROWS_AS(reduce_algorithm1(complete_graph<1>(4),
                                      ReductionParams{Rational(7, 10), Rational(7, 10), Rational(1, 20)}),
                    std::invalid_argument); // alpha == gamma
    CHECK_THROWS_AS(reduce_algorithm2(complete_graph<1>(4),
                                      ReductionParams{Rational(31, 48), Rational(1, 10), Rational(1, 6),
                                                      Rational(-1)}),
                    std::invalid_argument); // s < 0
}

TEST_CASE("algorithm 1 terminal cases") {
    SECTION("K_6: loop never entered") {
        auto trace = reduce_algorithm1(complete_graph<1>(6), params1());
        CHECK(trace.steps.empty());
        CHECK(trace.outcome == ReductionOutcome::MinDegreeExit);
        CHECK(trace.final_graph == complete_graph<1>(6));
        CHECK(trace.certified.min_degree);
        CHECK(trace.certified.q_growth); // q = 10 > 2*0.7*6 = 8.4
    }
    SECTION("star K_{1,5}: leaves peel off until K_2") {
        ReductionParams p{Rational(11, 20), Rational(1, 5), Rational(1, 20), Rational(0), 1e-10};
        auto star = split_graph<1>(6, 1);
        auto trace = reduce_algorithm1(star, p);
        CHECK(trace.outcome == ReductionOutcome::MinDegreeExit);
        CHECK(trace.steps.size() == 4);
        CHECK(trace.final_graph.order() == 2);
        CHECK(trace.final_graph.edge_count() == 1);
        // deleted vertices are leaves in ascending original ids (center is 0)
        CHECK(trace.steps[0].vertex == 1);
        CHECK(trace.steps[1].vertex == 2);
        CHECK(trace.steps[2].vertex == 3);
        CHECK(trace.certified.min_degree); // delta(K_2) = 1 > 0.35 * 2
        compare_with_oracle(star, p, 1);
    }
    SECTION("T_{9,3}: already dense enough") {
        ReductionParams p{Rational(2, 3), Rational(1, 10), Rational(1, 6), Rational(0), 1e-10};
        auto trace = reduce_algorithm1(turan<1>(9, 3).graph, p);
        CHECK(trace.steps.empty());
        CHECK(trace.outcome == ReductionOutcome::MinDegreeExit);
    }
    SECTION("empty-ish graph exhausts") {
        auto trace = reduce_algorithm1(empty_graph<1>(5), params1());
        CHECK(trace.outcome == ReductionOutcome::Exhausted);
        CHECK(trace.steps.size() == 5);
        CHECK(trace.final_graph.order() == 0);
    }
}

TEST_CASE("algorithm 2 terminal cases") {
    SECTION("K_6: case (ii) holds with no deletions") {
        ReductionParams p{Rational(31, 48), Rational(1, 10), Rational(1, 5), Rational(0), 1e-10};
        auto trace = reduce_algorithm2(complete_graph<1>(6), p);
        CHECK(trace.steps.empty());
        CHECK(trace.outcome == ReductionOutcome::MinDegreeExit);
        CHECK(trace.certified.q_growth); // 10 > 2*(31/48)*6 = 7.75
        CHECK(trace.certified.min_degree);
    }
    SECTION("beta cap arithmetic: at most floor(beta*n) deletions") {
        ReductionParams p{Rational(31, 48), Rational(1, 10), Rational(1, 10), Rational(0), 1e-10};
        auto trace = reduce_algorithm2(split_graph<1>(10, 1), p);
        CHECK(trace.steps.size() <= 1);
        CHECK(trace.outcome == ReductionOutcome::BetaCapExit);
    }
    SECTION("star K_{1,9}: three deletions then the cap") {
        ReductionParams p{Rational(31, 48), Rational(3, 10), Rational(3, 10), Rational(0), 1e-10};
        auto star = split_graph<1>(10, 1);
        auto trace = reduce_algorithm2(star, p);
        CHECK(trace.outcome == ReductionOutcome::BetaCapExit);
        CHECK(trace.steps.size() == 3);
        compare_with_oracle(star, p, 2);
    }
}

TEST_CASE("trace consistency: recomputing q at every step") {
    auto g = turan_plus_edge<1>(10, 2);
    auto p = params1();
    auto trace = reduce_algorithm1(g, p);
    Graph cur = g;
    std::vector<int> ids;
    for (int v = 0; v < g.order(); ++v) ids.push_back(v);
    for (const auto& step : trace.steps) {
        CHECK(cur.order() == step.order);
        CHECK(cur.min_degree() == step.delta);
        auto res = q_radius(cur, p.tol);
        CHECK(std::abs(res.value - step.q) <= p.tol);
        auto it = std::find(ids.begin(), ids.end(), step.vertex);
        REQUIRE(it != ids.end());
        int local = static_cast<int>(it - ids.begin());
        CHECK(perron_min_vertex(res) == local);
        cur = delete_vertex(cur, local);
        ids.erase(it);
    }
    CHECK(cur == trace.final_graph);
}

TEST_CASE("per-step growth bound where the hypotheses hold") {
    // with s = 0 the induction needs q(G_i) > 2*gamma*order and order >= 3
    auto check_growth = [](const Graph& g, const ReductionParams& p, int alg) {
        auto trace = alg == 1 ? reduce_algorithm1(g, p) : reduce_algorithm2(g, p);
        double ab3 = 1.0 - p.alpha.value() * p.beta.value() / 3.0;
        for (std::size_t i = 0; i < trace.steps.size(); ++i) {
            const auto& s = trace.steps[i];
            if (s.order < 3) continue;
            if (!(s.q > 2.0 * p.gamma.value() * s.order)) continue;
            double next_q = i + 1 < trace.steps.size() ? trace.steps[i + 1].q : trace.final_q;
            if (i + 1 == trace.steps.size() && trace.final_graph.order() == 0) continue;
            CHECK(next_q >= s.q * (1.0 - ab3 / (s.order - 1)) * (1.0 - 1e-6));
        }
    };
    check_growth(turan_plus_edge<1>(12, 2), params1(), 1);
    check_growth(split_graph<1>(12, 4), params1(), 1);
    check_growth(split_graph<1>(12, 4), params2(), 2);
    for (std::uint64_t s = 0; s < 4; ++s) {
        auto rng = SplitMix64::stream(s, 5);
        Graph g(10);
        for (int u = 0; u < 10; ++u)
            for (int v = u + 1; v < 10; ++v)
                if (rng.bernoulli(Rational(4, 5))) g.add_edge(u, v);
        check_growth(g, params1(), 1);
        check_growth(g, params2(), 2);
    }
}

TEST_CASE("disconnected and isolated-vertex handling") {
    // isolated vertices have coordinate 0 and disappear first
    Graph g(7);
    for (auto [u, v] : {std::pair{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {4, 6}, {5, 6}, {3, 5}})
        g.add_edge(u, v);
    // vertex 0 isolated
    auto trace = reduce_algorithm1(g, params1());
    REQUIRE_FALSE(trace.steps.empty());
    CHECK(trace.steps[0].vertex == 0);
    compare_with_oracle(g, params1(), 1);
}

TEST_CASE("lemma 3.1 check") {
    SECTION("K_2 equality, slack exactly zero") {
        auto chk = check_lemma_min(complete_graph<1>(2));
        CHECK(chk.lhs == 1.0);
        CHECK(chk.rhs == 1.0);
        CHECK(chk.rhs - chk.lhs == 0.0);
        CHECK(chk.holds);
    }
    SECTION("complete graphs") {
        for (int n = 2; n <= 7; ++n) CHECK(check_lemma_min(complete_graph<1>(n)).holds);
    }
    SECTION("star") {
        CHECK(check_lemma_min(split_graph<1>(5, 1)).holds);
    }
    SECTION("exhaustive connected, n <= 5") {
        for (int n = 1; n <= 5; ++n)
            for_each_graph(n, [&](const Graph& g) {
                if (g.components().size() != 1) return;
                CHECK(check_lemma_min(g).holds);
            });
    }
}

TEST_CASE("lemma 3.2 check") {
    CHECK_THROWS_AS(check_lemma_sdf(complete_graph<1>(2)), std::invalid_argument);
    SECTION("K_4 evaluates to equality") {
        auto chk = check_lemma_sdf(complete_graph<1>(4));
        CHECK(chk.holds);
        CHECK(std::abs(chk.lhs - 2.0) < 1e-9); // q(K_3)/2
        CHECK(std::abs(chk.rhs - 2.0) < 1e-9); // x_u^2 = 1/4 makes the ratio vanish
    }
    SECTION("P_3 and C_4") {
        CHECK(check_lemma_sdf(path_graph<1>(3)).holds);
        auto c4 = check_lemma_sdf(cycle_graph<1>(4));
        CHECK(c4.holds);
        CHECK(std::abs(c4.lhs - 1.5) < 1e-9); // q(P_3)/2
    }
    SECTION("exhaustive connected, 3 <= n <= 5") {
        for (int n = 3; n <= 5; ++n)
            for_each_graph(n, [&](const Graph& g) {
                if (g.components().size() != 1) return;
                CHECK(check_lemma_sdf(g).holds);
            });
    }
}
