#include <catch2/catch_amalgamated.hpp>

#include "oracle.hpp"
#include "slq/construct.hpp"
#include "slq/families.hpp"
#include "slq/graph6.hpp"
#include "slq/jsonio.hpp"
#include "slq/subgraph.hpp"

using namespace slq;

TEST_CASE("find_ktt") {
    auto k33 = complete_multipartite<1>({3, 3}).graph;
    auto w = find_ktt(k33, 3);
    REQUIRE(w.has_value());
    CHECK(witness_valid(*w, k33));

    CHECK_FALSE(find_ktt(cycle_graph<1>(5), 2).has_value());
    CHECK(find_ktt(complete_graph<1>(4), 2).has_value());
    CHECK_THROWS_AS(find_ktt(complete_graph<1>(4), 0), std::invalid_argument);

    SECTION("restricted to a vertex subset") {
        auto g = complete_graph<1>(6);
        auto within = Graph::Row::below(3); // K_3 only: no K_{2,2}
        CHECK_FALSE(find_ktt(g, within, 2).has_value());
        CHECK(find_ktt(g, Graph::Row::below(4), 2).has_value());
    }

    SECTION("existence agrees with brute enumeration, n <= 5") {
        for (int n = 2; n <= 5; ++n)
            for (std::uint64_t s = 0; s < 8; ++s) {
                auto rng = SplitMix64::stream(s, 13);
                Graph g(n);
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v)
                        if (rng.bernoulli(Rational(1, 2))) g.add_edge(u, v);
                std::vector<int> all;
                for (int v = 0; v < n; ++v) all.push_back(v);
                for (int t = 1; t <= 2; ++t)
                    CHECK(find_ktt(g, t).has_value() == oracle::has_ktt(g, all, t));
            }
    }
}

TEST_CASE("example 2.4") {
    SECTION("p = 1/2, t = 6 leaves nothing to delete at n = 12") {
        auto rep = example_2_4(12, 2, Rational(1, 16), 42);
        CHECK(rep.t == 6);
        CHECK(rep.deletions == 0); // |U| = 6 cannot host K_{6,6}
        CHECK(rep.freeness_check.pass);
        CHECK(rep.graph.order() == 12);
    }
    SECTION("parameter domain") {
        CHECK_THROWS_AS(example_2_4(12, 2, Rational(1, 8), 1), std::invalid_argument);  // p = 1
        CHECK_THROWS_AS(example_2_4(12, 2, Rational(1, 4), 1), std::invalid_argument);  // p > 1
        CHECK_THROWS_AS(example_2_4(13, 2, Rational(1, 16), 1), std::invalid_argument); // k does not divide n
    }
    SECTION("pinned run passes and certification is reproducible from the graph") {
        auto rep = example_2_4(16, 2, Rational(1, 32), 1);
        REQUIRE(rep.pass);
        CHECK(rep.attempts <= 64);
        const auto& g = rep.graph;
        // freeness recomputed independently: no K_{k+1}[t] blowup at all (n <= 24)
        CHECK(max_blowup(g, 3).first < rep.t);
        std::vector<int> upart;
        for (int v = 0; v < 8; ++v) upart.push_back(v);
        CHECK_FALSE(oracle::has_ktt(g, upart, rep.t));
        // edge threshold: m > (1 - 1/k + eps) n^2 / 2 = 132
        CHECK(rep.edge_count == g.edge_count());
        CHECK(static_cast<double>(rep.edge_count) > (1.0 - 0.5 + 1.0 / 32) * 256.0 / 2.0);
        // only the designated part gained edges
        for (int u = 8; u < 16; ++u)
            for (int v = u + 1; v < 16; ++v) CHECK_FALSE(g.has_edge(u, v));
    }
    SECTION("determinism: identical seed gives byte-identical graph6 and json") {
        auto a = example_2_4(16, 2, Rational(1, 32), 7);
        auto b = example_2_4(16, 2, Rational(1, 32), 7);
        CHECK(write_graph6(a.graph) == write_graph6(b.graph));
        CHECK(to_json(a).dump() == to_json(b).dump());
        auto c = example_2_4(16, 2, Rational(1, 32), 8);
        CHECK(write_graph6(a.graph) != write_graph6(c.graph)); // different stream
    }
}

TEST_CASE("example 2.6") {
    SECTION("k = 2 boundary: no join partner") {
        auto rep = example_2_6(10, 2, 3);
        CHECK(rep.graph.order() == 10);
        // all edges live inside G' = the whole vertex set; nothing outside
        CHECK(rep.gprime_check.has_value());
        CHECK(rep.gprime_check->first == rep.edge_count);
    }
    SECTION("n = 12, k = 3: t exceeds |G'| so no deletions") {
        auto rep = example_2_6(12, 3, 5);
        CHECK(rep.t == 11); // ceil(2 log 8 / log 1.5)
        CHECK(rep.deletions == 0);
        CHECK(rep.gprime_check->second == 16);
    }
    SECTION("pinned full pipeline at n = 15, k = 3") {
        auto rep = example_2_6(15, 3, 1);
        REQUIRE(rep.pass);
        const auto& g = rep.graph;
        CHECK(g.order() == 15);
        // join structure: last 5 vertices form an independent set joined to G'
        for (int u = 10; u < 15; ++u) {
            for (int v = u + 1; v < 15; ++v) CHECK_FALSE(g.has_edge(u, v));
            for (int v = 0; v < 10; ++v) CHECK(g.has_edge(v, u));
        }
        CHECK(rep.gprime_check->first > rep.gprime_check->second);
        CHECK(2.0 * rep.edge_count > (1.0 - 1.0 / 3) * 225.0);
        CHECK(rep.q_value >= rep.q_bound_check.target);
    }
    SECTION("determinism") {
        auto a = example_2_6(15, 3, 9);
        auto b = example_2_6(15, 3, 9);
        CHECK(write_graph6(a.graph) == write_graph6(b.graph));
        CHECK(to_json(a).dump() == to_json(b).dump());
    }
    SECTION("parameter domain") {
        CHECK_THROWS_AS(example_2_6(14, 3, 1), std::invalid_argument); // k does not divide n
        CHECK_THROWS_AS(example_2_6(9, 3, 1), std::invalid_argument);  // n <= 3k
    }
}
