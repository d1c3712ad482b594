#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "slq/families.hpp"
#include "slq/hypergraph.hpp"
#include "slq/spectral.hpp"
#include "slq/verify.hpp"

using namespace slq;

namespace {

LinearHypergraph fano() {
    return LinearHypergraph(7, 3,
                            {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

/// Coarse grid over the nonnegative 3-norm sphere for a 3-vertex host:
/// independent check that the single-edge objective tops out at 2.
double grid_max_single_3edge() {
    LinearHypergraph h(3, 3, {{0, 1, 2}});
    double best = 0.0;
    const int steps = 60;
    for (int i = 0; i <= steps; ++i)
        for (int j = 0; j <= steps; ++j) {
            double a = static_cast<double>(i) / steps;
            double b = static_cast<double>(j) / steps;
            double rest = 1.0 - a * a * a - b * b * b;
            if (rest < 0) continue;
            double c = std::cbrt(rest);
            // objective: each vertex has degree 1
            double obj = a * a * a + b * b * b + c * c * c + 3.0 * a * b * c;
            best = std::max(best, obj);
        }
    return best;
}

} // namespace

TEST_CASE("linearity") {
    CHECK(is_linear(Hypergraph{5, 3, {{0, 1, 2}}}));
    CHECK_FALSE(is_linear(Hypergraph{5, 3, {{0, 1, 2}, {0, 1, 3}}}));
    CHECK(is_linear(fano().raw()));
    CHECK_THROWS_AS(validate_uniform(Hypergraph{3, 3, {{0, 1}}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_uniform(Hypergraph{3, 3, {{0, 1, 1}}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_uniform(Hypergraph{3, 3, {{0, 1, 5}}}), std::invalid_argument);
    CHECK_THROWS_AS(LinearHypergraph(4, 3, {{0, 1, 2}, {0, 1, 3}}), std::invalid_argument);
}

TEST_CASE("shadow") {
    LinearHypergraph single(3, 3, {{0, 1, 2}});
    auto g = shadow_graph(single);
    CHECK(g.edge_count() == 3); // K_3

    auto same = shadow(fano(), 3);
    CHECK(same.edges == fano().edges()); // s = r is the identity up to sorting

    auto fano2 = shadow_graph(fano());
    CHECK(fano2.edge_count() == 21); // every pair lies on a line: K_7
    CHECK(is_isomorphic(fano2, complete_graph<1>(7)));

    CHECK_THROWS_AS(shadow(single, 1), std::invalid_argument);
    CHECK_THROWS_AS(shadow(single, 4), std::invalid_argument);
}

TEST_CASE("q_hyper") {
    SECTION("single r-edge gives q = 2 at the uniform point") {
        for (int r = 2; r <= 5; ++r) {
            LinearHypergraph h(r, r, {[&] {
                std::vector<int> e;
                for (int i = 0; i < r; ++i) e.push_back(i);
                return e;
            }()});
            auto res = q_hyper(h);
            CHECK(res.converged);
            CHECK(std::abs(res.value - 2.0) < 1e-9);
            CHECK(res.monotone);
        }
        CHECK(grid_max_single_3edge() <= 2.0 + 1e-9);
        CHECK(grid_max_single_3edge() >= 2.0 - 1e-2);
    }
    SECTION("r = 2 recovers the matrix radius, exhaustive n <= 5") {
        for (int n = 1; n <= 5; ++n)
            for_each_graph(n, [&](const Graph& g) {
                Hypergraph h{n, 2, {}};
                for (auto [u, v] : g.edges()) h.edges.push_back({u, v});
                auto hres = q_hyper(LinearHypergraph(h), 1e-10, 1);
                CHECK(std::abs(hres.value - q_radius(g).value) < 1e-8);
            });
    }
    SECTION("regular designs attain q = 2d") {
        for (auto [m, r] : {std::pair{3, 3}, {5, 3}, {5, 4}}) {
            auto d = transversal_design(m, r);
            auto res = q_hyper(d);
            CHECK(res.converged);
            CHECK(std::abs(res.value - 2.0 * m) < 1e-6);
        }
    }
    SECTION("norm invariant") {
        auto res = q_hyper(fano());
        double s = 0.0;
        for (double v : res.x) {
            CHECK(v >= 0.0);
            s += v * v * v;
        }
        CHECK(std::abs(s - 1.0) <= 1e-12);
    }
}

TEST_CASE("expansion") {
    auto c3 = cycle_graph<1>(3);
    auto e2 = expansion(c3, 2);
    CHECK(e2.order() == 3);
    CHECK(e2.edge_count() == 3);

    auto single = expansion(complete_graph<1>(2), 4);
    CHECK(single.order() == 4);
    CHECK(single.edge_count() == 1);

    auto e3 = expansion(c3, 3);
    CHECK(e3.order() == 6);
    CHECK(e3.edge_count() == 3);
    CHECK(is_linear(e3.raw()));
    // distinct fresh vertices per edge
    CHECK(e3.degrees()[3] == 1);
    CHECK(e3.degrees()[4] == 1);
    CHECK(e3.degrees()[5] == 1);
}

TEST_CASE("contains_expansion") {
    auto c3 = cycle_graph<1>(3);
    SECTION("self containment") {
        auto h = expansion(c3, 3);
        auto w = contains_expansion(h, c3, 3);
        REQUIRE(w.has_value());
        CHECK(expansion_witness_valid(*w, h, c3));
    }
    SECTION("single edge cannot host a path expansion") {
        LinearHypergraph h(3, 3, {{0, 1, 2}});
        CHECK_FALSE(contains_expansion(h, path_graph<1>(3), 3).has_value());
    }
    SECTION("Fano hosts a triangle expansion") {
        auto w = contains_expansion(fano(), c3, 3);
        REQUIRE(w.has_value());
        CHECK(expansion_witness_valid(*w, fano(), c3));
    }
    SECTION("expansion vertices must be disjoint across edges") {
        // two triples sharing a non-image vertex cannot host two disjoint edges
        Graph two_k2(4);
        two_k2.add_edge(0, 1);
        two_k2.add_edge(2, 3);
        LinearHypergraph sharing(5, 3, {{0, 1, 4}, {2, 3, 4}});
        CHECK_FALSE(contains_expansion(sharing, two_k2, 3).has_value());
        LinearHypergraph disjoint(6, 3, {{0, 1, 4}, {2, 3, 5}});
        auto w = contains_expansion(disjoint, two_k2, 3);
        REQUIRE(w.has_value());
        CHECK(expansion_witness_valid(*w, disjoint, two_k2));
    }
    SECTION("images may not sit inside another edge's expansion slot") {
        // path a-b-c: the two host edges meet exactly at the image of b
        LinearHypergraph good(5, 3, {{0, 1, 2}, {2, 3, 4}});
        CHECK(contains_expansion(good, path_graph<1>(3), 3).has_value());
    }
    CHECK_THROWS_AS(contains_expansion(fano(), c3, 2), std::invalid_argument);
}

TEST_CASE("transversal designs") {
    SECTION("m=2, r=2: the four blocks of K_{2,2}") {
        auto d = transversal_design(2, 2);
        CHECK(d.order() == 4);
        CHECK(d.edge_count() == 4);
        for (int deg : d.degrees()) CHECK(deg == 2);
        CHECK(design_audit(d, 2, 2));
    }
    SECTION("m=3, r=3") {
        auto d = transversal_design(3, 3);
        CHECK(d.order() == 9);
        CHECK(d.edge_count() == 9);
        for (int deg : d.degrees()) CHECK(deg == 3);
        CHECK(design_audit(d, 3, 3));
    }
    SECTION("audit across the profile, including the slope-group case r = m+1") {
        for (int m : {2, 3, 5})
            for (int r = 2; r <= m + 1; ++r) {
                auto d = transversal_design(m, r);
                CHECK(design_audit(d, m, r));
                for (int deg : d.degrees()) CHECK(deg == m);
            }
    }
    CHECK_THROWS_AS(transversal_design(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(transversal_design(3, 5), std::invalid_argument);
}

TEST_CASE("shadow bound") {
    SECTION("single edge: equality at 2(r-1)") {
        for (int r = 2; r <= 5; ++r) {
            std::vector<int> e;
            for (int i = 0; i < r; ++i) e.push_back(i);
            LinearHypergraph h(r, r, {e});
            auto b = check_shadow_bound(h);
            CHECK(b.holds);
            CHECK(std::abs(b.lhs - 2.0 * (r - 1)) < 1e-8);
            CHECK(std::abs(b.rhs - 2.0 * (r - 1)) < 1e-8);
        }
    }
    SECTION("transversal design equality") {
        auto b = check_shadow_bound(transversal_design(3, 3));
        CHECK(b.holds);
        CHECK(std::abs(b.lhs - 12.0) < 1e-6);
        CHECK(std::abs(b.rhs - 12.0) < 1e-6);
    }
    SECTION("random linear 3-graphs") {
        for (std::uint64_t s = 0; s < 10; ++s) {
            auto h = random_linear(8 + static_cast<int>(s % 5), 3, 10, s);
            auto b = check_shadow_bound(h);
            CHECK(b.holds);
        }
    }
}

TEST_CASE("hypergraph text format") {
    auto d = transversal_design(3, 3);
    auto text = write_hypergraph(d);
    auto back = read_hypergraph(text);
    CHECK(back.n == 9);
    CHECK(back.r == 3);
    CHECK(back.edges == d.edges());
    CHECK_THROWS(read_hypergraph("3 3"));
    CHECK_THROWS(read_hypergraph("3 3 1\n0 1"));
}
