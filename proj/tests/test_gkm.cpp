#include "oracles.hpp"
#include "worked_example.hpp"

#include "qfv/gkm.hpp"

#include <doctest.h>

using namespace qfv;
using namespace qfv::testing;

TEST_CASE("polynomial parsing") {
    Polynomial x1 = Polynomial::variable(1);
    Polynomial x2 = Polynomial::variable(2);
    CHECK(Polynomial::parse("x1") == x1);
    CHECK(Polynomial::parse("0").is_zero());
    CHECK(Polynomial::parse("(x1 - x2)^2") == x1 * x1 - Polynomial(2) * x1 * x2 + x2 * x2);
    CHECK(Polynomial::parse("3/2*x1 + -x2") == Polynomial(Rational(3, 2)) * x1 - x2);
    CHECK(Polynomial::parse("2x1x2") == Polynomial(2) * x1 * x2);
    CHECK(Polynomial::parse("x1 / 2") == Polynomial(Rational(1, 2)) * x1);
    CHECK(Polynomial::parse("x3").max_variable() == 3);
    CHECK((x1 * x2 - x2 * x1).is_zero());
    CHECK(Polynomial::parse("x1^2 - 3/2*x1*x2 + 1").to_string() == "x1^2 - 3/2*x1*x2 + 1");
    CHECK(Polynomial::parse("-x2").to_string() == "-x2");
    CHECK_THROWS_AS(Polynomial::parse("x0"), InputError);
    CHECK_THROWS_AS(Polynomial::parse("x1 +"), InputError);
    CHECK_THROWS_AS(Polynomial::parse("(x1"), InputError);
    CHECK_THROWS_AS(Polynomial::parse("y"), InputError);
    CHECK_THROWS_AS(Polynomial::parse("x1 / x2"), InputError);
}

TEST_CASE("divisibility by root forms") {
    Polynomial f = Polynomial::parse("x1^3 - x2^3");
    CHECK(f.divisible_by_difference(1, 2));
    CHECK_FALSE(f.divisible_by_difference(1, 3));
    CHECK(Polynomial::parse("x1 - x2").substitute(1, 2).is_zero());
    CHECK(Polynomial::parse("x1*x3").substitute(3, 2) == Polynomial::parse("x1*x2"));
    CHECK_THROWS_AS(f.divisible_by_difference(2, 2), InputError);
}

TEST_CASE("projective line") {
    GkmGraph g = build_gkm_graph(units(2), ones(2));
    CHECK(g.t == 2);
    REQUIRE(g.nodes.size() == 2);
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0].a == 0);
    CHECK(g.edges[0].b == 1);
    CHECK(std::min(g.edges[0].p, g.edges[0].q) == 1);
    CHECK(std::max(g.edges[0].p, g.edges[0].q) == 2);

    auto swaps = admissible_swaps(g.nodes[0]);
    REQUIRE(swaps.size() == 1);
    CHECK(swaps[0].target == g.nodes[1]);
    CHECK(swaps[0].p == 1);
    CHECK(swaps[0].q == 2);
    CHECK(admissible_swaps(g.nodes[1]).size() == 1);

    CHECK(membership_check(g, {Polynomial(7), Polynomial(7)}).member);
    CHECK(membership_check(g, {Polynomial::parse("x1"), Polynomial::parse("x2")}).member);
    MembershipReport bad = membership_check(g, {Polynomial::parse("x1"), Polynomial(0)});
    CHECK_FALSE(bad.member);
    CHECK(bad.failing_edges == std::vector<std::size_t>{0});
    CHECK_THROWS_AS(membership_check(g, {Polynomial(1)}), InputError);
    CHECK_THROWS_AS(membership_check(g, {Polynomial::parse("x3"), Polynomial(0)}), InputError);

    std::string dot = export_dot(g);
    CHECK(dot.find("digraph") == 0);
    CHECK(dot.find("label=\"x1-x2\"") != std::string::npos);
    CHECK(dot.find("[[2],[1]]") != std::string::npos);
}

TEST_CASE("single rows and the empty shape") {
    GkmGraph one = build_gkm_graph(Shape(3, {Row{Vertex(3), 3}}), DimFiltration::parse(3, "3,2,1"));
    CHECK(one.nodes.size() == 1);
    CHECK(one.edges.empty());
    CHECK(admissible_swaps(one.nodes[0]).empty());
    GkmGraph empty = build_gkm_graph(Shape(2, {}), DimFiltration(2, {}));
    CHECK(empty.nodes.size() == 1);
    CHECK(export_dot(empty).find("n0 [label=\"[]\"]") != std::string::npos);
    CHECK_THROWS_AS(build_gkm_graph(units(2), ones(3)), InputError);
}

TEST_CASE("full flags of a three dimensional space") {
    GkmGraph g = build_gkm_graph(units(3), ones(3));
    CHECK(g.nodes.size() == 6);
    CHECK(g.edges.size() == 9);
    // Every pair of permutations differing by a transposition is joined.
    std::vector<int> degree(6, 0);
    for (const GkmEdge& e : g.edges) {
        ++degree[static_cast<std::size_t>(e.a)];
        ++degree[static_cast<std::size_t>(e.b)];
    }
    CHECK(degree == std::vector<int>(6, 3));
    // Equivariant classes: f_tau = x_{row of 3} is a GKM class.
    std::vector<Polynomial> tuple;
    for (const auto& t : g.nodes) tuple.push_back(Polynomial::variable(t.row_of(3)));
    CHECK(membership_check(g, tuple).member);
}

TEST_CASE("swaps are symmetric") {
    for (int n = 1; n <= 3; ++n)
        for (const Shape& shape : shape_grid(n, 5))
            for (const DimFiltration& f : word_grid(shape))
                for (const auto& t : enumerate_tableaux(shape, f))
                    for (const Swap& s : admissible_swaps(t)) {
                        CHECK_FALSE(s.target == t);
                        CHECK(s.p != s.q);
                        auto back = admissible_swaps(s.target);
                        bool found = std::any_of(back.begin(), back.end(), [&](const Swap& b) {
                            return b.target == t && std::minmax(b.p, b.q) == std::minmax(s.p, s.q);
                        });
                        CHECK(found);
                    }
}

TEST_CASE("orbit limits move entries between two rows") {
    RowMultiTableau t = example_tableau();
    auto limits = orbit_limits(t);
    CHECK(static_cast<int>(limits.size()) == cell_dim(t));
    for (const Swap& s : limits) {
        CHECK(dim_filtration_of(s.target) == dim_filtration_of(t));
        for (int row = 1; row <= t.shape().num_rows(); ++row)
            if (row != s.p && row != s.q)
                CHECK(s.target.filling()[static_cast<std::size_t>(row - 1)] == t.filling()[static_cast<std::size_t>(row - 1)]);
        CHECK(s.target.row_of(s.k) == s.q);
    }
}
