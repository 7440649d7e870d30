#include "oracles.hpp"

#include "qfv/betti.hpp"
#include "qfv/ffmod.hpp"
#include "qfv/gkm.hpp"
#include "qfv/oracle.hpp"

#include <doctest.h>

#include <map>
#include <numeric>

using namespace qfv;
using namespace qfv::testing;

namespace {

PoincarePoly cell_poly(const std::vector<RowMultiTableau>& ts) {
    std::vector<std::uint64_t> c;
    for (const auto& t : ts) {
        auto d = static_cast<std::size_t>(cell_dim(t));
        if (c.size() <= d) c.resize(d + 1, 0);
        ++c[d];
    }
    return PoincarePoly(std::move(c));
}

}  // namespace

TEST_CASE("recursions agree with enumeration") {
    for (int n = 1; n <= 3; ++n)
        for (const Shape& shape : shape_grid(n, 5))
            for (const DimFiltration& f : word_grid(shape)) {
                auto ts = enumerate_tableaux(shape, f);
                CHECK(f_count(shape, f) == ts.size());
                PoincarePoly p = f_graded(shape, f);
                CHECK(p == cell_poly(ts));
                CHECK(p.total() == f_count(shape, f));
            }
}

TEST_CASE("point counts over small fields") {
    for (int n = 1; n <= 3; ++n)
        for (const Shape& shape : shape_grid(n, 4))
            for (const DimFiltration& f : word_grid(shape))
                for (std::uint32_t p : {2u, 3u}) {
                    OracleReport r = run_oracle(shape, f, p);
                    CHECK(r.count == r.poincare_at_p);
                    CHECK(r.match);
                }
}

TEST_CASE("every row order gives the same polynomial") {
    // cell_dim of an individual filling depends on the row order through the
    // tie-break; the polynomial does not.
    for (int n = 1; n <= 2; ++n)
        for (const Shape& shape : shape_grid(n, 5, 3)) {
            std::vector<Row> rows = shape.rows();
            std::vector<int> idx(rows.size());
            std::iota(idx.begin(), idx.end(), 0);
            for (const DimFiltration& f : word_grid(shape)) {
                PoincarePoly reference = cell_poly(enumerate_tableaux(shape, f));
                std::vector<int> perm = idx;
                do {
                    std::vector<Row> permuted;
                    for (int i : perm) permuted.push_back(rows[static_cast<std::size_t>(i)]);
                    Shape given = Shape::as_given(n, permuted);
                    CHECK(cell_poly(enumerate_tableaux(given, f)) == reference);
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
        }
}

TEST_CASE("permuted row orders are checked by the oracle") {
    Shape given = Shape::as_given(1, {Row{Vertex(1), 1}, Row{Vertex(1), 2}, Row{Vertex(1), 1}});
    for (std::uint32_t p : {2u, 3u}) CHECK(run_oracle(given, DimFiltration::parse(1, "1,1,1,1"), p).match);
    Shape mixed = Shape::as_given(2, {Row{Vertex(1), 1}, Row{Vertex(2), 2}, Row{Vertex(1), 2}});
    for (const DimFiltration& f : word_grid(mixed)) CHECK(run_oracle(mixed, f, 2).match);
}

TEST_CASE("identical rows: values of cell_dim follow the tie-break") {
    Shape shape = jordan_shape({1, 1});
    RowMultiTableau top(shape, {{2}, {1}});
    RowMultiTableau bottom(shape, {{1}, {2}});
    CHECK(cell_dim(top) == 1);
    CHECK(cell_dim(bottom) == 0);
}

TEST_CASE("moment graph edge counts") {
    for (int n = 1; n <= 3; ++n)
        for (const Shape& shape : shape_grid(n, 5))
            for (const DimFiltration& f : word_grid(shape)) {
                if (!compatible(shape, f)) continue;
                GkmGraph g = build_gkm_graph(shape, f);
                std::size_t stars = 0;
                for (const auto& t : g.nodes) stars += static_cast<std::size_t>(cell_dim(t));
                CHECK(g.nodes.size() == f_count(shape, f));
                CHECK(g.edges.size() == stars);
                for (const GkmEdge& e : g.edges) {
                    CHECK(e.a != e.b);
                    CHECK(e.p != e.q);
                }
            }
}

TEST_CASE("membership accepts symmetric classes and rejects perturbations") {
    for (const Shape& shape : shape_grid(2, 4))
        for (const DimFiltration& f : word_grid(shape)) {
            GkmGraph g = build_gkm_graph(shape, f);
            Polynomial sym(1);
            for (int i = 1; i <= g.t; ++i) sym = sym * (Polynomial::variable(i) + Polynomial(2));
            std::vector<Polynomial> tuple(g.nodes.size(), sym);
            CHECK(membership_check(g, tuple).member);
            if (g.edges.empty()) continue;
            const GkmEdge& e = g.edges.front();
            tuple[static_cast<std::size_t>(e.a)] = tuple[static_cast<std::size_t>(e.a)] + Polynomial::variable(e.p);
            MembershipReport r = membership_check(g, tuple);
            CHECK_FALSE(r.member);
            CHECK(std::find(r.failing_edges.begin(), r.failing_edges.end(), 0u) != r.failing_edges.end());
        }
}
