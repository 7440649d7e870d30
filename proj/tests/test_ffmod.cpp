#include "oracles.hpp"
#include "worked_example.hpp"

#include "qfv/betti.hpp"
#include "qfv/ffmod.hpp"

#include <doctest.h>

#include <map>

using namespace qfv;
using namespace qfv::testing;

TEST_CASE("prime fields") {
    PrimeField F(7);
    CHECK(F.mul(3, 5) == 1);
    CHECK(F.inv(3) == 5);
    CHECK(F.sub(2, 5) == 4);
    CHECK(F.neg(0) == 0);
    CHECK(F.reduce(-1) == 6);
    CHECK_THROWS_AS(PrimeField(4), InputError);
    CHECK_THROWS_AS(PrimeField(1), InputError);
    CHECK_THROWS_AS(F.inv(0), std::domain_error);
}

TEST_CASE("echelon forms and kernels") {
    PrimeField F(3);
    FpMatrix m(2, 3);
    m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 0;
    m(1, 0) = 2; m(1, 1) = 1; m(1, 2) = 0;
    CHECK(rank(F, m) == 1);
    FpMatrix k = kernel(F, m);
    CHECK(k.rows() == 2);
    for (int i = 0; i < k.rows(); ++i) CHECK(is_zero(apply(F, m, k.row(i))));
    Echelon e = echelonize(F, m);
    CHECK(is_zero(reduce_against(F, e, {2, 1, 0})));
    CHECK_FALSE(is_zero(reduce_against(F, e, {0, 0, 1})));
}

TEST_CASE("standard modules") {
    NilModule j = build_module(jordan_shape({2}), 2);
    REQUIRE(j.arrows.size() == 1);
    CHECK(j.arrow(Vertex(1))(1, 0) == 1);
    CHECK(j.arrow(Vertex(1))(0, 0) == 0);
    CHECK(j.arrow(Vertex(1))(0, 1) == 0);
    CHECK(j.arrow(Vertex(1))(1, 1) == 0);

    NilModule zero = build_module(units(2), 3);
    CHECK(zero.arrow(Vertex(1)) == FpMatrix(2, 2));

    NilModule ex = build_module(example_shape(), 5);
    CHECK(ex.arrow(Vertex(1)).rows() == 6);
    CHECK(ex.arrow(Vertex(1)).cols() == 4);
    CHECK(ex.arrow(Vertex(2)).rows() == 4);
    CHECK(ex.arrow(Vertex(2)).cols() == 6);
    CHECK(ex.arrow(Vertex(3)).rows() == 4);
    CHECK(ex.arrow(Vertex(3)).cols() == 4);
    CHECK(ex.dims() == dim_vector(example_shape()));
}

TEST_CASE("socles") {
    CHECK(socle(build_module(Shape(3, {Row{Vertex(3), 3}}), 2)).dims() == DimensionVector({0, 0, 1}));
    NilModule semi = build_module(Shape(3, {Row{Vertex(1), 1}, Row{Vertex(2), 1}, Row{Vertex(2), 1}}), 3);
    CHECK(socle(semi).dims() == semi.dims());
    CHECK(socle(build_module(example_shape(), 2)).dims() == DimensionVector({0, 2, 3}));
    for (int n = 1; n <= 3; ++n)
        for (int len = 1; len <= 5; ++len) {
            NilModule m = build_module(Shape(n, {Row{Vertex(n), len}}), 2);
            DimensionVector e(n);
            e.at(Vertex(n)) = 1;
            CHECK(socle(m).dims() == e);
            int image = 0;
            for (int v = 1; v <= n; ++v) image += rank(m.field, m.arrow(Vertex(v)));
            CHECK(image == len - 1);
        }
}

TEST_CASE("quotients") {
    NilModule j = build_module(jordan_shape({2}), 2);
    Quotient q = quotient(j, socle(j));
    CHECK(q.module.total_dim() == 1);
    CHECK(q.module.arrow(Vertex(1)) == FpMatrix(1, 1));
    CHECK(decompose(q.module) == jordan_shape({1}));

    Quotient same = quotient(j, GradedSubspace::zero(j.field, j.dims()));
    CHECK(same.module.arrows == j.arrows);

    // A line at the end of row 1 shortens row 1.
    NilModule ex = build_module(example_shape(), 3);
    std::vector<std::vector<std::vector<Residue>>> gens(3);
    std::vector<Residue> v(static_cast<std::size_t>(ex.dim(Vertex(3))), 0);
    for (std::size_t c = 0; c < ex.basis[2].size(); ++c)
        if (ex.basis[2][c] == Box{1, 3}) v[c] = 1;
    gens[2].push_back(v);
    Quotient cut = quotient(ex, GradedSubspace(ex.field, ex.dims(), gens));
    CHECK(decompose(cut.module) == remove_box(example_shape(), Box{1, 3}).canonical());

    // Not arrow-stable: the top of a Jordan block.
    std::vector<std::vector<std::vector<Residue>>> top(1);
    top[0].push_back({1, 0});
    CHECK_THROWS_AS(quotient(j, GradedSubspace(j.field, j.dims(), top)), InputError);
}

TEST_CASE("decomposition recovers the shape") {
    for (int n = 1; n <= 3; ++n)
        for (const Shape& shape : shape_grid(n, 6)) CHECK(decompose(build_module(shape, 2)) == shape);
}

TEST_CASE("flag counts") {
    CHECK(count_flags(build_module(units(2), 2), ones(2)) == 3);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        CHECK(count_flags(build_module(Shape(3, {Row{Vertex(3), 3}}), p), DimFiltration::parse(3, "3,2,1")) == 1);
        CHECK(count_flags(build_module(Shape(3, {Row{Vertex(3), 3}}), p), DimFiltration::parse(3, "2,3,1")) == 0);
    }
    CHECK(count_flags(build_module(jordan_shape({2, 2}), 2), ones(4)) == 15);
    CHECK(count_flags(build_module(units(3), 3), ones(3)) == 1 * 4 * 13);
}

TEST_CASE("cells of explicit flags") {
    NilModule m = build_module(units(2), 5);
    const DimensionVector dims = m.dims();
    auto flag_through = [&](std::vector<Residue> line) {
        FlagPoint fl;
        std::vector<std::vector<std::vector<Residue>>> g(1);
        g[0].push_back(line);
        fl.steps.emplace_back(m.field, dims, g);
        g[0] = {{1, 0}, {0, 1}};
        fl.steps.emplace_back(m.field, dims, g);
        return fl;
    };
    for (Residue c = 0; c < 5; ++c)
        CHECK(cell_of_flag(m, flag_through({1, c})).filling() == std::vector<std::vector<int>>{{2}, {1}});
    CHECK(cell_of_flag(m, flag_through({0, 1})).filling() == std::vector<std::vector<int>>{{1}, {2}});

    FlagPoint broken = flag_through({1, 0});
    broken.steps.pop_back();
    CHECK_THROWS_AS(cell_of_flag(m, broken), InputError);
}

TEST_CASE("split flags are fixed points of their cells") {
    for (int n = 1; n <= 3; ++n)
        for (const Shape& shape : shape_grid(n, 5)) {
            NilModule m = build_module(shape, 2);
            for (const DimFiltration& f : word_grid(shape))
                for (const auto& t : enumerate_tableaux(shape, f)) {
                    FlagPoint fl = split_flag(m, t);
                    CHECK_NOTHROW(validate_flag(m, fl));
                    CHECK(cell_of_flag(m, fl) == t);
                }
        }
}

TEST_CASE("every flag is visited once and lands in its cell") {
    Shape shape = jordan_shape({2, 1});
    NilModule m = build_module(shape, 3);
    std::map<std::vector<std::vector<int>>, std::uint64_t> tally;
    std::uint64_t n = for_each_flag(m, ones(3), [&](const FlagPoint& fl) {
        validate_flag(m, fl);
        ++tally[cell_of_flag(m, fl).filling()];
    });
    CHECK(n == count_flags(m, ones(3)));
    for (const auto& t : enumerate_tableaux(shape, ones(3))) {
        std::uint64_t expect = 1;
        for (int j = 0; j < cell_dim(t); ++j) expect *= 3;
        CHECK(tally[t.filling()] == expect);
    }
}

TEST_CASE("basis walk agrees with the subspace walk") {
    for (int n = 1; n <= 3; ++n)
        for (const Shape& shape : shape_grid(n, 4, 3))
            for (const DimFiltration& f : word_grid(shape)) {
                NilModule m = build_module(shape, 2);
                std::map<std::vector<std::vector<int>>, std::uint64_t> slow;
                for_each_flag(m, f, [&](const FlagPoint& fl) { ++slow[cell_of_flag(m, fl).filling()]; });
                std::uint64_t bases = for_each_flag_basis(m, f, [&](const FlagBasis& b) {
                    FlagPoint fl;
                    std::vector<std::vector<std::vector<Residue>>> gens(static_cast<std::size_t>(n));
                    for (const auto& v : b) {
                        // Back to per-vertex coordinates.
                        for (int vx = 1; vx <= n; ++vx) {
                            const auto& tags = m.basis[static_cast<std::size_t>(vx - 1)];
                            std::vector<Residue> x(tags.size(), 0);
                            bool any = false;
                            for (std::size_t j = 0; j < tags.size(); ++j) {
                                int c = tags[j].pos - 1;
                                for (int row = 1; row < tags[j].row; ++row) c += shape.row(row).len;
                                x[j] = v[static_cast<std::size_t>(c)];
                                any = any || x[j] != 0;
                            }
                            if (any) gens[static_cast<std::size_t>(vx - 1)].push_back(x);
                        }
                        fl.steps.emplace_back(m.field, m.dims(), gens);
                    }
                    validate_flag(m, fl);
                    CHECK(cell_of_flag(m, fl) == cell_of_basis(m, b));
                });
                CHECK(bases == count_flags(m, f));
                CHECK(classify_flags(m, f) == slow);
            }
}

TEST_CASE("cell_of_basis rejects dependent vectors") {
    Shape shape = units(2);
    NilModule m = build_module(shape, 2);
    CHECK_THROWS_AS(cell_of_basis(m, {{1, 0}, {1, 0}}), InputError);
    CHECK_THROWS_AS(cell_of_basis(m, {{1, 0}}), InputError);
    CHECK(cell_of_basis(m, {{1, 1}, {1, 0}}).filling() == std::vector<std::vector<int>>{{2}, {1}});
}

TEST_CASE("endomorphism dimensions") {
    for (int len = 1; len <= 6; ++len) CHECK(dim_end(jordan_shape({len})) == len);
    CHECK(dim_end(Shape(3, {Row{Vertex(1), 1}, Row{Vertex(2), 1}})) == 2);
    CHECK(dim_end(Shape(2, {})) == 0);
    CHECK(dim_end(units(3)) == 9);
    // Hom(E_i[a], E_j[b]) over the cycle: rows E_2[2], E_1[1] on n=2.
    CHECK(dim_end(Shape(2, {Row{Vertex(2), 2}, Row{Vertex(1), 1}})) == 3);
}
