#include "qfv/ffmod.hpp"

#include "qfv/parallel.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

namespace qfv {

int NilModule::total_dim() const {
    int total = 0;
    for (const auto& b : basis) total += static_cast<int>(b.size());
    return total;
}

DimensionVector NilModule::dims() const {
    DimensionVector d(n);
    for (int v = 1; v <= n; ++v) d.at(Vertex(v)) = dim(Vertex(v));
    return d;
}

GradedSubspace::GradedSubspace(const PrimeField& F, const DimensionVector& ambient,
                               const std::vector<std::vector<std::vector<Residue>>>& generators) {
    if (static_cast<int>(generators.size()) != ambient.n()) throw InputError("generator list needs one entry per vertex");
    for (int v = 1; v <= ambient.n(); ++v) {
        int width = ambient.at(Vertex(v));
        FpMatrix m(0, width);
        for (const auto& g : generators[static_cast<std::size_t>(v - 1)]) {
            if (static_cast<int>(g.size()) != width) throw InputError("generator has the wrong length");
            m.append_row(g);
        }
        parts_.push_back(echelonize(F, std::move(m)));
    }
}

GradedSubspace GradedSubspace::zero(const PrimeField& F, const DimensionVector& ambient) {
    return GradedSubspace(F, ambient, std::vector<std::vector<std::vector<Residue>>>(static_cast<std::size_t>(ambient.n())));
}

int GradedSubspace::total_dim() const {
    int total = 0;
    for (const auto& e : parts_) total += static_cast<int>(e.pivots.size());
    return total;
}

DimensionVector GradedSubspace::dims() const {
    DimensionVector d(n());
    for (int v = 1; v <= n(); ++v) d.at(Vertex(v)) = dim(Vertex(v));
    return d;
}

bool GradedSubspace::contains(const PrimeField& F, Vertex v, const std::vector<Residue>& x) const {
    return is_zero(reduce_against(F, at(v), x));
}

bool GradedSubspace::contains(const PrimeField& F, const GradedSubspace& other) const {
    for (int v = 1; v <= n(); ++v) {
        const Echelon& e = other.at(Vertex(v));
        for (int i = 0; i < e.rows.rows(); ++i)
            if (!contains(F, Vertex(v), e.rows.row(i))) return false;
    }
    return true;
}

NilModule build_module(const Shape& shape, std::uint32_t p) {
    NilModule m;
    m.n = shape.n();
    m.field = PrimeField(p);
    m.basis.assign(static_cast<std::size_t>(m.n), {});
    std::map<std::pair<int, int>, int> index;  // (row,pos) -> coordinate at its vertex
    for (int row = 1; row <= shape.num_rows(); ++row) {
        for (int pos = 1; pos <= shape.row(row).len; ++pos) {
            Box b{row, pos};
            auto& slot = m.basis[static_cast<std::size_t>(shape.label(b).value - 1)];
            index[{row, pos}] = static_cast<int>(slot.size());
            slot.push_back(b);
        }
    }
    for (int v = 1; v <= m.n; ++v) {
        Vertex w = m.next(Vertex(v));
        FpMatrix a(m.dim(w), m.dim(Vertex(v)));
        const auto& src = m.basis[static_cast<std::size_t>(v - 1)];
        for (std::size_t j = 0; j < src.size(); ++j) {
            const Box& b = src[j];
            if (b.pos < shape.row(b.row).len) a(index.at({b.row, b.pos + 1}), static_cast<int>(j)) = 1;
        }
        m.arrows.push_back(std::move(a));
    }
    m.standard_shape = shape;
    return m;
}

GradedSubspace socle(const NilModule& m) {
    std::vector<std::vector<std::vector<Residue>>> gens(static_cast<std::size_t>(m.n));
    for (int v = 1; v <= m.n; ++v) {
        FpMatrix k = kernel(m.field, m.arrow(Vertex(v)));
        for (int i = 0; i < k.rows(); ++i) gens[static_cast<std::size_t>(v - 1)].push_back(k.row(i));
    }
    return GradedSubspace(m.field, m.dims(), gens);
}

bool is_submodule(const NilModule& m, const GradedSubspace& u) {
    if (u.dims().n() != m.n) return false;
    for (int v = 1; v <= m.n; ++v) {
        if (u.at(Vertex(v)).rows.cols() != m.dim(Vertex(v))) return false;
    }
    for (int v = 1; v <= m.n; ++v) {
        const Echelon& e = u.at(Vertex(v));
        for (int i = 0; i < e.rows.rows(); ++i) {
            auto image = apply(m.field, m.arrow(Vertex(v)), e.rows.row(i));
            if (!u.contains(m.field, m.next(Vertex(v)), image)) return false;
        }
    }
    return true;
}

Quotient quotient(const NilModule& m, const GradedSubspace& u) {
    if (!is_submodule(m, u)) throw InputError("quotient by a subspace that is not arrow-stable");
    const PrimeField& F = m.field;
    Quotient q;
    q.sub = u;
    q.module.n = m.n;
    q.module.field = F;
    q.kept.assign(static_cast<std::size_t>(m.n), {});
    q.module.basis.assign(static_cast<std::size_t>(m.n), {});
    for (int v = 1; v <= m.n; ++v) {
        const auto& pivots = u.at(Vertex(v)).pivots;
        auto& kept = q.kept[static_cast<std::size_t>(v - 1)];
        for (int c = 0; c < m.dim(Vertex(v)); ++c)
            if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) {
                kept.push_back(c);
                q.module.basis[static_cast<std::size_t>(v - 1)].push_back(m.basis[static_cast<std::size_t>(v - 1)][static_cast<std::size_t>(c)]);
            }
    }
    for (int v = 1; v <= m.n; ++v) {
        Vertex w = m.next(Vertex(v));
        const auto& src = q.kept[static_cast<std::size_t>(v - 1)];
        const auto& dst = q.kept[static_cast<std::size_t>(w.value - 1)];
        FpMatrix a(static_cast<int>(dst.size()), static_cast<int>(src.size()));
        for (std::size_t j = 0; j < src.size(); ++j) {
            std::vector<Residue> col(static_cast<std::size_t>(m.dim(Vertex(v))), 0);
            col[static_cast<std::size_t>(src[j])] = 1;
            auto image = reduce_against(F, u.at(w), apply(F, m.arrow(Vertex(v)), col));
            for (std::size_t i = 0; i < dst.size(); ++i) a(static_cast<int>(i), static_cast<int>(j)) = image[static_cast<std::size_t>(dst[i])];
        }
        q.module.arrows.push_back(std::move(a));
    }
    return q;
}

namespace {

FpMatrix multiply(const PrimeField& F, const FpMatrix& a, const FpMatrix& b) {
    FpMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            Residue x = a(i, k);
            if (x == 0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) = F.add(c(i, j), F.mul(x, b(k, j)));
        }
    return c;
}

FpMatrix identity(int d) {
    FpMatrix id(d, d);
    for (int i = 0; i < d; ++i) id(i, i) = 1;
    return id;
}

}  // namespace

Shape decompose(const NilModule& m) {
    const int n = m.n;
    const int total = m.total_dim();
    // rho[v][l]: rank of the length-l path map starting at vertex v.
    std::vector<std::vector<int>> rho(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(total + 2), 0));
    for (int v = 1; v <= n; ++v) {
        FpMatrix path = identity(m.dim(Vertex(v)));
        Vertex at(v);
        for (int l = 0; l <= total + 1; ++l) {
            rho[static_cast<std::size_t>(v - 1)][static_cast<std::size_t>(l)] = rank(m.field, path);
            path = multiply(m.field, m.arrow(at), path);
            at = m.next(at);
        }
    }
    // c(v, l) = rows with socle v+l-1 and length >= l.
    auto c = [&](int v, int l) {
        auto& r = rho[static_cast<std::size_t>(wrap_vertex(v, n) - 1)];
        return r[static_cast<std::size_t>(l - 1)] - r[static_cast<std::size_t>(l)];
    };
    std::vector<Row> rows;
    for (int i = 1; i <= n; ++i)
        for (int len = 1; len <= total; ++len) {
            int count = c(i - len + 1, len) - c(i - len, len + 1);
            for (int j = 0; j < count; ++j) rows.push_back(Row{Vertex(i), len});
        }
    return Shape(n, std::move(rows));
}

namespace {

// Lines through the origin of F_p^s, each as its normalised coefficient
// vector (first nonzero coordinate equal to 1).
std::vector<std::vector<Residue>> projective_points(const PrimeField& F, int s) {
    std::vector<std::vector<Residue>> out;
    for (int lead = 0; lead < s; ++lead) {
        int free = s - 1 - lead;
        std::uint64_t combos = 1;
        for (int j = 0; j < free; ++j) combos *= F.p();
        for (std::uint64_t code = 0; code < combos; ++code) {
            std::vector<Residue> c(static_cast<std::size_t>(s), 0);
            c[static_cast<std::size_t>(lead)] = 1;
            std::uint64_t rest = code;
            for (int j = lead + 1; j < s; ++j) {
                c[static_cast<std::size_t>(j)] = static_cast<Residue>(rest % F.p());
                rest /= F.p();
            }
            out.push_back(std::move(c));
        }
    }
    return out;
}

// Vectors spanning the socle of q at vertex i, one per line.
std::vector<std::vector<Residue>> socle_lines(const NilModule& q, Vertex i) {
    const PrimeField& F = q.field;
    FpMatrix k = kernel(F, q.arrow(i));
    std::vector<std::vector<Residue>> lines;
    for (const auto& c : projective_points(F, k.rows())) {
        std::vector<Residue> w(static_cast<std::size_t>(k.cols()), 0);
        for (int j = 0; j < k.rows(); ++j)
            for (int t = 0; t < k.cols(); ++t)
                w[static_cast<std::size_t>(t)] = F.add(w[static_cast<std::size_t>(t)], F.mul(c[static_cast<std::size_t>(j)], k(j, t)));
        lines.push_back(std::move(w));
    }
    return lines;
}

GradedSubspace line_at(const NilModule& q, Vertex i, const std::vector<Residue>& w) {
    std::vector<std::vector<std::vector<Residue>>> gens(static_cast<std::size_t>(q.n));
    gens[static_cast<std::size_t>(i.value - 1)].push_back(w);
    return GradedSubspace(q.field, q.dims(), gens);
}

std::uint64_t count_rec(const NilModule& q, const DimFiltration& f, int step) {
    if (step > f.length()) return q.total_dim() == 0 ? 1 : 0;
    Vertex i = f.at(step);
    std::uint64_t total = 0;
    for (const auto& w : socle_lines(q, i)) total += count_rec(quotient(q, line_at(q, i, w)).module, f, step + 1);
    return total;
}

struct Lift {
    Vertex vertex;
    std::vector<Residue> vec;  // coordinates of the original module at `vertex`
};

struct FlagWalker {
    const NilModule& top;
    const DimFiltration& f;
    const std::function<void(const FlagPoint&)>& visit;
    std::uint64_t visited = 0;

    void emit(const std::vector<Lift>& lifts) {
        FlagPoint fl;
        std::vector<std::vector<std::vector<Residue>>> gens(static_cast<std::size_t>(top.n));
        for (const Lift& l : lifts) {
            gens[static_cast<std::size_t>(l.vertex.value - 1)].push_back(l.vec);
            fl.steps.emplace_back(top.field, top.dims(), gens);
        }
        ++visited;
        visit(fl);
    }

    // origin[v-1][j]: coordinate of `top` behind basis vector j of q at v.
    void walk(const NilModule& q, const std::vector<std::vector<int>>& origin, int step, std::vector<Lift>& lifts) {
        if (step > f.length()) {
            if (q.total_dim() == 0) emit(lifts);
            return;
        }
        Vertex i = f.at(step);
        for (const auto& w : socle_lines(q, i)) descend(q, origin, step, lifts, w);
    }

    void descend(const NilModule& q, const std::vector<std::vector<int>>& origin, int step, std::vector<Lift>& lifts,
                 const std::vector<Residue>& w) {
        Vertex i = f.at(step);
        Lift lift{i, std::vector<Residue>(static_cast<std::size_t>(top.dim(i)), 0)};
        const auto& map_i = origin[static_cast<std::size_t>(i.value - 1)];
        for (std::size_t t = 0; t < w.size(); ++t) lift.vec[static_cast<std::size_t>(map_i[t])] = w[t];
        Quotient next = quotient(q, line_at(q, i, w));
        std::vector<std::vector<int>> next_origin(static_cast<std::size_t>(q.n));
        for (int v = 0; v < q.n; ++v)
            for (int c : next.kept[static_cast<std::size_t>(v)])
                next_origin[static_cast<std::size_t>(v)].push_back(origin[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)]);
        lifts.push_back(std::move(lift));
        walk(next.module, next_origin, step + 1, lifts);
        lifts.pop_back();
    }
};

std::vector<std::vector<int>> identity_origin(const NilModule& m) {
    std::vector<std::vector<int>> origin(static_cast<std::size_t>(m.n));
    for (int v = 1; v <= m.n; ++v) {
        origin[static_cast<std::size_t>(v - 1)].resize(static_cast<std::size_t>(m.dim(Vertex(v))));
        std::iota(origin[static_cast<std::size_t>(v - 1)].begin(), origin[static_cast<std::size_t>(v - 1)].end(), 0);
    }
    return origin;
}

}  // namespace

std::uint64_t count_flags(const NilModule& m, const DimFiltration& f) {
    if (f.n() != m.n) throw InputError("filtration and module live on different cycles");
    if (f.length() != m.total_dim()) return 0;
    if (f.length() == 0) return 1;
    Vertex i = f.at(1);
    auto lines = socle_lines(m, i);
    auto parts = parallel_map(lines.size(), [&](std::size_t j) {
        return count_rec(quotient(m, line_at(m, i, lines[j])).module, f, 2);
    });
    return std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
}

std::uint64_t for_each_flag(const NilModule& m, const DimFiltration& f,
                            const std::function<void(const FlagPoint&)>& visit) {
    if (f.n() != m.n) throw InputError("filtration and module live on different cycles");
    if (f.length() != m.total_dim()) return 0;
    FlagWalker walker{m, f, visit};
    std::vector<Lift> lifts;
    walker.walk(m, identity_origin(m), 1, lifts);
    return walker.visited;
}

void validate_flag(const NilModule& m, const FlagPoint& fl) {
    const int r = m.total_dim();
    if (static_cast<int>(fl.steps.size()) != r)
        throw InputError("flag has " + std::to_string(fl.steps.size()) + " steps, module has dimension " + std::to_string(r));
    const GradedSubspace* prev = nullptr;
    for (int k = 1; k <= r; ++k) {
        const GradedSubspace& u = fl.steps[static_cast<std::size_t>(k - 1)];
        if (u.n() != m.n) throw InputError("flag step on the wrong cycle");
        for (int v = 1; v <= m.n; ++v)
            if (u.at(Vertex(v)).rows.cols() != m.dim(Vertex(v))) throw InputError("flag step has the wrong ambient dimension");
        if (u.total_dim() != k) throw InputError("flag step " + std::to_string(k) + " has dimension " + std::to_string(u.total_dim()));
        if (!is_submodule(m, u)) throw InputError("flag step " + std::to_string(k) + " is not a submodule");
        if (prev && !u.contains(m.field, *prev)) throw InputError("flag steps are not nested");
        prev = &u;
    }
}

FlagPoint split_flag(const NilModule& m, const RowMultiTableau& tau) {
    if (!m.standard_shape || !(*m.standard_shape == tau.shape()))
        throw InputError("split flag needs the standard module of the tableau's shape");
    const Shape& shape = tau.shape();
    const int r = tau.size();
    auto summands = tableau_to_split_module(tau);
    FlagPoint fl;
    for (int s = 1; s <= r; ++s) {
        std::vector<std::vector<std::vector<Residue>>> gens(static_cast<std::size_t>(m.n));
        for (int v = 1; v <= m.n; ++v) {
            const auto& tags = m.basis[static_cast<std::size_t>(v - 1)];
            for (std::size_t j = 0; j < tags.size(); ++j) {
                const Box& b = tags[j];
                int len = shape.row(b.row).len;
                int kept = summands[static_cast<std::size_t>(b.row - 1)].lambda[static_cast<std::size_t>(r - s)];
                // U^s meets this row in its rightmost `kept` boxes.
                if (b.pos > len - kept) {
                    std::vector<Residue> e(tags.size(), 0);
                    e[j] = 1;
                    gens[static_cast<std::size_t>(v - 1)].push_back(std::move(e));
                }
            }
        }
        fl.steps.emplace_back(m.field, m.dims(), gens);
    }
    return fl;
}

namespace {

// Box coordinates of a standard module: rows in order, boxes left to right.
struct BoxCoords {
    std::vector<int> offset;                  // offset[row-1]: coordinate of (row, 1)
    std::vector<int> next;                    // coordinate of the arrow image, -1 at a row end
    std::vector<std::vector<int>> at_vertex;  // at_vertex[v-1]: coordinates labelled v

    explicit BoxCoords(const Shape& shape) : offset(static_cast<std::size_t>(shape.num_rows()), 0) {
        at_vertex.resize(static_cast<std::size_t>(shape.n()));
        int c = 0;
        for (int row = 1; row <= shape.num_rows(); ++row) {
            offset[static_cast<std::size_t>(row - 1)] = c;
            const int len = shape.row(row).len;
            for (int pos = 1; pos <= len; ++pos, ++c) {
                at_vertex[static_cast<std::size_t>(shape.label(Box{row, pos}).value - 1)].push_back(c);
                next.push_back(pos < len ? c + 1 : -1);
            }
        }
    }

    std::size_t operator()(int row, int pos) const {
        return static_cast<std::size_t>(offset[static_cast<std::size_t>(row - 1)] + pos - 1);
    }
};

}  // namespace

RowMultiTableau cell_of_flag(const NilModule& m, const FlagPoint& fl) {
    if (!m.standard_shape) throw InputError("cell_of_flag needs a module in standard form");
    validate_flag(m, fl);
    const PrimeField& F = m.field;
    const int r = m.total_dim();
    const BoxCoords global(*m.standard_shape);

    FlagBasis basis;
    Echelon prev{FpMatrix(0, r), {}};
    for (const GradedSubspace& u : fl.steps) {
        FpMatrix gens(0, r);
        for (int v = 1; v <= m.n; ++v) {
            const Echelon& e = u.at(Vertex(v));
            const auto& tags = m.basis[static_cast<std::size_t>(v - 1)];
            for (int i = 0; i < e.rows.rows(); ++i) {
                std::vector<Residue> x(static_cast<std::size_t>(r), 0);
                for (std::size_t j = 0; j < tags.size(); ++j) x[global(tags[j].row, tags[j].pos)] = e.rows(i, static_cast<int>(j));
                gens.append_row(x);
            }
        }
        for (int i = 0; i < gens.rows(); ++i) {
            auto x = gens.row(i);
            if (!is_zero(reduce_against(F, prev, x))) {
                basis.push_back(std::move(x));
                break;
            }
        }
        prev = echelonize(F, std::move(gens));
    }
    return cell_of_basis(m, basis);
}

RowMultiTableau cell_of_basis(const NilModule& m, const FlagBasis& basis) {
    if (!m.standard_shape) throw InputError("cell_of_basis needs a module in standard form");
    const Shape& shape = *m.standard_shape;
    const PrimeField& F = m.field;
    const int r = m.total_dim();
    if (static_cast<int>(basis.size()) != r)
        throw InputError("flag basis has " + std::to_string(basis.size()) + " vectors, module has dimension " + std::to_string(r));
    for (const auto& v : basis)
        if (static_cast<int>(v.size()) != r) throw InputError("flag basis vector has the wrong length");
    const BoxCoords global(shape);

    FlagBasis vs = basis;
    std::vector<int> alive;
    std::vector<std::vector<int>> filling;
    for (const Row& row : shape.rows()) {
        alive.push_back(row.len);
        filling.emplace_back(static_cast<std::size_t>(row.len), 0);
    }

    for (int step = 1; step <= r; ++step) {
        const std::vector<Residue>& v = vs[static_cast<std::size_t>(step - 1)];

        // In the current quotient the vector must span a line in the socle,
        // i.e. live on end boxes of one column.
        int pivot_row = 0;
        std::optional<Vertex> column;
        std::vector<int> support;
        for (int row = 1; row <= shape.num_rows(); ++row) {
            for (int pos = 1; pos <= alive[static_cast<std::size_t>(row - 1)]; ++pos) {
                if (v[global(row, pos)] == 0) continue;
                if (pos != alive[static_cast<std::size_t>(row - 1)]) throw InputError("flag line leaves the socle");
                Vertex c = shape.label(Box{row, pos});
                if (column && *column != c) throw InputError("flag line is not graded");
                column = c;
                support.push_back(row);
            }
        }
        if (support.empty()) throw InputError("flag does not grow by one dimension per step");
        for (int row : support) {
            int a = alive[static_cast<std::size_t>(row - 1)];
            int b = pivot_row ? alive[static_cast<std::size_t>(pivot_row - 1)] : 0;
            if (pivot_row == 0 || a < b) pivot_row = row;
        }
        const int plen = alive[static_cast<std::size_t>(pivot_row - 1)];
        const std::size_t pivot_coord = global(pivot_row, plen);
        const Residue scale = F.inv(v[pivot_coord]);

        // id - sum_j c_j iota_j on the later vectors, then cut the pivot box.
        for (int row : support) {
            if (row == pivot_row) continue;
            const int jlen = alive[static_cast<std::size_t>(row - 1)];
            const Residue c = F.mul(v[global(row, jlen)], scale);
            for (std::size_t k = static_cast<std::size_t>(step); k < vs.size(); ++k)
                for (int d = 0; d < plen; ++d) {
                    Residue x = vs[k][global(pivot_row, plen - d)];
                    if (x == 0) continue;
                    Residue& y = vs[k][global(row, jlen - d)];
                    y = F.sub(y, F.mul(c, x));
                }
        }
        for (std::size_t k = static_cast<std::size_t>(step); k < vs.size(); ++k) vs[k][pivot_coord] = 0;
        filling[static_cast<std::size_t>(pivot_row - 1)][static_cast<std::size_t>(plen - 1)] = r + 1 - step;
        --alive[static_cast<std::size_t>(pivot_row - 1)];
    }
    return RowMultiTableau(shape, std::move(filling));
}

namespace {

// Depth-first walk over flags in M's own coordinates. U^k is kept as a
// semi-echelon basis: each row vanishes on the pivots of the rows before it.
struct BasisWalker {
    const PrimeField& F;
    const DimFiltration& f;
    const BoxCoords& coords;
    const int r;
    FlagBasis basis;
    FlagBasis echelon;
    std::vector<int> pivots;
    std::vector<char> is_pivot;

    BasisWalker(const PrimeField& field, const DimFiltration& filtration, const BoxCoords& c, int dim)
        : F(field), f(filtration), coords(c), r(dim), is_pivot(static_cast<std::size_t>(dim), 0) {}

    void reduce(std::vector<Residue>& x) const {
        for (std::size_t i = 0; i < echelon.size(); ++i) {
            Residue a = x[static_cast<std::size_t>(pivots[i])];
            if (a == 0) continue;
            for (int j = 0; j < r; ++j)
                if (echelon[i][static_cast<std::size_t>(j)]) x[static_cast<std::size_t>(j)] = F.sub(x[static_cast<std::size_t>(j)], F.mul(a, echelon[i][static_cast<std::size_t>(j)]));
        }
    }

    // One representative per line in the socle of M/U^k at i, supported on
    // coordinates that are not pivots of U^k.
    std::vector<std::vector<Residue>> lines(Vertex i) const {
        std::vector<int> free;
        for (int c : coords.at_vertex[static_cast<std::size_t>(i.value - 1)])
            if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);
        FpMatrix images(r, static_cast<int>(free.size()));
        for (std::size_t j = 0; j < free.size(); ++j) {
            int target = coords.next[static_cast<std::size_t>(free[j])];
            if (target < 0) continue;
            std::vector<Residue> y(static_cast<std::size_t>(r), 0);
            y[static_cast<std::size_t>(target)] = 1;
            reduce(y);
            for (int t = 0; t < r; ++t) images(t, static_cast<int>(j)) = y[static_cast<std::size_t>(t)];
        }
        FpMatrix k = kernel(F, images);
        std::vector<std::vector<Residue>> out;
        for (const auto& c : projective_points(F, k.rows())) {
            std::vector<Residue> w(static_cast<std::size_t>(r), 0);
            for (int j = 0; j < k.rows(); ++j) {
                if (c[static_cast<std::size_t>(j)] == 0) continue;
                for (std::size_t t = 0; t < free.size(); ++t) {
                    Residue& x = w[static_cast<std::size_t>(free[t])];
                    x = F.add(x, F.mul(c[static_cast<std::size_t>(j)], k(j, static_cast<int>(t))));
                }
            }
            out.push_back(std::move(w));
        }
        return out;
    }

    template <typename Visit>
    void walk(int step, Visit& visit) {
        if (step > r) {
            visit(static_cast<const FlagBasis&>(basis));
            return;
        }
        for (const auto& w : lines(f.at(step))) descend(w, step, visit);
    }

    template <typename Visit>
    void descend(const std::vector<Residue>& w, int step, Visit& visit) {
        int lead = 0;
        while (w[static_cast<std::size_t>(lead)] == 0) ++lead;
        std::vector<Residue> row = w;
        const Residue s = F.inv(w[static_cast<std::size_t>(lead)]);
        for (Residue& x : row) x = F.mul(x, s);
        echelon.push_back(std::move(row));
        pivots.push_back(lead);
        is_pivot[static_cast<std::size_t>(lead)] = 1;
        basis.push_back(w);
        walk(step + 1, visit);
        basis.pop_back();
        is_pivot[static_cast<std::size_t>(lead)] = 0;
        pivots.pop_back();
        echelon.pop_back();
    }
};

void check_standard(const NilModule& m, const DimFiltration& f) {
    if (!m.standard_shape) throw InputError("flag bases need a module in standard form");
    if (f.n() != m.n) throw InputError("filtration and module live on different cycles");
}

}  // namespace

std::uint64_t for_each_flag_basis(const NilModule& m, const DimFiltration& f,
                                  const std::function<void(const FlagBasis&)>& visit) {
    check_standard(m, f);
    const int r = m.total_dim();
    if (f.length() != r) return 0;
    const BoxCoords coords(*m.standard_shape);
    BasisWalker walker(m.field, f, coords, r);
    std::uint64_t visited = 0;
    auto counted = [&](const FlagBasis& b) {
        ++visited;
        visit(b);
    };
    walker.walk(1, counted);
    return visited;
}

std::map<std::vector<std::vector<int>>, std::uint64_t> classify_flags(const NilModule& m, const DimFiltration& f) {
    check_standard(m, f);
    const int r = m.total_dim();
    std::map<std::vector<std::vector<int>>, std::uint64_t> found;
    if (f.length() != r) return found;
    if (r == 0) {
        found[cell_of_basis(m, {}).filling()] = 1;
        return found;
    }
    const BoxCoords coords(*m.standard_shape);
    const auto first = BasisWalker(m.field, f, coords, r).lines(f.at(1));
    auto parts = parallel_map(first.size(), [&](std::size_t j) {
        std::map<std::vector<std::vector<int>>, std::uint64_t> part;
        BasisWalker walker(m.field, f, coords, r);
        auto tally = [&](const FlagBasis& b) { ++part[cell_of_basis(m, b).filling()]; };
        walker.descend(first[j], 1, tally);
        return part;
    });
    for (const auto& part : parts)
        for (const auto& [filling, n] : part) found[filling] += n;
    return found;
}

int dim_end(const Shape& shape) {
    using boost::multiprecision::cpp_rational;
    NilModule m = build_module(shape, 2);
    const int n = m.n;
    std::vector<int> base(static_cast<std::size_t>(n) + 1, 0);  // first unknown of g_v
    for (int v = 1; v <= n; ++v) base[static_cast<std::size_t>(v)] = base[static_cast<std::size_t>(v - 1)] + m.dim(Vertex(v)) * m.dim(Vertex(v));
    const int unknowns = base[static_cast<std::size_t>(n)];
    if (unknowns == 0) return 0;
    auto var = [&](int v, int a, int b) { return base[static_cast<std::size_t>(v - 1)] + a * m.dim(Vertex(v)) + b; };

    std::vector<std::vector<cpp_rational>> system;
    for (int v = 1; v <= n; ++v) {
        int w = m.next(Vertex(v)).value;
        const FpMatrix& A = m.arrow(Vertex(v));
        const int dv = m.dim(Vertex(v));
        const int dw = m.dim(Vertex(w));
        for (int a = 0; a < dw; ++a)
            for (int b = 0; b < dv; ++b) {
                std::vector<cpp_rational> eq(static_cast<std::size_t>(unknowns), 0);
                for (int c = 0; c < dw; ++c)
                    if (A(c, b)) eq[static_cast<std::size_t>(var(w, a, c))] += A(c, b);
                for (int c = 0; c < dv; ++c)
                    if (A(a, c)) eq[static_cast<std::size_t>(var(v, c, b))] -= A(a, c);
                system.push_back(std::move(eq));
            }
    }

    int rk = 0;
    for (int col = 0; col < unknowns && rk < static_cast<int>(system.size()); ++col) {
        int pivot = -1;
        for (int i = rk; i < static_cast<int>(system.size()); ++i)
            if (system[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(system[static_cast<std::size_t>(pivot)], system[static_cast<std::size_t>(rk)]);
        const auto& prow = system[static_cast<std::size_t>(rk)];
        for (int i = rk + 1; i < static_cast<int>(system.size()); ++i) {
            auto& row = system[static_cast<std::size_t>(i)];
            if (row[static_cast<std::size_t>(col)] == 0) continue;
            cpp_rational factor = row[static_cast<std::size_t>(col)] / prow[static_cast<std::size_t>(col)];
            for (int j = col; j < unknowns; ++j)
                if (prow[static_cast<std::size_t>(j)] != 0) row[static_cast<std::size_t>(j)] -= factor * prow[static_cast<std::size_t>(j)];
        }
        ++rk;
    }
    return unknowns - rk;
}

}  // namespace qfv
