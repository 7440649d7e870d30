#pragma once

// Brute-force oracle: explicit nilpotent representations of the cycle over a
// prime field, their submodule lattice, and exhaustive flag enumeration.

#include "qfv/cyclic.hpp"
#include "qfv/field.hpp"
#include "qfv/tableau.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace qfv {

/// Vector spaces V_1..V_n with arrow maps V_v -> V_{v+1}.
///
/// Every basis vector carries the box it came from. Modules produced by
/// build_module are in standard form: rows in shape order, boxes left to
/// right, each box sent to its right neighbour and the rightmost box to 0.
struct NilModule {
    int n = 1;
    PrimeField field{2};
    std::vector<std::vector<Box>> basis;  // basis[v-1]: tags of the basis of V_v
    std::vector<FpMatrix> arrows;         // arrows[v-1]: dim V_{v+1} x dim V_v
    std::optional<Shape> standard_shape;  // set when in standard form

    int dim(Vertex v) const { return static_cast<int>(basis.at(static_cast<std::size_t>(v.value - 1)).size()); }
    int total_dim() const;
    const FpMatrix& arrow(Vertex v) const { return arrows.at(static_cast<std::size_t>(v.value - 1)); }
    Vertex next(Vertex v) const { return Vertex::wrap(v.value + 1, n); }
    DimensionVector dims() const;
};

/// Per-vertex subspace kept in reduced row echelon form.
class GradedSubspace {
public:
    GradedSubspace() = default;
    /// Span of `generators[v-1]` (row vectors of length dims.at(v)) at each vertex.
    GradedSubspace(const PrimeField& F, const DimensionVector& ambient,
                   const std::vector<std::vector<std::vector<Residue>>>& generators);

    static GradedSubspace zero(const PrimeField& F, const DimensionVector& ambient);

    int n() const { return static_cast<int>(parts_.size()); }
    const Echelon& at(Vertex v) const { return parts_.at(static_cast<std::size_t>(v.value - 1)); }
    int dim(Vertex v) const { return static_cast<int>(at(v).pivots.size()); }
    int total_dim() const;
    DimensionVector dims() const;
    bool contains(const PrimeField& F, Vertex v, const std::vector<Residue>& x) const;
    bool contains(const PrimeField& F, const GradedSubspace& other) const;

private:
    std::vector<Echelon> parts_;
};

/// U^1 ⊂ ... ⊂ U^r = M; steps[k-1] is U^k.
struct FlagPoint {
    std::vector<GradedSubspace> steps;
};

NilModule build_module(const Shape& shape, std::uint32_t p);

/// ⊕_v ker(arrow out of v).
GradedSubspace socle(const NilModule& m);

/// Arrow-stability: arrow(v) maps u_v into u_{v+1} for every v.
bool is_submodule(const NilModule& m, const GradedSubspace& u);

struct Quotient {
    NilModule module;
    /// kept[v-1][j]: coordinate of m at v that becomes basis vector j of the quotient.
    std::vector<std::vector<int>> kept;
    GradedSubspace sub;
};

/// m / u on the complement spanned by the non-pivot coordinates of u's echelon
/// form; surviving basis vectors keep their box tags.
Quotient quotient(const NilModule& m, const GradedSubspace& u);

/// Shape of m recovered from ranks of the path maps around the cycle.
Shape decompose(const NilModule& m);

/// |Fl(M; f)(F_p)| by recursing over lines in the socle at i_1 and quotients.
std::uint64_t count_flags(const NilModule& m, const DimFiltration& f);

/// Calls visit once per F_p-point of Fl(M; f). Subspaces are expressed in
/// the coordinates of m. Returns the number of flags visited.
std::uint64_t for_each_flag(const NilModule& m, const DimFiltration& f,
                            const std::function<void(const FlagPoint&)>& visit);

/// A flag as vectors v_1..v_r with U^k = span(v_1..v_k), written in the box
/// coordinates of a standard module: rows in order, boxes left to right.
using FlagBasis = std::vector<std::vector<Residue>>;

/// Same points as for_each_flag on a module in standard form, visited as
/// bases. Much cheaper per point; the walk stays in M's coordinates and never
/// changes basis.
std::uint64_t for_each_flag_basis(const NilModule& m, const DimFiltration& f,
                                  const std::function<void(const FlagBasis&)>& visit);

/// Throws InputError unless fl is a chain of submodules of total dimensions
/// 1..r ending at M.
void validate_flag(const NilModule& m, const FlagPoint& fl);

/// The torus fixed flag U^s = ⊕_rows E_i[lambda_{r+1-s}] of tau, on the
/// standard module m of tau's shape.
FlagPoint split_flag(const NilModule& m, const RowMultiTableau& tau);

/// The cell C_tau containing fl (m in standard form).
///
/// At each step the line U^1 sits in the socle of the current quotient; its
/// pivot is the supporting end box of shortest row (ties: smaller row index).
/// The automorphism id - sum_j c_j iota_j, with iota_j the inclusion of the
/// pivot row into row j, moves the line onto the pivot's basis vector; the
/// whole flag is transformed, the pivot box is cut off, and the recursion
/// continues in the standard module of the smaller shape.
RowMultiTableau cell_of_flag(const NilModule& m, const FlagPoint& fl);

/// cell_of_flag for a flag given by a basis; only the flag spanned matters.
RowMultiTableau cell_of_basis(const NilModule& m, const FlagBasis& basis);

/// Number of F_p-points of Fl(M; f) in each cell, keyed by filling.
std::map<std::vector<std::vector<int>>, std::uint64_t> classify_flags(const NilModule& m, const DimFiltration& f);

/// dim End_A(M) for the module of `shape`, from the intertwiner system
/// g_{v+1} f_v = f_v g_v solved exactly over the rationals.
int dim_end(const Shape& shape);

}  // namespace qfv
