#pragma once

// Row multi-tableaux: the affine cells of a complete quiver flag variety.

#include "qfv/cyclic.hpp"

#include <string>
#include <vector>

namespace qfv {

/// A filling of a shape with 1..r, strictly increasing along every row.
class RowMultiTableau {
public:
    RowMultiTableau() = default;
    /// filling[j] lists the entries of row j+1 from left to right.
    RowMultiTableau(Shape shape, std::vector<std::vector<int>> filling);

    const Shape& shape() const { return shape_; }
    const std::vector<std::vector<int>>& filling() const { return filling_; }
    int size() const { return static_cast<int>(where_.size()); }

    int entry(const Box& b) const;
    /// Box holding entry k (1 <= k <= r).
    const Box& box_of(int k) const;
    int row_of(int k) const { return box_of(k).row; }
    Vertex column_of(int k) const { return shape_.label(box_of(k)); }

    std::string to_string() const;

    friend bool operator==(const RowMultiTableau& a, const RowMultiTableau& b) {
        return a.shape_ == b.shape_ && a.filling_ == b.filling_;
    }
    friend bool operator<(const RowMultiTableau& a, const RowMultiTableau& b) {
        return a.filling_ < b.filling_;
    }

private:
    Shape shape_;
    std::vector<std::vector<int>> filling_;
    std::vector<Box> where_;
};

/// The split summand E_i[lambda] carried by one row of a tableau: the chain
/// 0 ⊂ E_i[lambda_r] ⊂ ... ⊂ E_i[lambda_1].
struct SplitSummand {
    Vertex socle;
    std::vector<int> lambda;

    friend bool operator==(const SplitSummand&, const SplitSummand&) = default;
    friend auto operator<=>(const SplitSummand&, const SplitSummand&) = default;
};

/// All row multi-tableaux of `shape` with dimension filtration `f`. Entries
/// r, r-1, ..., 1 are placed in that order, entry r+1-k into the rightmost
/// unfilled box of a row whose column label is i_k; candidate rows are tried
/// top to bottom. Returns an empty list for an incompatible filtration.
std::vector<RowMultiTableau> enumerate_tableaux(const Shape& shape, const DimFiltration& f);

/// Number of star coordinates contributed by entry k.
///
/// At the moment entry k is placed the unfilled boxes are those holding
/// 1..k. Among the rows whose rightmost unfilled box sits in column c_k, the
/// rows are ordered by current length (number of unfilled boxes) ascending,
/// then by row index; d_tau(k) counts the rows after r_k in this order.
/// Equivalently: #{ s < k : c_s = c_k, r_s has no entry in (s, k), and
/// (len_s, r_s) > (len_k, r_k) } with len_s = #{entries <= s in r_s} and
/// len_k = #{entries <= k in r_k}.
int d_tau(const RowMultiTableau& t, int k);

/// The same count with rows compared by row index alone,
/// #{ s < k : c_s = c_k, r_s > r_k, r_s has no entry in (s, k) }.
/// Agrees with d_tau whenever rows meeting in a column are already sorted by
/// current length; it is not a cell dimension in general.
int row_index_d_tau(const RowMultiTableau& t, int k);

/// d_tau(1..r) in one pass.
std::vector<int> d_tau_table(const RowMultiTableau& t);
std::vector<int> row_index_d_tau_table(const RowMultiTableau& t);

/// dim C_tau.
int cell_dim(const RowMultiTableau& t);

/// The word whose k-th letter is the column of entry r+1-k.
DimFiltration dim_filtration_of(const RowMultiTableau& t);

/// One summand per row: a row ending at i with entries a_1 < ... < a_l gives
/// E_i[lambda] with lambda_j = #{ entries >= j }.
std::vector<SplitSummand> tableau_to_split_module(const RowMultiTableau& t);

}  // namespace qfv
