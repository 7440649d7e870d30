#pragma once

// Counting recursions for complete quiver flag varieties, their Poincaré
// polynomials, and graded dimensions of Kato's standard modules.

#include "qfv/cyclic.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qfv {

/// Polynomial in q with nonnegative integer coefficients; coeffs[k] is the
/// coefficient of q^k, i.e. dim H^{2k}.
class PoincarePoly {
public:
    PoincarePoly() = default;
    explicit PoincarePoly(std::vector<std::uint64_t> coeffs);

    static PoincarePoly one() { return PoincarePoly({1}); }

    /// Highest k with nonzero coefficient, -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    std::uint64_t coeff(int k) const;
    const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }

    /// Sum of coefficients (value at q = 1).
    std::uint64_t total() const;
    /// Value at q = x; throws std::overflow_error if it does not fit.
    std::uint64_t evaluate(std::uint64_t x) const;

    PoincarePoly& add_shifted(const PoincarePoly& other, int shift);
    PoincarePoly operator*(const PoincarePoly& other) const;

    /// "1 + 2q + 2q^2 + q^3"; "0" for the zero polynomial.
    std::string to_string() const;

    friend bool operator==(const PoincarePoly&, const PoincarePoly&) = default;

private:
    void trim();
    std::vector<std::uint64_t> coeffs_;
};

/// t^{-dim O} gdim K as a Laurent polynomial in t.
struct KatoGdim {
    std::map<int, std::int64_t> coeffs;
    int offset = 0;  // dim O

    std::int64_t total() const;
    /// "t + t^2"; "0" when empty.
    std::string to_string() const;
};

/// Rows whose rightmost box has column label i, in row order.
std::vector<Box> end_boxes(const Shape& shape, Vertex i);

/// The shape with end box b removed; row order is kept as given and rows
/// that become empty are dropped.
Shape remove_box(const Shape& shape, const Box& b);

/// Number of T-fixed points (cells) of Fl(M; f).
std::uint64_t f_count(const Shape& shape, const DimFiltration& f);

/// Poincaré polynomial of Fl(M; f).
///
/// The end boxes at i_1 are ordered by row length ascending, ties by row
/// index; removing the m-th of s of them contributes with weight q^{s-m}.
PoincarePoly f_graded(const Shape& shape, const DimFiltration& f);

/// Drops the memo tables of f_count and f_graded.
void clear_betti_cache();

/// [d]_q! = prod_{j=1}^d (1 + q + ... + q^{j-1}).
PoincarePoly q_factorial(int d);

/// dim of G x^P F(f): sum_i d_i(d_i-1)/2 + sum_k (d^{k-1})_{i_k+1}.
int bundle_dim(const DimFiltration& f);

/// sum_i d_i^2 - dim End(M).
int orbit_dim(const Shape& shape);

KatoGdim kato_gdim(const Shape& shape);

}  // namespace qfv
