#pragma once

// Exact arithmetic over a small prime field and dense matrices over it.

#include <cstdint>
#include <vector>

namespace qfv {

using Residue = std::uint32_t;

class PrimeField {
public:
    /// p must be a prime below 2^15.
    explicit PrimeField(std::uint32_t p);

    std::uint32_t p() const { return p_; }
    Residue reduce(long long v) const;
    Residue add(Residue a, Residue b) const { return (a + b) % p_; }
    Residue sub(Residue a, Residue b) const { return (a + p_ - b) % p_; }
    Residue mul(Residue a, Residue b) const { return (a * b) % p_; }
    Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
    Residue inv(Residue a) const;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

/// Row-major dense matrix with entries in a prime field.
class FpMatrix {
public:
    FpMatrix() = default;
    FpMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Residue operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
    Residue& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

    std::vector<Residue> row(int i) const;
    void append_row(const std::vector<Residue>& values);

    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Residue> data_;
};

/// M * x.
std::vector<Residue> apply(const PrimeField& F, const FpMatrix& m, const std::vector<Residue>& x);

/// Reduced row echelon form with zero rows dropped; pivot columns are the
/// first nonzero positions of the returned rows.
struct Echelon {
    FpMatrix rows;
    std::vector<int> pivots;
};

Echelon echelonize(const PrimeField& F, FpMatrix m);
int rank(const PrimeField& F, const FpMatrix& m);

/// Basis of { x : m x = 0 } as the rows of the returned matrix.
FpMatrix kernel(const PrimeField& F, const FpMatrix& m);

/// Reduces x against an echelon basis; the result is zero iff x lies in the
/// span.
std::vector<Residue> reduce_against(const PrimeField& F, const Echelon& e, std::vector<Residue> x);

bool is_zero(const std::vector<Residue>& x);

}  // namespace qfv
