#include "qfv/field.hpp"

#include "qfv/cyclic.hpp"

#include <algorithm>

namespace qfv {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2 || p >= (1u << 15)) throw InputError("field characteristic must be a prime below 32768");
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw InputError(std::to_string(p) + " is not prime");
}

Residue PrimeField::reduce(long long v) const {
    long long m = static_cast<long long>(p_);
    return static_cast<Residue>(((v % m) + m) % m);
}

Residue PrimeField::inv(Residue a) const {
    if (a % p_ == 0) throw std::domain_error("inverse of zero");
    // Fermat: a^(p-2).
    Residue result = 1;
    Residue base = a % p_;
    for (std::uint32_t e = p_ - 2; e; e >>= 1) {
        if (e & 1u) result = mul(result, base);
        base = mul(base, base);
    }
    return result;
}

std::vector<Residue> FpMatrix::row(int i) const {
    auto first = data_.begin() + static_cast<std::ptrdiff_t>(i * cols_);
    return {first, first + cols_};
}

void FpMatrix::append_row(const std::vector<Residue>& values) {
    if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(values.size());
    if (static_cast<int>(values.size()) != cols_) throw std::logic_error("row width mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

std::vector<Residue> apply(const PrimeField& F, const FpMatrix& m, const std::vector<Residue>& x) {
    std::vector<Residue> y(static_cast<std::size_t>(m.rows()), 0);
    for (int i = 0; i < m.rows(); ++i) {
        Residue acc = 0;
        for (int j = 0; j < m.cols(); ++j) acc = F.add(acc, F.mul(m(i, j), x[static_cast<std::size_t>(j)]));
        y[static_cast<std::size_t>(i)] = acc;
    }
    return y;
}

Echelon echelonize(const PrimeField& F, FpMatrix m) {
    Echelon e;
    int lead = 0;
    for (int col = 0; col < m.cols() && lead < m.rows(); ++col) {
        int pivot = -1;
        for (int i = lead; i < m.rows(); ++i)
            if (m(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(lead, j));
        Residue s = F.inv(m(lead, col));
        for (int j = 0; j < m.cols(); ++j) m(lead, j) = F.mul(m(lead, j), s);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == lead || m(i, col) == 0) continue;
            Residue factor = m(i, col);
            for (int j = 0; j < m.cols(); ++j) m(i, j) = F.sub(m(i, j), F.mul(factor, m(lead, j)));
        }
        e.pivots.push_back(col);
        ++lead;
    }
    e.rows = FpMatrix(0, m.cols());
    for (int i = 0; i < lead; ++i) e.rows.append_row(m.row(i));
    return e;
}

int rank(const PrimeField& F, const FpMatrix& m) {
    return static_cast<int>(echelonize(F, m).pivots.size());
}

FpMatrix kernel(const PrimeField& F, const FpMatrix& m) {
    Echelon e = echelonize(F, m);
    FpMatrix out(0, m.cols());
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<Residue> v(static_cast<std::size_t>(m.cols()), 0);
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            v[static_cast<std::size_t>(e.pivots[i])] = F.neg(e.rows(static_cast<int>(i), free));
        out.append_row(v);
    }
    return out;
}

std::vector<Residue> reduce_against(const PrimeField& F, const Echelon& e, std::vector<Residue> x) {
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        Residue c = x[static_cast<std::size_t>(e.pivots[i])];
        if (c == 0) continue;
        for (int j = 0; j < e.rows.cols(); ++j)
            x[static_cast<std::size_t>(j)] = F.sub(x[static_cast<std::size_t>(j)], F.mul(c, e.rows(static_cast<int>(i), j)));
    }
    return x;
}

bool is_zero(const std::vector<Residue>& x) {
    return std::all_of(x.begin(), x.end(), [](Residue v) { return v == 0; });
}

}  // namespace qfv
