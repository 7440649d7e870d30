#include "qfv/betti.hpp"

#include "qfv/ffmod.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace qfv {

PoincarePoly::PoincarePoly(std::vector<std::uint64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void PoincarePoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::uint64_t PoincarePoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

std::uint64_t PoincarePoly::total() const {
    std::uint64_t s = 0;
    for (auto c : coeffs_) s += c;
    return s;
}

std::uint64_t PoincarePoly::evaluate(std::uint64_t x) const {
    unsigned __int128 acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
        if (acc > UINT64_MAX) throw std::overflow_error("polynomial value exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

PoincarePoly& PoincarePoly::add_shifted(const PoincarePoly& other, int shift) {
    if (other.is_zero()) return *this;
    if (shift < 0) throw std::logic_error("negative shift of a nonzero polynomial");
    std::size_t need = other.coeffs_.size() + static_cast<std::size_t>(shift);
    if (coeffs_.size() < need) coeffs_.resize(need, 0);
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k + static_cast<std::size_t>(shift)] += other.coeffs_[k];
    return *this;
}

PoincarePoly PoincarePoly::operator*(const PoincarePoly& other) const {
    if (is_zero() || other.is_zero()) return {};
    std::vector<std::uint64_t> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
    return PoincarePoly(std::move(out));
}

namespace {

std::string monomial(std::uint64_t c, long long k, const char* var) {
    std::string out;
    if (c != 1 || k == 0) out += std::to_string(c);
    if (k != 0) {
        out += var;
        if (k != 1) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace

std::string PoincarePoly::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        if (!out.empty()) out += " + ";
        out += monomial(coeffs_[k], static_cast<long long>(k), "q");
    }
    return out.empty() ? "0" : out;
}

std::int64_t KatoGdim::total() const {
    std::int64_t s = 0;
    for (const auto& [k, c] : coeffs) s += c;
    return s;
}

std::string KatoGdim::to_string() const {
    std::string out;
    for (const auto& [k, c] : coeffs) {
        if (c == 0) continue;
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        out += monomial(static_cast<std::uint64_t>(c < 0 ? -c : c), k, "t");
    }
    return out.empty() ? "0" : out;
}

std::vector<Box> end_boxes(const Shape& shape, Vertex i) {
    std::vector<Box> out;
    for (int row = 1; row <= shape.num_rows(); ++row)
        if (shape.row(row).socle == i) out.push_back(Box{row, shape.row(row).len});
    return out;
}

Shape remove_box(const Shape& shape, const Box& b) {
    if (b.row < 1 || b.row > shape.num_rows()) throw InputError("box row " + std::to_string(b.row) + " out of range");
    if (b.pos != shape.row(b.row).len) throw InputError("only the last box of a row can be removed");
    std::vector<Row> rows = shape.rows();
    Row& row = rows[static_cast<std::size_t>(b.row - 1)];
    if (row.len == 1) {
        rows.erase(rows.begin() + (b.row - 1));
    } else {
        row.socle = Vertex::wrap(row.socle.value - 1, shape.n());
        --row.len;
    }
    return Shape::as_given(shape.n(), std::move(rows));
}

namespace {

// Rows reduced to (socle, len) plus the remaining word; the recursion only
// sees the multiset of rows.
std::string memo_key(int n, const std::vector<Row>& rows, const DimFiltration& f, int from) {
    std::vector<std::pair<int, int>> sorted;
    for (const Row& r : rows) sorted.emplace_back(r.socle.value, r.len);
    std::sort(sorted.begin(), sorted.end());
    std::string key = std::to_string(n) + ':';
    for (auto [s, l] : sorted) key += std::to_string(s) + '.' + std::to_string(l) + ',';
    key += '|';
    for (int k = from; k <= f.length(); ++k) key += std::to_string(f.at(k).value) + ',';
    return key;
}

template <typename Value>
class MemoTable {
public:
    bool find(const std::string& key, Value& out) const {
        std::shared_lock lock(mutex_);
        auto it = table_.find(key);
        if (it == table_.end()) return false;
        out = it->second;
        return true;
    }
    void insert(const std::string& key, const Value& v) {
        std::unique_lock lock(mutex_);
        table_.emplace(key, v);
    }
    void clear() {
        std::unique_lock lock(mutex_);
        table_.clear();
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, Value> table_;
};

MemoTable<std::uint64_t>& count_memo() {
    static MemoTable<std::uint64_t> t;
    return t;
}

MemoTable<PoincarePoly>& graded_memo() {
    static MemoTable<PoincarePoly> t;
    return t;
}

// End boxes at i ordered by row length, then row index.
std::vector<int> ordered_end_rows(const std::vector<Row>& rows, Vertex i) {
    std::vector<int> out;
    for (std::size_t j = 0; j < rows.size(); ++j)
        if (rows[j].socle == i) out.push_back(static_cast<int>(j));
    std::stable_sort(out.begin(), out.end(), [&](int a, int b) {
        return rows[static_cast<std::size_t>(a)].len < rows[static_cast<std::size_t>(b)].len;
    });
    return out;
}

std::vector<Row> drop_end(const std::vector<Row>& rows, int j, int n) {
    std::vector<Row> out = rows;
    Row& row = out[static_cast<std::size_t>(j)];
    if (row.len == 1) {
        out.erase(out.begin() + j);
    } else {
        row.socle = Vertex::wrap(row.socle.value - 1, n);
        --row.len;
    }
    return out;
}

std::uint64_t count_rec(int n, const std::vector<Row>& rows, const DimFiltration& f, int step) {
    if (step > f.length()) return rows.empty() ? 1 : 0;
    std::string key = memo_key(n, rows, f, step);
    std::uint64_t cached = 0;
    if (count_memo().find(key, cached)) return cached;
    std::uint64_t total = 0;
    for (int j : ordered_end_rows(rows, f.at(step))) total += count_rec(n, drop_end(rows, j, n), f, step + 1);
    count_memo().insert(key, total);
    return total;
}

PoincarePoly graded_rec(int n, const std::vector<Row>& rows, const DimFiltration& f, int step) {
    if (step > f.length()) return rows.empty() ? PoincarePoly::one() : PoincarePoly();
    std::string key = memo_key(n, rows, f, step);
    PoincarePoly cached;
    if (graded_memo().find(key, cached)) return cached;
    PoincarePoly total;
    auto ends = ordered_end_rows(rows, f.at(step));
    const int s = static_cast<int>(ends.size());
    for (int m = 1; m <= s; ++m)
        total.add_shifted(graded_rec(n, drop_end(rows, ends[static_cast<std::size_t>(m - 1)], n), f, step + 1), s - m);
    graded_memo().insert(key, total);
    return total;
}

void check_cycle(const Shape& shape, const DimFiltration& f) {
    if (shape.n() != f.n()) throw InputError("shape and filtration live on different cycles");
}

}  // namespace

std::uint64_t f_count(const Shape& shape, const DimFiltration& f) {
    check_cycle(shape, f);
    return count_rec(shape.n(), shape.rows(), f, 1);
}

PoincarePoly f_graded(const Shape& shape, const DimFiltration& f) {
    check_cycle(shape, f);
    return graded_rec(shape.n(), shape.rows(), f, 1);
}

void clear_betti_cache() {
    count_memo().clear();
    graded_memo().clear();
}

PoincarePoly q_factorial(int d) {
    if (d < 0) throw InputError("negative q-factorial");
    PoincarePoly out = PoincarePoly::one();
    for (int j = 1; j <= d; ++j) out = out * PoincarePoly(std::vector<std::uint64_t>(static_cast<std::size_t>(j), 1));
    return out;
}

int bundle_dim(const DimFiltration& f) {
    const int n = f.n();
    DimensionVector total = filtration_dims(f, f.length());
    int dim = 0;
    for (int d : total.coords()) dim += d * (d - 1) / 2;
    DimensionVector partial(n);
    for (int k = 1; k <= f.length(); ++k) {
        Vertex i = f.at(k);
        dim += partial.at(Vertex::wrap(i.value + 1, n));
        ++partial.at(i);
    }
    return dim;
}

int orbit_dim(const Shape& shape) {
    int sq = 0;
    const DimensionVector dims = dim_vector(shape);
    for (int d : dims.coords()) sq += d * d;
    return sq - dim_end(shape);
}

KatoGdim kato_gdim(const Shape& shape) {
    KatoGdim out;
    out.offset = orbit_dim(shape);
    for (const DimFiltration& f : all_filtrations(dim_vector(shape))) {
        PoincarePoly p = f_graded(shape, f);
        int e = bundle_dim(f);
        for (int j = 0; j <= p.degree(); ++j)
            if (p.coeff(j)) out.coeffs[e - j] += static_cast<std::int64_t>(p.coeff(j));
    }
    return out;
}

}  // namespace qfv
