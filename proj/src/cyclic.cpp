#include "qfv/cyclic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qfv {

DimensionVector::DimensionVector(std::vector<int> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw InputError("dimension vector needs at least one vertex");
    for (int c : coords_)
        if (c < 0) throw InputError("dimension vector entries must be nonnegative");
}

int DimensionVector::total() const {
    return std::accumulate(coords_.begin(), coords_.end(), 0);
}

Vertex column_label(const Row& row, int pos, int n) {
    if (pos < 1 || pos > row.len)
        throw InputError("box position " + std::to_string(pos) + " outside row of length " +
                         std::to_string(row.len));
    return Vertex::wrap(static_cast<long long>(row.socle.value) - row.len + pos, n);
}

namespace {

void check_rows(int n, const std::vector<Row>& rows) {
    if (n < 1) throw InputError("cycle length n must be at least 1");
    for (const Row& r : rows) {
        if (r.len < 1) throw InputError("row lengths must be positive");
        if (r.socle.value < 1 || r.socle.value > n)
            throw InputError("socle vertex " + std::to_string(r.socle.value) + " outside 1.." +
                             std::to_string(n));
    }
}

bool canonical_less(const Row& a, const Row& b, int n) {
    int ta = a.top(n).value;
    int tb = b.top(n).value;
    if (ta != tb) return ta < tb;
    return a.len > b.len;
}

}  // namespace

Shape::Shape(int n, std::vector<Row> rows) : n_(n), rows_(std::move(rows)) {
    check_rows(n_, rows_);
    std::stable_sort(rows_.begin(), rows_.end(),
                     [n](const Row& a, const Row& b) { return canonical_less(a, b, n); });
}

Shape Shape::as_given(int n, std::vector<Row> rows) {
    check_rows(n, rows);
    Shape s;
    s.n_ = n;
    s.rows_ = std::move(rows);
    return s;
}

int Shape::num_boxes() const {
    int total = 0;
    for (const Row& r : rows_) total += r.len;
    return total;
}

bool Shape::is_canonical() const {
    return std::is_sorted(rows_.begin(), rows_.end(),
                          [this](const Row& a, const Row& b) { return canonical_less(a, b, n_); });
}

DimFiltration::DimFiltration(int n, std::vector<Vertex> word) : n_(n), word_(std::move(word)) {
    if (n_ < 1) throw InputError("cycle length n must be at least 1");
    for (Vertex v : word_)
        if (v.value < 1 || v.value > n_)
            throw InputError("filtration vertex " + std::to_string(v.value) + " outside 1.." +
                             std::to_string(n_));
}

DimFiltration DimFiltration::parse(int n, const std::string& text) {
    std::vector<Vertex> word;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto first = item.find_first_not_of(" \t");
        if (first == std::string::npos) {
            if (text.find_first_not_of(" \t,") == std::string::npos) break;
            throw InputError("empty entry in filtration word '" + text + "'");
        }
        auto last = item.find_last_not_of(" \t");
        std::string token = item.substr(first, last - first + 1);
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw InputError("bad vertex '" + token + "' in filtration word");
        }
        if (used != token.size()) throw InputError("bad vertex '" + token + "' in filtration word");
        word.emplace_back(value);
    }
    return DimFiltration(n, std::move(word));
}

DimFiltration DimFiltration::tail() const {
    if (word_.empty()) throw InputError("tail of the empty filtration");
    return DimFiltration(n_, std::vector<Vertex>(word_.begin() + 1, word_.end()));
}

std::string DimFiltration::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < word_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(word_[i].value);
    }
    return out;
}

DimensionVector dim_vector(const Shape& shape) {
    DimensionVector d(shape.n());
    for (const Row& r : shape.rows())
        for (int pos = 1; pos <= r.len; ++pos) ++d.at(column_label(r, pos, shape.n()));
    return d;
}

DimensionVector filtration_dims(const DimFiltration& f, int k) {
    if (k < 0 || k > f.length())
        throw InputError("filtration step " + std::to_string(k) + " outside 0.." +
                         std::to_string(f.length()));
    DimensionVector d(f.n());
    for (int j = 1; j <= k; ++j) ++d.at(f.at(j));
    return d;
}

bool compatible(const Shape& shape, const DimFiltration& f) {
    if (shape.n() != f.n()) return false;
    return filtration_dims(f, f.length()) == dim_vector(shape);
}

std::vector<DimFiltration> all_filtrations(const DimensionVector& dims) {
    std::vector<int> letters;
    for (int v = 1; v <= dims.n(); ++v)
        letters.insert(letters.end(), static_cast<std::size_t>(dims.at(Vertex(v))), v);
    std::vector<DimFiltration> out;
    do {
        std::vector<Vertex> word;
        word.reserve(letters.size());
        for (int v : letters) word.emplace_back(v);
        out.emplace_back(dims.n(), std::move(word));
    } while (std::next_permutation(letters.begin(), letters.end()));
    return out;
}

}  // namespace qfv
