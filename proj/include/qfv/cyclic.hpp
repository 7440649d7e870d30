#pragma once

// Arithmetic of the oriented n-cycle: vertices, rows E_i[l], shapes
// (multipartitions) and complete dimension filtrations.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qfv {

/// Raised for malformed or out-of-range inputs.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Canonical representative in 1..n of an integer residue mod n.
inline int wrap_vertex(long long v, int n) {
    long long r = ((v - 1) % n + n) % n;
    return static_cast<int>(r) + 1;
}

struct Vertex {
    int value = 1;

    Vertex() = default;
    constexpr explicit Vertex(int v) : value(v) {}

    static Vertex wrap(long long v, int n) { return Vertex(wrap_vertex(v, n)); }

    friend bool operator==(Vertex, Vertex) = default;
    friend auto operator<=>(Vertex, Vertex) = default;
};

/// One coordinate per vertex, indexed 1..n through at().
class DimensionVector {
public:
    DimensionVector() = default;
    explicit DimensionVector(int n) : coords_(static_cast<std::size_t>(n), 0) {}
    explicit DimensionVector(std::vector<int> coords);

    int n() const { return static_cast<int>(coords_.size()); }
    int at(Vertex v) const { return coords_.at(static_cast<std::size_t>(v.value - 1)); }
    int& at(Vertex v) { return coords_.at(static_cast<std::size_t>(v.value - 1)); }
    int total() const;
    const std::vector<int>& coords() const { return coords_; }

    friend bool operator==(const DimensionVector&, const DimensionVector&) = default;

private:
    std::vector<int> coords_;
};

/// The indecomposable E_socle[len]: a row of len boxes ending at column `socle`.
struct Row {
    Vertex socle;
    int len = 1;

    Vertex top(int n) const { return Vertex::wrap(socle.value - len + 1, n); }

    friend bool operator==(const Row&, const Row&) = default;
};

/// Position of a box: 1-based row index and 1-based position in the row.
struct Box {
    int row = 1;
    int pos = 1;

    friend bool operator==(const Box&, const Box&) = default;
    friend auto operator<=>(const Box&, const Box&) = default;
};

Vertex column_label(const Row& row, int pos, int n);

/// Isomorphism class of a nilpotent module, as an ordered list of rows.
///
/// The default constructor path sorts rows canonically: by top vertex
/// ascending, then by length descending. `Shape::as_given` keeps the
/// caller's order; the recursion in `betti` relies on this to preserve row
/// identity while boxes are removed.
class Shape {
public:
    Shape() = default;
    Shape(int n, std::vector<Row> rows);

    static Shape as_given(int n, std::vector<Row> rows);

    int n() const { return n_; }
    const std::vector<Row>& rows() const { return rows_; }
    const Row& row(int index) const { return rows_.at(static_cast<std::size_t>(index - 1)); }
    int num_rows() const { return static_cast<int>(rows_.size()); }
    int num_boxes() const;
    bool empty() const { return rows_.empty(); }
    bool is_canonical() const;

    Vertex label(const Box& b) const { return column_label(row(b.row), b.pos, n_); }

    /// Rows sorted into canonical order (identity when already canonical).
    Shape canonical() const { return Shape(n_, rows_); }

    friend bool operator==(const Shape&, const Shape&) = default;

private:
    int n_ = 1;
    std::vector<Row> rows_;
};

/// A complete dimension filtration, written as the word (i_1, ..., i_r).
class DimFiltration {
public:
    DimFiltration() = default;
    DimFiltration(int n, std::vector<Vertex> word);

    /// Parses a comma separated word such as "3,2,2,1".
    static DimFiltration parse(int n, const std::string& text);

    int n() const { return n_; }
    int length() const { return static_cast<int>(word_.size()); }
    const std::vector<Vertex>& word() const { return word_; }
    Vertex at(int k) const { return word_.at(static_cast<std::size_t>(k - 1)); }

    /// The filtration with its first step removed.
    DimFiltration tail() const;
    std::string to_string() const;

    friend bool operator==(const DimFiltration&, const DimFiltration&) = default;

private:
    int n_ = 1;
    std::vector<Vertex> word_;
};

DimensionVector dim_vector(const Shape& shape);

/// Partial sum d^k = e_{i_1} + ... + e_{i_k}.
DimensionVector filtration_dims(const DimFiltration& f, int k);

/// filtration_dims(f, r) == dim_vector(shape), and the cycle sizes agree.
bool compatible(const Shape& shape, const DimFiltration& f);

/// All words of the multiset of column labels of `dims` (the set I_d), in
/// lexicographic order.
std::vector<DimFiltration> all_filtrations(const DimensionVector& dims);

}  // namespace qfv
