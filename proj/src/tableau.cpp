#include "qfv/tableau.hpp"

#include "qfv/parallel.hpp"

#include <algorithm>

namespace qfv {

RowMultiTableau::RowMultiTableau(Shape shape, std::vector<std::vector<int>> filling)
    : shape_(std::move(shape)), filling_(std::move(filling)) {
    if (static_cast<int>(filling_.size()) != shape_.num_rows())
        throw InputError("filling has " + std::to_string(filling_.size()) + " rows, shape has " +
                         std::to_string(shape_.num_rows()));
    int r = shape_.num_boxes();
    where_.assign(static_cast<std::size_t>(r), Box{0, 0});
    for (int row = 1; row <= shape_.num_rows(); ++row) {
        const auto& entries = filling_[static_cast<std::size_t>(row - 1)];
        if (static_cast<int>(entries.size()) != shape_.row(row).len)
            throw InputError("row " + std::to_string(row) + " of the filling has the wrong length");
        for (std::size_t pos = 0; pos < entries.size(); ++pos) {
            int e = entries[pos];
            if (e < 1 || e > r) throw InputError("entry " + std::to_string(e) + " outside 1.." + std::to_string(r));
            if (where_[static_cast<std::size_t>(e - 1)].row != 0)
                throw InputError("entry " + std::to_string(e) + " appears twice");
            if (pos > 0 && entries[pos - 1] >= e)
                throw InputError("row " + std::to_string(row) + " is not increasing");
            where_[static_cast<std::size_t>(e - 1)] = Box{row, static_cast<int>(pos) + 1};
        }
    }
}

int RowMultiTableau::entry(const Box& b) const {
    return filling_.at(static_cast<std::size_t>(b.row - 1)).at(static_cast<std::size_t>(b.pos - 1));
}

const Box& RowMultiTableau::box_of(int k) const {
    if (k < 1 || k > size())
        throw InputError("entry " + std::to_string(k) + " outside 1.." + std::to_string(size()));
    return where_[static_cast<std::size_t>(k - 1)];
}

std::string RowMultiTableau::to_string() const {
    std::string out = "[";
    for (std::size_t j = 0; j < filling_.size(); ++j) {
        if (j) out += ',';
        out += '[';
        for (std::size_t p = 0; p < filling_[j].size(); ++p) {
            if (p) out += ',';
            out += std::to_string(filling_[j][p]);
        }
        out += ']';
    }
    return out + "]";
}

namespace {

struct Placement {
    const Shape& shape;
    const DimFiltration& f;
    std::vector<int> unfilled;  // per row: number of unfilled boxes
    std::vector<std::vector<int>> filling;
    std::vector<RowMultiTableau>* out;

    // Places the entry for filtration step k (1-based).
    void place(int k) {
        int r = f.length();
        if (k > r) {
            out->emplace_back(shape, filling);
            return;
        }
        for (std::size_t j = 0; j < unfilled.size(); ++j) {
            if (candidate(j, k)) {
                descend(j, k);
            }
        }
    }

    bool candidate(std::size_t j, int k) const {
        int u = unfilled[j];
        return u > 0 && column_label(shape.rows()[j], u, shape.n()) == f.at(k);
    }

    void descend(std::size_t j, int k) {
        int r = f.length();
        int& u = unfilled[j];
        filling[j][static_cast<std::size_t>(u - 1)] = r + 1 - k;
        --u;
        place(k + 1);
        ++u;
        filling[j][static_cast<std::size_t>(u - 1)] = 0;
    }
};

// Current length of row `row` at the moment entry k is placed: entries <= k.
int alive_length(const RowMultiTableau& t, int row, int k) {
    const auto& entries = t.filling()[static_cast<std::size_t>(row - 1)];
    return static_cast<int>(std::count_if(entries.begin(), entries.end(), [k](int e) { return e <= k; }));
}

bool row_free_between(const RowMultiTableau& t, int row, int lo, int hi) {
    const auto& entries = t.filling()[static_cast<std::size_t>(row - 1)];
    return std::none_of(entries.begin(), entries.end(), [&](int e) { return lo < e && e < hi; });
}

}  // namespace

std::vector<RowMultiTableau> enumerate_tableaux(const Shape& shape, const DimFiltration& f) {
    std::vector<RowMultiTableau> out;
    if (!compatible(shape, f)) return out;

    std::vector<int> lengths;
    std::vector<std::vector<int>> empty_filling;
    for (const Row& row : shape.rows()) {
        lengths.push_back(row.len);
        empty_filling.emplace_back(static_cast<std::size_t>(row.len), 0);
    }
    Placement root{shape, f, lengths, empty_filling, &out};
    if (f.length() < 10) {
        root.place(1);
        return out;
    }

    // Split over the first placement; merging in row order keeps the output
    // identical to the sequential traversal.
    std::vector<std::size_t> first;
    for (std::size_t j = 0; j < lengths.size(); ++j)
        if (root.candidate(j, 1)) first.push_back(j);
    auto parts = parallel_map(first.size(), [&](std::size_t idx) {
        std::vector<RowMultiTableau> part;
        Placement branch{shape, f, lengths, empty_filling, &part};
        branch.descend(first[idx], 1);
        return part;
    });
    for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
    return out;
}

int d_tau(const RowMultiTableau& t, int k) {
    const Box& bk = t.box_of(k);
    Vertex ck = t.column_of(k);
    int len_k = alive_length(t, bk.row, k);
    int count = 0;
    for (int s = 1; s < k; ++s) {
        const Box& bs = t.box_of(s);
        if (bs.row == bk.row || t.column_of(s) != ck) continue;
        if (!row_free_between(t, bs.row, s, k)) continue;
        int len_s = alive_length(t, bs.row, s);
        if (len_s > len_k || (len_s == len_k && bs.row > bk.row)) ++count;
    }
    return count;
}

int row_index_d_tau(const RowMultiTableau& t, int k) {
    const Box& bk = t.box_of(k);
    Vertex ck = t.column_of(k);
    int count = 0;
    for (int s = 1; s < k; ++s) {
        const Box& bs = t.box_of(s);
        if (bs.row > bk.row && t.column_of(s) == ck && row_free_between(t, bs.row, s, k)) ++count;
    }
    return count;
}

std::vector<int> d_tau_table(const RowMultiTableau& t) {
    // Replays the placement: entries r, r-1, ..., 1 each remove one box.
    const Shape& shape = t.shape();
    std::vector<int> unfilled;
    for (const Row& row : shape.rows()) unfilled.push_back(row.len);
    std::vector<int> table(static_cast<std::size_t>(t.size()), 0);
    for (int k = t.size(); k >= 1; --k) {
        const Box& bk = t.box_of(k);
        Vertex ck = t.column_of(k);
        int len_k = unfilled[static_cast<std::size_t>(bk.row - 1)];
        int count = 0;
        for (int j = 1; j <= shape.num_rows(); ++j) {
            int u = unfilled[static_cast<std::size_t>(j - 1)];
            if (j == bk.row || u == 0) continue;
            if (column_label(shape.row(j), u, shape.n()) != ck) continue;
            if (u > len_k || (u == len_k && j > bk.row)) ++count;
        }
        table[static_cast<std::size_t>(k - 1)] = count;
        --unfilled[static_cast<std::size_t>(bk.row - 1)];
    }
    return table;
}

std::vector<int> row_index_d_tau_table(const RowMultiTableau& t) {
    std::vector<int> table;
    for (int k = 1; k <= t.size(); ++k) table.push_back(row_index_d_tau(t, k));
    return table;
}

int cell_dim(const RowMultiTableau& t) {
    int total = 0;
    for (int d : d_tau_table(t)) total += d;
    return total;
}

DimFiltration dim_filtration_of(const RowMultiTableau& t) {
    std::vector<Vertex> word;
    int r = t.size();
    for (int k = 1; k <= r; ++k) word.push_back(t.column_of(r + 1 - k));
    return DimFiltration(t.shape().n(), std::move(word));
}

std::vector<SplitSummand> tableau_to_split_module(const RowMultiTableau& t) {
    int r = t.size();
    std::vector<SplitSummand> out;
    for (int row = 1; row <= t.shape().num_rows(); ++row) {
        const auto& entries = t.filling()[static_cast<std::size_t>(row - 1)];
        SplitSummand summand{t.shape().row(row).socle, std::vector<int>(static_cast<std::size_t>(r), 0)};
        for (int j = 1; j <= r; ++j) {
            summand.lambda[static_cast<std::size_t>(j - 1)] = static_cast<int>(
                std::count_if(entries.begin(), entries.end(), [j](int e) { return e >= j; }));
        }
        out.push_back(std::move(summand));
    }
    return out;
}

}  // namespace qfv
