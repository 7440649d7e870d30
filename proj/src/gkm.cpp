#include "qfv/gkm.hpp"

#include "qfv/parallel.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qfv {

namespace {

int current_length(const std::vector<int>& row, int bound) {
    return static_cast<int>(std::count_if(row.begin(), row.end(), [bound](int e) { return e <= bound; }));
}

int segment_max(const std::vector<int>& row, int last_pos, int len) {
    int top = 0;
    for (int d = 0; d < len; ++d) top = std::max(top, row[static_cast<std::size_t>(last_pos - 1 - d)]);
    return top;
}

}  // namespace

std::vector<Swap> orbit_limits(const RowMultiTableau& t) {
    std::vector<Swap> out;
    const auto& fill = t.filling();
    for (int k = 1; k <= t.size(); ++k) {
        const Box bk = t.box_of(k);
        const Vertex ck = t.column_of(k);
        const auto& row_k = fill[static_cast<std::size_t>(bk.row - 1)];
        const int len_k = current_length(row_k, k);
        for (int s = 1; s < k; ++s) {
            const Box bs = t.box_of(s);
            if (bs.row == bk.row || t.column_of(s) != ck) continue;
            const auto& row_s = fill[static_cast<std::size_t>(bs.row - 1)];
            if (std::any_of(row_s.begin(), row_s.end(), [&](int e) { return s < e && e < k; })) continue;
            const int len_s = current_length(row_s, s);
            if (!(len_s > len_k || (len_s == len_k && bs.row > bk.row))) continue;

            auto next = fill;
            auto& into_k = next[static_cast<std::size_t>(bk.row - 1)];
            auto& into_s = next[static_cast<std::size_t>(bs.row - 1)];
            for (int d = 0; d < len_k; ++d) {
                auto a = static_cast<std::size_t>(bk.pos - 1 - d);
                auto b = static_cast<std::size_t>(bs.pos - 1 - d);
                into_s[b] = std::max(row_k[a], row_s[b]);
                into_k[a] = std::min(row_k[a], row_s[b]);
            }
            out.push_back(Swap{RowMultiTableau(t.shape(), std::move(next)), bk.row, bs.row, k, s});
        }
    }
    return out;
}

std::vector<Swap> admissible_swaps(const RowMultiTableau& t) {
    std::vector<Swap> out = orbit_limits(t);
    for (const RowMultiTableau& other : enumerate_tableaux(t.shape(), dim_filtration_of(t))) {
        if (other == t) continue;
        for (const Swap& s : orbit_limits(other)) {
            if (!(s.target == t)) continue;
            // Seen from t: the segments end where k and m sat in `other`.
            const auto& fill = t.filling();
            const int len = current_length(other.filling()[static_cast<std::size_t>(s.p - 1)], s.k);
            const int end_q = other.box_of(s.m).pos;
            const int end_p = other.box_of(s.k).pos;
            out.push_back(Swap{other, s.q, s.p, segment_max(fill[static_cast<std::size_t>(s.q - 1)], end_q, len),
                               segment_max(fill[static_cast<std::size_t>(s.p - 1)], end_p, len)});
        }
    }
    std::sort(out.begin(), out.end(), [](const Swap& a, const Swap& b) {
        if (!(a.target == b.target)) return a.target < b.target;
        return std::minmax(a.p, a.q) < std::minmax(b.p, b.q);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Swap& a, const Swap& b) {
                              return a.target == b.target && std::minmax(a.p, a.q) == std::minmax(b.p, b.q);
                          }),
              out.end());
    return out;
}

GkmGraph build_gkm_graph(const Shape& shape, const DimFiltration& f) {
    if (!compatible(shape, f)) throw InputError("filtration " + f.to_string() + " is not compatible with the shape");
    GkmGraph g;
    g.shape = shape;
    g.filtration = f;
    g.t = shape.num_rows();
    g.nodes = enumerate_tableaux(shape, f);

    std::map<std::vector<std::vector<int>>, int> index;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) index.emplace(g.nodes[i].filling(), static_cast<int>(i));

    auto per_node = parallel_map(g.nodes.size(), [&](std::size_t a) {
        std::vector<GkmEdge> edges;
        for (const Swap& s : orbit_limits(g.nodes[a])) {
            auto it = index.find(s.target.filling());
            if (it == index.end()) throw std::logic_error("orbit limit " + s.target.to_string() + " is not a tableau of the graph");
            edges.push_back(GkmEdge{static_cast<int>(a), it->second, s.p, s.q, s.k, s.m});
        }
        return edges;
    });

    auto key = [](const GkmEdge& e) {
        auto [lo, hi] = std::minmax(e.a, e.b);
        auto [p, q] = std::minmax(e.p, e.q);
        return std::make_tuple(lo, hi, p, q);
    };
    for (auto& edges : per_node) g.edges.insert(g.edges.end(), edges.begin(), edges.end());
    std::stable_sort(g.edges.begin(), g.edges.end(), [&](const GkmEdge& x, const GkmEdge& y) { return key(x) < key(y); });
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end(), [&](const GkmEdge& x, const GkmEdge& y) { return key(x) == key(y); }),
                  g.edges.end());
    return g;
}

MembershipReport membership_check(const GkmGraph& g, const std::vector<Polynomial>& tuple) {
    if (tuple.size() != g.nodes.size())
        throw InputError("tuple has " + std::to_string(tuple.size()) + " polynomials, graph has " +
                         std::to_string(g.nodes.size()) + " nodes");
    for (std::size_t i = 0; i < tuple.size(); ++i)
        if (tuple[i].max_variable() > g.t)
            throw InputError("polynomial " + std::to_string(i) + " uses x" + std::to_string(tuple[i].max_variable()) +
                             " but the torus has rank " + std::to_string(g.t));
    auto ok = parallel_map(g.edges.size(), [&](std::size_t j) {
        const GkmEdge& e = g.edges[j];
        Polynomial diff = tuple[static_cast<std::size_t>(e.a)] - tuple[static_cast<std::size_t>(e.b)];
        return static_cast<char>(diff.divisible_by_difference(e.p, e.q));
    });
    MembershipReport report;
    for (std::size_t j = 0; j < ok.size(); ++j)
        if (!ok[j]) report.failing_edges.push_back(j);
    report.member = report.failing_edges.empty();
    return report;
}

std::string export_dot(const GkmGraph& g) {
    std::ostringstream out;
    out << "digraph gkm {\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        out << "  n" << i << " [label=\"" << g.nodes[i].to_string() << "\"];\n";
    for (const GkmEdge& e : g.edges)
        out << "  n" << e.a << " -> n" << e.b << " [label=\"x" << e.p << "-x" << e.q << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace qfv
