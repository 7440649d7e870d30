#pragma once

// Torus fixed points, one-dimensional orbits and the moment graph of a
// complete quiver flag variety.

#include "qfv/cyclic.hpp"
#include "qfv/polynomial.hpp"
#include "qfv/tableau.hpp"

#include <string>
#include <vector>

namespace qfv {

/// An admissible swap from a tableau to `target`. Rows p, q carry the
/// exchanged segments; k and m are their largest entries (k in row p).
struct Swap {
    RowMultiTableau target;
    int p = 0;
    int q = 0;
    int k = 0;
    int m = 0;
};

/// The limit points of the one-dimensional torus orbits inside C_tau, one per
/// star coordinate. For entry k and a row r_s counted by d_tau(k), the
/// current segment of r_k (entries <= k) is aligned with the equally long
/// segment of r_s ending at s; each aligned pair sends its larger entry to
/// r_s and its smaller one to r_k.
std::vector<Swap> orbit_limits(const RowMultiTableau& t);

/// Every tableau joined to t by a one-dimensional orbit: the limits of t's
/// own cell plus the tableaux whose cells have t as a limit. Sorted by target.
std::vector<Swap> admissible_swaps(const RowMultiTableau& t);

struct GkmEdge {
    int a = 0;  // node whose cell contains the orbit
    int b = 0;  // its limit
    int p = 0;  // rows, 1-based
    int q = 0;
    int k = 0;  // entries
    int m = 0;
};

struct GkmGraph {
    Shape shape;
    DimFiltration filtration;
    int t = 0;
    std::vector<RowMultiTableau> nodes;
    std::vector<GkmEdge> edges;
};

GkmGraph build_gkm_graph(const Shape& shape, const DimFiltration& f);

struct MembershipReport {
    bool member = true;
    std::vector<std::size_t> failing_edges;  // indices into GkmGraph::edges
};

/// f_a - f_b divisible by x_p - x_q along every edge. One polynomial per
/// node, in node order, in the variables x_1..x_t.
MembershipReport membership_check(const GkmGraph& g, const std::vector<Polynomial>& tuple);

std::string export_dot(const GkmGraph& g);

}  // namespace qfv
