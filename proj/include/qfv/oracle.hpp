#pragma once

// Finite-field verification of the cell decomposition of one instance.

#include "qfv/cyclic.hpp"
#include "qfv/tableau.hpp"

#include <cstdint>
#include <vector>

namespace qfv {

struct CellTally {
    RowMultiTableau tableau;
    std::uint64_t expected = 0;  // p^{cell_dim}
    std::uint64_t found = 0;     // F_p-points classified into the cell
};

struct OracleReport {
    std::uint32_t p = 2;
    std::uint64_t count = 0;          // |Fl(M; f)(F_p)|
    std::uint64_t poincare_at_p = 0;  // f_graded at q = p
    std::vector<CellTally> per_cell;
    /// Points whose cell is not an enumerated tableau (should be empty).
    std::uint64_t unclassified = 0;
    /// Split flags that are valid flags lying in their own cell.
    bool fixed_points_ok = true;
    bool match = false;
};

/// Counts and classifies every F_p-point of Fl(M; f) for the standard module
/// of `shape`.
OracleReport run_oracle(const Shape& shape, const DimFiltration& f, std::uint32_t p);

}  // namespace qfv
