#include "qfv/oracle.hpp"

#include "qfv/betti.hpp"
#include "qfv/ffmod.hpp"


namespace qfv {

OracleReport run_oracle(const Shape& shape, const DimFiltration& f, std::uint32_t p) {
    if (!compatible(shape, f)) throw InputError("filtration " + f.to_string() + " is not compatible with the shape");
    OracleReport report;
    report.p = p;
    NilModule m = build_module(shape, p);
    report.count = count_flags(m, f);
    report.poincare_at_p = f_graded(shape, f).evaluate(p);

    const auto found = classify_flags(m, f);
    std::uint64_t visited = 0;
    for (const auto& entry : found) visited += entry.second;

    bool cells_ok = true;
    std::uint64_t classified = 0;
    for (const RowMultiTableau& t : enumerate_tableaux(shape, f)) {
        CellTally tally{t, 1, 0};
        for (int j = 0; j < cell_dim(t); ++j) tally.expected *= p;
        if (auto it = found.find(t.filling()); it != found.end()) tally.found = it->second;
        classified += tally.found;
        cells_ok = cells_ok && tally.found == tally.expected;

        try {
            FlagPoint split = split_flag(m, t);
            validate_flag(m, split);
            if (!(cell_of_flag(m, split) == t)) report.fixed_points_ok = false;
        } catch (const InputError&) {
            report.fixed_points_ok = false;
        }
        report.per_cell.push_back(std::move(tally));
    }
    report.unclassified = visited - classified;
    report.match = report.count == report.poincare_at_p && visited == report.count && cells_ok &&
                   report.unclassified == 0 && report.fixed_points_ok;
    return report;
}

}  // namespace qfv
