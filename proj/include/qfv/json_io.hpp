#pragma once

// JSON encodings of shapes, filtrations, tableaux and results.

#include "qfv/betti.hpp"
#include "qfv/cyclic.hpp"
#include "qfv/gkm.hpp"
#include "qfv/oracle.hpp"
#include "qfv/polynomial.hpp"
#include "qfv/tableau.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qfv {

using Json = nlohmann::ordered_json;

/// Parses a file; throws InputError if it cannot be read or parsed.
Json read_json_file(const std::string& path);

/// {"n": 3, "rows": [{"socle": 3, "len": 3}, ...]}. Rows are put in canonical
/// order unless keep_order is set or the document has "keep_order": true.
Shape shape_from_json(const Json& j, bool keep_order = false);
Json shape_to_json(const Shape& s);

/// {"word": [3, 2, 1]}.
DimFiltration filtration_from_json(const Json& j, int n);
Json filtration_to_json(const DimFiltration& f);

/// The shape document plus "filling".
RowMultiTableau tableau_from_json(const Json& j);
Json tableau_to_json(const RowMultiTableau& t);

/// {"0": 1, "1": 2, ...}
Json poly_to_json(const PoincarePoly& p);
Json kato_to_json(const KatoGdim& k);
Json graph_to_json(const GkmGraph& g);
Json oracle_to_json(const OracleReport& r);

/// {"polys": ["x1", "0", 3]}: strings are parsed, numbers taken as constants.
std::vector<Polynomial> tuple_from_json(const Json& j);

}  // namespace qfv
