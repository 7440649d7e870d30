#include "qfv/json_io.hpp"

#include <fstream>

namespace qfv {

namespace {

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
    return j.get<int>();
}

}  // namespace

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

Shape shape_from_json(const Json& j, bool keep_order) {
    int n = as_int(require(j, "n"), "n");
    const Json& rows = require(j, "rows");
    if (!rows.is_array()) throw InputError("\"rows\" must be an array");
    std::vector<Row> out;
    for (const Json& r : rows) {
        int socle = as_int(require(r, "socle"), "socle");
        int len = as_int(require(r, "len"), "len");
        out.push_back(Row{Vertex(socle), len});
    }
    if (j.contains("keep_order")) {
        if (!j.at("keep_order").is_boolean()) throw InputError("\"keep_order\" must be a boolean");
        keep_order = keep_order || j.at("keep_order").get<bool>();
    }
    return keep_order ? Shape::as_given(n, std::move(out)) : Shape(n, std::move(out));
}

Json shape_to_json(const Shape& s) {
    Json rows = Json::array();
    for (const Row& r : s.rows()) rows.push_back({{"socle", r.socle.value}, {"len", r.len}});
    return {{"n", s.n()}, {"rows", rows}};
}

DimFiltration filtration_from_json(const Json& j, int n) {
    const Json& word = require(j, "word");
    if (!word.is_array()) throw InputError("\"word\" must be an array");
    std::vector<Vertex> out;
    for (const Json& v : word) out.emplace_back(as_int(v, "filtration vertex"));
    return DimFiltration(n, std::move(out));
}

Json filtration_to_json(const DimFiltration& f) {
    Json word = Json::array();
    for (Vertex v : f.word()) word.push_back(v.value);
    return {{"word", word}};
}

RowMultiTableau tableau_from_json(const Json& j) {
    Shape shape = shape_from_json(j, true);
    const Json& filling = require(j, "filling");
    if (!filling.is_array()) throw InputError("\"filling\" must be an array");
    std::vector<std::vector<int>> rows;
    for (const Json& row : filling) {
        if (!row.is_array()) throw InputError("filling rows must be arrays");
        std::vector<int> entries;
        for (const Json& e : row) entries.push_back(as_int(e, "tableau entry"));
        rows.push_back(std::move(entries));
    }
    return RowMultiTableau(std::move(shape), std::move(rows));
}

Json tableau_to_json(const RowMultiTableau& t) {
    Json j = shape_to_json(t.shape());
    j["filling"] = t.filling();
    return j;
}

Json poly_to_json(const PoincarePoly& p) {
    Json j = Json::object();
    for (int k = 0; k <= p.degree(); ++k)
        if (p.coeff(k)) j[std::to_string(k)] = p.coeff(k);
    return j;
}

Json kato_to_json(const KatoGdim& k) {
    Json j = Json::object();
    for (const auto& [e, c] : k.coeffs)
        if (c) j[std::to_string(e)] = c;
    j["orbit_dim"] = k.offset;
    return j;
}

Json graph_to_json(const GkmGraph& g) {
    Json nodes = Json::array();
    for (const RowMultiTableau& t : g.nodes) nodes.push_back(t.filling());
    Json edges = Json::array();
    for (const GkmEdge& e : g.edges)
        edges.push_back({{"a", e.a}, {"b", e.b}, {"rows", {e.p, e.q}}, {"entries", {e.k, e.m}}});
    return {{"t", g.t}, {"nodes", nodes}, {"edges", edges}};
}

Json oracle_to_json(const OracleReport& r) {
    Json cells = Json::array();
    for (const CellTally& c : r.per_cell)
        cells.push_back({{"tableau", c.tableau.filling()}, {"expected", c.expected}, {"found", c.found}});
    return {{"p", r.p},
            {"count", r.count},
            {"poincare_at_p", r.poincare_at_p},
            {"match", r.match},
            {"unclassified", r.unclassified},
            {"fixed_points_ok", r.fixed_points_ok},
            {"per_cell", cells}};
}

std::vector<Polynomial> tuple_from_json(const Json& j) {
    const Json& polys = require(j, "polys");
    if (!polys.is_array()) throw InputError("\"polys\" must be an array");
    std::vector<Polynomial> out;
    for (const Json& p : polys) {
        if (p.is_string()) out.push_back(Polynomial::parse(p.get<std::string>()));
        else if (p.is_number_integer()) out.emplace_back(Rational(p.get<long long>()));
        else throw InputError("tuple entries must be strings or integers");
    }
    return out;
}

}  // namespace qfv
