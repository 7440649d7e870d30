#include "qfv/cli.hpp"

#include "qfv/betti.hpp"
#include "qfv/field.hpp"
#include "qfv/gkm.hpp"
#include "qfv/json_io.hpp"
#include "qfv/oracle.hpp"
#include "qfv/tableau.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace qfv {

namespace {

constexpr std::uint64_t kMaxOracleFlags = 10'000'000;
constexpr int kMaxKatoBoxes = 12;

struct Options {
    std::string shape_file;
    std::string filtration;
    std::string primes = "2,3";
    std::string format;
    std::string check_file;
    std::string output_file;
    bool force = false;
    bool keep_row_order = false;
};

struct CliFailure {
    int code;
    std::string message;
};

Shape load_shape(const Options& o) { return shape_from_json(read_json_file(o.shape_file), o.keep_row_order); }

DimFiltration load_filtration(const Options& o, const Shape& shape) {
    std::error_code ec;
    if (!o.filtration.empty() && std::filesystem::is_regular_file(o.filtration, ec))
        return filtration_from_json(read_json_file(o.filtration), shape.n());
    return DimFiltration::parse(shape.n(), o.filtration);
}

void require_compatible(const Shape& shape, const DimFiltration& f) {
    if (!compatible(shape, f))
        throw CliFailure{kIncompatible, "filtration " + f.to_string() + " does not match the dimension vector of the shape"};
}

std::vector<std::uint32_t> parse_primes(const std::string& text) {
    std::vector<std::uint32_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            long v = std::stol(item, &used);
            if (used != item.size() || v < 2) throw std::invalid_argument(item);
            PrimeField check(static_cast<std::uint32_t>(v));
            out.push_back(check.p());
        } catch (const InputError&) {
            throw;
        } catch (const std::exception&) {
            throw InputError("bad prime '" + item + "'");
        }
    }
    if (out.empty()) throw InputError("no primes given");
    return out;
}

std::string join(const std::vector<int>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

void cmd_tableaux(const Options& o, std::ostream& out) {
    Shape shape = load_shape(o);
    DimFiltration f = load_filtration(o, shape);
    require_compatible(shape, f);
    auto tableaux = enumerate_tableaux(shape, f);
    if (o.format == "json") {
        Json list = Json::array();
        for (const auto& t : tableaux) {
            Json j = tableau_to_json(t);
            j["d_tau"] = d_tau_table(t);
            j["dim"] = cell_dim(t);
            list.push_back(std::move(j));
        }
        out << Json{{"count", tableaux.size()}, {"tableaux", list}}.dump(2) << '\n';
        return;
    }
    out << tableaux.size() << " tableaux\n";
    for (const auto& t : tableaux)
        out << t.to_string() << "  d_tau (" << join(d_tau_table(t), ",") << ")  dim " << cell_dim(t) << '\n';
}

void cmd_betti(const Options& o, std::ostream& out) {
    Shape shape = load_shape(o);
    DimFiltration f = load_filtration(o, shape);
    require_compatible(shape, f);
    std::uint64_t count = f_count(shape, f);
    PoincarePoly poly = f_graded(shape, f);
    if (o.format == "json") {
        out << Json{{"count", count}, {"poincare", poly_to_json(poly)}}.dump(2) << '\n';
        return;
    }
    out << "f = " << count << '\n' << "P(q) = " << poly.to_string() << '\n';
}

int cmd_oracle(const Options& o, std::ostream& out) {
    Shape shape = load_shape(o);
    DimFiltration f = load_filtration(o, shape);
    require_compatible(shape, f);
    auto primes = parse_primes(o.primes);
    PoincarePoly poly = f_graded(shape, f);
    for (std::uint32_t p : primes) {
        std::uint64_t expected = 0;
        try {
            expected = poly.evaluate(p);
        } catch (const std::overflow_error&) {
            expected = UINT64_MAX;
        }
        if (expected > kMaxOracleFlags && !o.force)
            throw CliFailure{kResourceGuard, "about " + std::to_string(expected) + " flags over F_" + std::to_string(p) +
                                                 " exceed the enumeration bound; pass --force to run anyway"};
    }
    std::vector<OracleReport> reports;
    bool all = true;
    for (std::uint32_t p : primes) {
        reports.push_back(run_oracle(shape, f, p));
        all = all && reports.back().match;
    }
    if (o.format == "json") {
        Json list = Json::array();
        for (const auto& r : reports) list.push_back(oracle_to_json(r));
        out << Json{{"reports", list}, {"match", all}}.dump(2) << '\n';
    } else {
        for (const auto& r : reports) {
            out << "p=" << r.p << " count=" << r.count << " poincare_at_p=" << r.poincare_at_p << ' '
                << (r.match ? "match" : "MISMATCH") << '\n';
            for (const auto& c : r.per_cell)
                if (c.found != c.expected) out << "  cell " << c.tableau.to_string() << " expected " << c.expected << " found " << c.found << '\n';
            if (r.unclassified) out << "  " << r.unclassified << " points outside every enumerated cell\n";
            if (!r.fixed_points_ok) out << "  a split flag is not a fixed point of its own cell\n";
        }
    }
    return all ? kOk : kOracleMismatch;
}

void cmd_gkm(const Options& o, std::ostream& out) {
    Shape shape = load_shape(o);
    DimFiltration f = load_filtration(o, shape);
    require_compatible(shape, f);
    GkmGraph g = build_gkm_graph(shape, f);

    if (!o.check_file.empty()) {
        auto tuple = tuple_from_json(read_json_file(o.check_file));
        MembershipReport report = membership_check(g, tuple);
        if (o.format == "json") {
            Json failing = Json::array();
            for (std::size_t j : report.failing_edges) {
                const GkmEdge& e = g.edges[j];
                failing.push_back({{"a", e.a}, {"b", e.b}, {"rows", {e.p, e.q}}, {"entries", {e.k, e.m}}});
            }
            out << Json{{"member", report.member}, {"failing_edges", failing}}.dump(2) << '\n';
            return;
        }
        out << "member: " << (report.member ? "true" : "false") << '\n';
        for (std::size_t j : report.failing_edges) {
            const GkmEdge& e = g.edges[j];
            out << "  edge " << e.a << " -> " << e.b << " (x" << e.p << "-x" << e.q << "): "
                << (tuple[static_cast<std::size_t>(e.a)] - tuple[static_cast<std::size_t>(e.b)]).to_string() << '\n';
        }
        return;
    }

    if (o.format == "json") {
        out << graph_to_json(g).dump(2) << '\n';
    } else if (o.format == "table") {
        out << g.nodes.size() << " nodes, " << g.edges.size() << " edges, t = " << g.t << '\n';
        for (std::size_t i = 0; i < g.nodes.size(); ++i)
            out << i << ' ' << g.nodes[i].to_string() << "  dim " << cell_dim(g.nodes[i]) << '\n';
        for (const GkmEdge& e : g.edges)
            out << e.a << " -> " << e.b << "  x" << e.p << "-x" << e.q << "  entries " << e.k << ',' << e.m << '\n';
    } else {
        out << export_dot(g);
    }
}

void cmd_kato(const Options& o, std::ostream& out) {
    Shape shape = load_shape(o);
    if (shape.num_boxes() > kMaxKatoBoxes && !o.force)
        throw CliFailure{kResourceGuard, std::to_string(shape.num_boxes()) + " boxes exceed the Kato bound of " +
                                             std::to_string(kMaxKatoBoxes) + "; pass --force to run anyway"};
    KatoGdim k = kato_gdim(shape);
    if (o.format == "json") {
        out << kato_to_json(k).dump(2) << '\n';
        return;
    }
    out << "gdim = " << k.to_string() << '\n' << "orbit_dim = " << k.offset << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cells, Betti numbers and moment graphs of quiver flag varieties of the cyclic quiver", "qfv"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, bool needs_filtration, std::vector<std::string> formats) {
        sub->add_option("--shape", o.shape_file, "Shape JSON file")->required();
        auto* filt = sub->add_option("--filtration", o.filtration, "Filtration word such as 3,2,1, or a JSON file");
        if (needs_filtration) filt->required();
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
        sub->add_option("--output", o.output_file, "Write results to FILE");
        sub->add_flag("--keep-row-order", o.keep_row_order, "Keep the row order of the shape file");
        sub->add_flag("--force", o.force, "Ignore resource guards");
    };

    auto* tab = app.add_subcommand("tableaux", "List row multi-tableaux with their cell dimensions");
    add_common(tab, true, {"table", "json"});
    auto* betti = app.add_subcommand("betti", "Cell count and Poincare polynomial");
    add_common(betti, true, {"table", "json"});
    auto* oracle = app.add_subcommand("oracle", "Check the cell decomposition by counting points over F_p");
    add_common(oracle, true, {"table", "json"});
    oracle->add_option("--primes", o.primes, "Comma separated primes");
    auto* gkm = app.add_subcommand("gkm", "Moment graph export and GKM membership check");
    add_common(gkm, true, {"dot", "json", "table"});
    gkm->add_option("--check", o.check_file, "Polynomial tuple JSON to test for membership");
    auto* kato = app.add_subcommand("kato", "Graded dimension of the Kato standard module");
    add_common(kato, false, {"table", "json"});

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kMalformedInput;
    }

    std::ostringstream buffer;
    int code = kOk;
    try {
        if (tab->parsed()) cmd_tableaux(o, buffer);
        else if (betti->parsed()) cmd_betti(o, buffer);
        else if (oracle->parsed()) code = cmd_oracle(o, buffer);
        else if (gkm->parsed()) cmd_gkm(o, buffer);
        else if (kato->parsed()) cmd_kato(o, buffer);
    } catch (const CliFailure& e) {
        err << "qfv: " << e.message << '\n';
        return e.code;
    } catch (const InputError& e) {
        err << "qfv: " << e.what() << '\n';
        return kMalformedInput;
    }

    if (o.output_file.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(o.output_file);
        if (!file || !(file << buffer.str())) {
            err << "qfv: cannot write " << o.output_file << '\n';
            return kMalformedInput;
        }
    }
    return code;
}

}  // namespace qfv
