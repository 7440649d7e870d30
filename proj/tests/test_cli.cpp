#include "qfv/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <unistd.h>

using qfv::run_cli;

namespace {

struct Scratch {
    std::filesystem::path dir;

    Scratch() {
        dir = std::filesystem::temp_directory_path() / ("qfv_cli_" + std::to_string(::getpid()));
        std::filesystem::create_directories(dir);
    }
    ~Scratch() { std::filesystem::remove_all(dir); }

    std::string write(const std::string& name, const std::string& text) const {
        auto path = dir / name;
        std::ofstream(path) << text;
        return path.string();
    }
};

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

const char* kLine = R"({"n": 1, "rows": [{"socle": 1, "len": 1}, {"socle": 1, "len": 1}]})";
const char* kThree = R"({"n": 1, "rows": [{"socle": 1, "len": 1}, {"socle": 1, "len": 1}, {"socle": 1, "len": 1}]})";
const char* kExample = R"({"n": 3, "rows": [{"socle": 3, "len": 3}, {"socle": 3, "len": 3}, {"socle": 2, "len": 2},
                           {"socle": 2, "len": 4}, {"socle": 3, "len": 2}]})";

}  // namespace

TEST_CASE("betti command") {
    Scratch s;
    auto three = s.write("three.json", kThree);
    Run r = run({"betti", "--shape", three, "--filtration", "1,1,1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("f = 6") != std::string::npos);
    CHECK(r.out.find("1 + 2q + 2q^2 + q^3") != std::string::npos);

    Run single = run({"betti", "--shape", s.write("row.json", R"({"n":3,"rows":[{"socle":3,"len":3}]})"), "--filtration", "3,2,1"});
    CHECK(single.out.find("P(q) = 1\n") != std::string::npos);

    Run json = run({"betti", "--shape", three, "--filtration", "1,1,1", "--format", "json"});
    auto j = nlohmann::json::parse(json.out);
    CHECK(j["count"] == 6);
    CHECK(j["poincare"]["2"] == 2);

    auto word = s.write("word.json", R"({"word": [1, 1, 1]})");
    CHECK(run({"betti", "--shape", three, "--filtration", word}).out == r.out);
}

TEST_CASE("tableaux command") {
    Scratch s;
    Run r = run({"tableaux", "--shape", s.write("three.json", kThree), "--filtration", "1,1,1", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["count"] == 6);
    std::multiset<int> dims;
    for (const auto& t : j["tableaux"]) dims.insert(t["dim"].get<int>());
    CHECK(dims == std::multiset<int>{0, 1, 1, 2, 2, 3});

    Run ex = run({"tableaux", "--shape", s.write("ex.json", kExample), "--filtration", "3,2,2,2,1,3,3,3,2,1,2,1,1,2"});
    CHECK(ex.code == 0);
    CHECK(ex.out.find("[[5,11,14],[2,6,8],[3,13],[1,9,10,12],[4,7]]  d_tau (0,0,0,0,2,0,0,0,2,0,0,0,1,1)  dim 6") != std::string::npos);

    Run empty = run({"tableaux", "--shape", s.write("empty.json", R"({"n":2,"rows":[]})"), "--filtration", ""});
    CHECK(empty.code == 0);
    CHECK(empty.out == "1 tableaux\n[]  d_tau ()  dim 0\n");
}

TEST_CASE("exit codes") {
    Scratch s;
    auto line = s.write("line.json", kLine);
    CHECK(run({"betti", "--shape", line, "--filtration", "1"}).code == qfv::kIncompatible);
    CHECK(run({"betti", "--shape", line, "--filtration", "1,2"}).code == qfv::kMalformedInput);
    CHECK(run({"betti", "--shape", s.write("bad.json", "{\"n\": 1, \"rows\": [{\"socle\": 1}]}"), "--filtration", "1"}).code ==
          qfv::kMalformedInput);
    CHECK(run({"betti", "--shape", s.write("junk.json", "not json"), "--filtration", "1"}).code == qfv::kMalformedInput);
    CHECK(run({"betti", "--shape", (s.dir / "missing.json").string(), "--filtration", "1"}).code == qfv::kMalformedInput);
    CHECK(run({"betti", "--shape", line}).code == qfv::kMalformedInput);
    CHECK(run({"frobnicate"}).code == qfv::kMalformedInput);
    CHECK(run({"betti", "--shape", line, "--filtration", "1,1", "--format", "xml"}).code == qfv::kMalformedInput);
    CHECK(run({"oracle", "--shape", line, "--filtration", "1,1", "--primes", "4"}).code == qfv::kMalformedInput);
    Run help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("tableaux") != std::string::npos);
}

TEST_CASE("oracle command") {
    Scratch s;
    auto line = s.write("line.json", kLine);
    Run r = run({"oracle", "--shape", line, "--filtration", "1,1", "--primes", "2", "--format", "json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["match"] == true);
    CHECK(j["reports"][0]["count"] == 3);
    CHECK(j["reports"][0]["poincare_at_p"] == 3);

    Run row = run({"oracle", "--shape", s.write("row.json", R"({"n":2,"rows":[{"socle":1,"len":3}]})"), "--filtration", "1,2,1",
                   "--primes", "2,3,5"});
    CHECK(row.code == 0);
    CHECK(row.out.find("p=5 count=1 poincare_at_p=1 match") != std::string::npos);

    // 9 unit rows over F_3 have far more than 10^7 complete flags.
    std::string big = R"({"n":1,"rows":[)";
    for (int i = 0; i < 9; ++i) big += std::string(i ? "," : "") + R"({"socle":1,"len":1})";
    big += "]}";
    Run guarded = run({"oracle", "--shape", s.write("big.json", big), "--filtration", "1,1,1,1,1,1,1,1,1", "--primes", "3"});
    CHECK(guarded.code == qfv::kResourceGuard);
    CHECK(guarded.err.find("--force") != std::string::npos);
}

TEST_CASE("gkm command") {
    Scratch s;
    auto line = s.write("line.json", kLine);
    Run dot = run({"gkm", "--shape", line, "--filtration", "1,1"});
    CHECK(dot.code == 0);
    CHECK(dot.out.find("n0 -> n1 [label=\"x1-x2\"]") != std::string::npos);

    Run consts = run({"gkm", "--shape", line, "--filtration", "1,1", "--check", s.write("c.json", R"({"polys": [5, "5"]})")});
    CHECK(consts.out == "member: true\n");
    Run bad = run({"gkm", "--shape", line, "--filtration", "1,1", "--check", s.write("b.json", R"({"polys": ["x1", "0"]})")});
    CHECK(bad.out.find("member: false") == 0);
    CHECK(bad.out.find("edge 0 -> 1 (x1-x2)") != std::string::npos);
    CHECK(run({"gkm", "--shape", line, "--filtration", "1,1", "--check", s.write("short.json", R"({"polys": ["x1"]})")}).code ==
          qfv::kMalformedInput);

    Run json = run({"gkm", "--shape", s.write("three.json", kThree), "--filtration", "1,1,1", "--format", "json"});
    auto j = nlohmann::json::parse(json.out);
    CHECK(j["t"] == 3);
    CHECK(j["nodes"].size() == 6);
    CHECK(j["edges"].size() == 9);

    auto out = (s.dir / "graph.dot").string();
    CHECK(run({"gkm", "--shape", line, "--filtration", "1,1", "--output", out}).code == 0);
    std::ifstream in(out);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str() == dot.out);
}

TEST_CASE("kato command") {
    Scratch s;
    Run a = run({"kato", "--shape", s.write("j.json", R"({"n":1,"rows":[{"socle":1,"len":2}]})")});
    CHECK(a.out == "gdim = t^2\norbit_dim = 2\n");
    Run b = run({"kato", "--shape", s.write("u.json", kLine), "--format", "json"});
    auto j = nlohmann::json::parse(b.out);
    CHECK(j["1"] == 1);
    CHECK(j["2"] == 1);
    CHECK(j["orbit_dim"] == 0);
    Run e = run({"kato", "--shape", s.write("e.json", R"({"n":1,"rows":[]})")});
    CHECK(e.out == "gdim = 1\norbit_dim = 0\n");
    Run guarded = run({"kato", "--shape", s.write("ex.json", kExample)});
    CHECK(guarded.code == qfv::kResourceGuard);
}

TEST_CASE("row order flag") {
    Scratch s;
    auto shape = s.write("two.json", R"({"n":1,"rows":[{"socle":1,"len":1},{"socle":1,"len":2}]})");
    Run canonical = run({"tableaux", "--shape", shape, "--filtration", "1,1,1"});
    Run kept = run({"tableaux", "--shape", shape, "--filtration", "1,1,1", "--keep-row-order"});
    CHECK(canonical.out.find("[[3],[1,2]]") == std::string::npos);
    CHECK(kept.out.find("[[3],[1,2]]") != std::string::npos);
    auto flagged = s.write("kept.json", R"({"n":1,"keep_order":true,"rows":[{"socle":1,"len":1},{"socle":1,"len":2}]})");
    CHECK(run({"tableaux", "--shape", flagged, "--filtration", "1,1,1"}).out == kept.out);
}
