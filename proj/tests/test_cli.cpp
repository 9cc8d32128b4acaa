#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "cli.hpp"
#include "laminar/edge_list.hpp"
#include "laminar/generators.hpp"
#include "laminar/oracle.hpp"

using namespace laminar;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
    json payload() const { return json::parse(out); }
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "laminar");
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class Scratch {
public:
    Scratch() {
        static int counter = 0;
        dir_ = fs::temp_directory_path() /
               ("laminar_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(dir_);
    }
    ~Scratch() {
        std::error_code ec;
        fs::remove_all(dir_, ec);
    }
    std::string write(const std::string& name, const std::string& text) const {
        auto path = dir_ / name;
        std::ofstream(path) << text;
        return path.string();
    }
    std::string graph(const std::string& name, const Graph& g) const {
        return write(name, to_edge_list(g));
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

private:
    fs::path dir_;
};

}

TEST_CASE("stats") {
    Scratch s;
    auto r = run_cli({"stats", s.graph("g1.txt", fixture_g1())});
    REQUIRE(r.code == 0);
    auto j = r.payload();
    CHECK(j["command"] == "stats");
    CHECK(j["graph"]["n"] == 8);
    CHECK(j["graph"]["m"] == 9);
    CHECK(j["graph"]["diameter"] == 4);
    CHECK(j["max_ecc"] == json::array({"a", "f", "h"}));
    CHECK(j.contains("elapsed_ms"));

    auto single = run_cli({"stats", s.write("one.txt", "solo\n")});
    REQUIRE(single.code == 0);
    CHECK(single.payload()["graph"]["diameter"] == 0);

    auto loop = run_cli({"stats", s.write("loop.txt", "a b\nb b\n")});
    CHECK(loop.code == 2);
    CHECK(loop.payload().contains("error"));

    auto split = run_cli({"stats", s.write("split.txt", "a b\nc d\n")});
    CHECK(split.code == 2);
    CHECK(split.err.find("not connected") != std::string::npos);

    CHECK(run_cli({"stats", s.path("missing.txt")}).code == 2);
}

TEST_CASE("recognize") {
    Scratch s;
    auto g3 = s.graph("g3.txt", fixture_g3());
    auto g2 = s.graph("g2.txt", fixture_g2());
    auto g1d = s.graph("g1d.txt", fixture_g1_minus_d());

    SUBCASE("G3 strongly 1") {
        auto r = run_cli({"recognize", g3, "--k", "1", "--strongly"});
        CHECK(r.code == 0);
        auto j = r.payload();
        CHECK(j["verdict"] == true);
        CHECK(j["strongly"] == true);
        CHECK(j.contains("witness"));
    }
    SUBCASE("G2 strongly 1 fails with the named path") {
        auto r = run_cli({"recognize", g2, "--k", "1", "--strongly"});
        CHECK(r.code == 1);
        auto j = r.payload();
        CHECK(j["verdict"] == false);
        CHECK(j["counterexample"]["path"] == json::array({"a", "b", "c", "d", "e"}));
        CHECK(j["counterexample"]["center"] == "g");
    }
    SUBCASE("G1 minus d at 1") {
        CHECK(run_cli({"recognize", g1d, "--k", "1"}).code == 1);
        CHECK(run_cli({"recognize", g1d, "--k", "1", "--oracle"}).code == 1);
    }
    SUBCASE("witness re-validates against the file") {
        auto r = run_cli({"recognize", g1d, "--k", "2"});
        REQUIRE(r.code == 0);
        Graph g = read_edge_list_file(g1d);
        auto j = r.payload();
        std::vector<Vertex> ids;
        for (const auto& label : j["witness"]) {
            ids.push_back(g.at(label.get<std::string>()));
        }
        CHECK(is_k_dominating_diametral_path(g, Path(ids), 2));
    }
    SUBCASE("errors") {
        CHECK(run_cli({"recognize", g3, "--k", "-1"}).code == 2);
        CHECK(run_cli({"recognize", g3}).code == 2);
        CHECK(run_cli({"recognize", g3, "--k", "one"}).code == 2);
        auto big = s.graph("p30.txt", path_graph(30));
        CHECK(run_cli({"recognize", big, "--k", "1", "--oracle"}).code == 3);
    }
}

TEST_CASE("index") {
    Scratch s;
    auto g3 = run_cli({"index", s.graph("g3.txt", fixture_g3()), "--strongly"});
    CHECK(g3.code == 0);
    CHECK(g3.payload()["index"] == 1);

    auto p9 = run_cli({"index", s.graph("p9.txt", path_graph(9))});
    CHECK(p9.code == 0);
    CHECK(p9.payload()["index"] == 0);

    auto g1d_file = s.graph("g1d.txt", fixture_g1_minus_d());
    auto g1d = run_cli({"index", g1d_file});
    CHECK(g1d.code == 0);
    CHECK(g1d.payload()["index"] == 2);
    CHECK(run_cli({"index", g1d_file, "--oracle"}).payload()["index"] == 2);

    auto capped = run_cli({"index", g1d_file, "--max", "1"});
    CHECK(capped.code == 1);
    CHECK(capped.payload()["index"] == "exceeded");
    CHECK(run_cli({"index", g1d_file, "--max", "-1"}).code == 2);
}

TEST_CASE("generate") {
    auto g1 = run_cli({"generate", "g1"});
    REQUIRE(g1.code == 0);
    Graph g = parse_edge_list(g1.out);
    CHECK(g.vertex_count() == 8);
    CHECK(g.edge_count() == 9);

    CHECK(run_cli({"generate", "path:5"}).out == to_edge_list(path_graph(5)));
    CHECK(run_cli({"generate", "gnp:10:0.3:42"}).out == run_cli({"generate", "gnp:10:0.3:42"}).out);
    CHECK(run_cli({"generate", "gnp:10:0.3", "--seed", "42"}).out ==
          run_cli({"generate", "gnp:10:0.3:42"}).out);
    CHECK(run_cli({"generate", "nonsense"}).code == 2);
}

TEST_CASE("generate then stats round trip") {
    Scratch s;
    for (const char* name : {"g1", "g2", "g3", "g4", "g5", "cycle:9", "spider:4:3"}) {
        auto gen = run_cli({"generate", name});
        REQUIRE(gen.code == 0);
        Graph g = generate(name);
        auto stats = run_cli({"stats", s.write("round.txt", gen.out)});
        REQUIRE(stats.code == 0);
        auto j = stats.payload();
        CHECK(j["graph"]["n"] == g.vertex_count());
        CHECK(j["graph"]["m"] == g.edge_count());
        CHECK(j["graph"]["diameter"] == diameter(g));
    }
}

TEST_CASE("reduce") {
    Scratch s;
    auto cnf = s.write("phi.cnf", "p cnf 4 4\n1 2 -3 0\n-1 -2 3 0\n1 -2 3 0\n-1 2 -3 0\n");
    SUBCASE("build and write") {
        auto out = s.path("phi.graph");
        auto r = run_cli({"reduce", cnf, "--out", out});
        REQUIRE(r.code == 0);
        auto j = r.payload();
        CHECK(j["graph"]["n"] == 44);
        CHECK(j["structure"]["ok"] == true);
        CHECK(j["k_target"] == 3);
        Graph g = read_edge_list_file(out);
        CHECK(g.vertex_count() == 44);
        std::ifstream roles(out + ".roles");
        std::size_t lines = 0;
        for (std::string line; std::getline(roles, line);) ++lines;
        CHECK(lines == 44);
    }
    SUBCASE("verify") {
        auto r = run_cli({"reduce", cnf, "--verify"});
        CHECK(r.code == 0);
        auto j = r.payload();
        CHECK(j["report"]["satisfiable"] == true);
        CHECK(j["report"]["laminar"] == true);
        CHECK(j["verdict"] == true);
    }
    SUBCASE("unsatisfiable formula still agrees") {
        auto unsat = s.write("unsat.cnf", "p cnf 2 3\n1 0\n-1 2 0\n-2 0\n");
        auto r = run_cli({"reduce", unsat, "--verify"});
        CHECK(r.code == 0);
        CHECK(r.payload()["report"]["laminar"] == false);
    }
    SUBCASE("errors") {
        CHECK(run_cli({"reduce", s.write("bad.cnf", "p cnf 1 1\n2 0\n")}).code == 2);
        CHECK(run_cli({"reduce", s.write("short.cnf", "p cnf 2 1\n1 2 0\n"), "--strict"}).code ==
              2);
        auto big = s.write("big.cnf", "p cnf 9 1\n1 2 9 0\n");
        CHECK(run_cli({"reduce", big}).code == 0);
        CHECK(run_cli({"reduce", big, "--verify"}).code == 3);
    }
}

TEST_CASE("usage") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
}
