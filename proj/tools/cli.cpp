#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "laminar/bfs.hpp"
#include "laminar/cnf.hpp"
#include "laminar/edge_list.hpp"
#include "laminar/error.hpp"
#include "laminar/generators.hpp"
#include "laminar/graph.hpp"
#include "laminar/oracle.hpp"
#include "laminar/recognition.hpp"
#include "laminar/reduction.hpp"

namespace laminar::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

json graph_json(const Graph& g, std::optional<int> diam) {
    json j{{"n", g.vertex_count()}, {"m", g.edge_count()}};
    if (diam) {
        j["diameter"] = *diam;
    }
    return j;
}

void put_outcome(json& j, const Graph& g, const RecognitionOutcome& r) {
    j["verdict"] = r.verdict;
    j["k"] = r.k;
    if (r.witness) {
        j["witness"] = r.witness->labels(g);
    }
    if (r.counterexample) {
        j["counterexample"] = {{"center", g.label(r.counterexample->center)},
                               {"path", r.counterexample->path.labels(g)}};
    }
}

Graph load_connected(const std::string& file) {
    Graph g = read_edge_list_file(file);
    if (g.empty()) {
        throw InputError("graph file has no vertices");
    }
    if (!is_connected(g)) {
        throw PreconditionError("graph is not connected");
    }
    return g;
}

std::string read_text(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    buf << in.rdbuf();
    return buf.str();
}

struct Options {
    std::string file;
    int k = 1;
    bool strongly = false;
    bool oracle = false;
    std::optional<int> max_k;
    std::string name;
    std::uint64_t seed = 0;
    std::string out_file;
    bool verify = false;
    bool strict = false;
};

int cmd_stats(const Options& o, json& j) {
    Graph g = load_connected(o.file);
    auto profile = eccentricity_profile(g);
    j["graph"] = graph_json(g, profile.diameter);
    j["radius"] = profile.radius;
    std::vector<std::string> max_ecc;
    for (Vertex v : profile.max_ecc) {
        max_ecc.push_back(g.label(v));
    }
    j["max_ecc"] = max_ecc;
    return kHolds;
}

int cmd_recognize(const Options& o, json& j) {
    if (o.k < 0) {
        throw PreconditionError("--k must be non-negative");
    }
    Graph g = load_connected(o.file);
    RecognitionOutcome r;
    if (o.oracle) {
        r = o.strongly ? is_strongly_k_laminar_bf(g, o.k) : is_k_laminar_bf(g, o.k);
    } else {
        r = o.strongly ? is_strongly_k_laminar(g, o.k) : is_k_laminar(g, o.k);
    }
    j["graph"] = graph_json(g, diameter(g));
    j["strongly"] = o.strongly;
    j["oracle"] = o.oracle;
    put_outcome(j, g, r);
    return r.verdict ? kHolds : kFails;
}

int cmd_index(const Options& o, json& j) {
    if (o.max_k && *o.max_k < 0) {
        throw PreconditionError("--max must be non-negative");
    }
    Graph g = load_connected(o.file);
    const int diam = diameter(g);
    j["graph"] = graph_json(g, diam);
    j["strongly"] = o.strongly;
    j["oracle"] = o.oracle;
    std::optional<int> index;
    if (o.oracle) {
        auto s = summarize(g);
        index = o.strongly ? s.strongly_index : s.laminar_index;
    } else if (o.strongly) {
        index = strongly_laminar_index(g);
    } else {
        index = laminar_index_small(g, o.max_k.value_or(3));
    }
    if (index && o.max_k && *index > *o.max_k) {
        index.reset();
    }
    if (index) {
        j["index"] = *index;
        return kHolds;
    }
    j["index"] = "exceeded";
    return kFails;
}

int cmd_generate(const Options& o, std::ostream& out) {
    write_edge_list(out, generate(o.name, o.seed));
    return kHolds;
}

int cmd_reduce(const Options& o, json& j) {
    CnfFormula f = parse_dimacs_cnf(read_text(o.file), o.strict);
    ReductionInstance r = build_reduction(f);
    auto structure = validate_structure(r);
    auto cert = certified_diameter(r);

    j["graph"] = graph_json(r.graph, cert.diameter >= 0 ? std::optional<int>(cert.diameter)
                                                        : std::nullopt);
    j["variables"] = r.variable_count;
    j["padded_variables"] = r.padded_variable_count;
    j["clauses"] = f.clause_count();
    j["occurrences"] = f.occurrence_count();
    j["k_target"] = r.k_target;
    j["structure"] = {{"ok", structure.ok()},
                      {"problems", structure.problems},
                      {"vertex_count", structure.vertex_count},
                      {"occurrence_convention_count", structure.occurrence_convention_count},
                      {"in_hardness_regime", structure.in_hardness_regime},
                      {"k_bound_holds", structure.k_bound_holds}};
    j["diameter_certificate"] = {{"diameter", cert.diameter},
                                 {"spine_distance", cert.spine_distance},
                                 {"achieved_by_spine_ends", cert.achieved_by_spine_ends},
                                 {"max_hub_eccentricity", cert.max_hub_eccentricity},
                                 {"hubs_strictly_inside", cert.hubs_strictly_inside},
                                 {"literal_constant", cert.literal_constant},
                                 {"note", cert.note}};

    if (!o.out_file.empty()) {
        std::ofstream graph_out(o.out_file);
        std::ofstream roles_out(o.out_file + ".roles");
        if (!graph_out || !roles_out) {
            throw InputError("cannot write '" + o.out_file + "'");
        }
        write_edge_list(graph_out, r.graph);
        roles_out << roles_table(r);
        j["out"] = o.out_file;
        j["roles"] = o.out_file + ".roles";
    }

    int code = structure.ok() ? kHolds : kFails;
    if (o.verify) {
        auto report = verify_equivalence(r);
        j["report"] = to_json(report, r.graph);
        j["verdict"] = report.agree();
        if (report.witness) {
            j["witness"] = report.witness->labels(r.graph);
        }
        if (!report.agree()) {
            code = kFails;
        }
    }
    return code;
}

}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"k-laminar graph recognition toolkit"};
    app.require_subcommand(1);
    Options o;

    auto* stats = app.add_subcommand("stats", "n, m, diameter, radius and MaxEcc of a graph");
    stats->add_option("graph", o.file, "edge-list file ('-' for stdin)")->required();

    auto* recognize = app.add_subcommand("recognize", "decide (strongly) k-laminarity");
    recognize->add_option("graph", o.file, "edge-list file ('-' for stdin)")->required();
    recognize->add_option("--k", o.k, "domination radius")->required();
    recognize->add_flag("--strongly", o.strongly, "every diametral path must k-dominate");
    recognize->add_flag("--oracle", o.oracle, "use the exhaustive diametral-path oracle");

    auto* index = app.add_subcommand("index", "laminar or strongly laminar index");
    index->add_option("graph", o.file, "edge-list file ('-' for stdin)")->required();
    index->add_flag("--strongly", o.strongly, "strongly laminar index");
    index->add_flag("--oracle", o.oracle, "use the exhaustive diametral-path oracle");
    index->add_option("--max", o.max_k, "largest k to try (default 3 for the plain index)");

    auto* generate_cmd = app.add_subcommand("generate", "write a named graph as an edge list");
    generate_cmd->add_option("name", o.name,
                             "g1..g5, g1-d, path:N, cycle:N, complete:N, pathpower:N:R, "
                             "spider:LEGS:LEN, gnp:N:P[:SEED]")
        ->required();
    generate_cmd->add_option("--seed", o.seed, "seed for gnp when the name carries none");

    auto* reduce = app.add_subcommand("reduce", "build the 3SAT gadget graph G(phi)");
    reduce->add_option("cnf", o.file, "DIMACS CNF file ('-' for stdin)")->required();
    reduce->add_option("--out", o.out_file, "write the graph here and roles to <out>.roles");
    reduce->add_flag("--verify", o.verify, "check satisfiable <=> (N/2+1)-laminar");
    reduce->add_flag("--strict", o.strict, "require exactly 3 literals per clause");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kHolds;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kUsage;
    }

    const auto* chosen = app.get_subcommands().front();
    const std::string command = chosen->get_name();
    if (command == "generate") {
        try {
            return cmd_generate(o, out);
        } catch (const std::exception& e) {
            err << "error: " << e.what() << '\n';
            return kUsage;
        }
    }

    json j;
    j["command"] = command;
    const auto start = Clock::now();
    int code = kUsage;
    try {
        if (command == "stats") {
            code = cmd_stats(o, j);
        } else if (command == "recognize") {
            code = cmd_recognize(o, j);
        } else if (command == "index") {
            code = cmd_index(o, j);
        } else {
            code = cmd_reduce(o, j);
        }
    } catch (const SizeGuardError& e) {
        err << "refused: " << e.what() << '\n';
        j["error"] = e.what();
        code = kRefused;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        j["error"] = e.what();
        code = kUsage;
    }
    j["elapsed_ms"] =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    out << j.dump() << '\n';
    return code;
}

}
