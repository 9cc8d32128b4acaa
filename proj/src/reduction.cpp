#include "laminar/reduction.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "laminar/error.hpp"
#include "laminar/oracle.hpp"
#include "laminar/recognition.hpp"

namespace laminar {

namespace {

int padded_count(int n) {
    int padded = n % 2 == 0 ? n : n + 1;
    return std::max(padded, 4);
}

std::vector<nlohmann::json> assignment_json(const Assignment& a) {
    std::vector<nlohmann::json> values;
    for (std::size_t i = 1; i < a.size(); ++i) {
        values.emplace_back(static_cast<bool>(a[i]));
    }
    return values;
}

}

const char* role_name(RoleKind kind) {
    switch (kind) {
    case RoleKind::PosLiteral: return "pos_literal";
    case RoleKind::NegLiteral: return "neg_literal";
    case RoleKind::SpineChain: return "spine";
    case RoleKind::ClauseHub: return "clause_hub";
    case RoleKind::OccurrenceChain: return "occurrence_chain";
    }
    return "unknown";
}

ReductionInstance build_reduction(const CnfFormula& f) {
    if (f.clauses.empty()) {
        throw InputError("cannot reduce a formula without clauses");
    }
    ReductionInstance r;
    r.formula = f;
    r.variable_count = f.variable_count;
    const int N = padded_count(f.variable_count);
    r.padded_variable_count = N;
    r.formula.variable_count = N;
    r.k_target = N / 2 + 1;
    const int m = static_cast<int>(f.clauses.size());

    std::vector<std::string> labels;
    std::vector<std::pair<Vertex, Vertex>> edges;
    auto add = [&](std::string label, Role role) {
        labels.push_back(std::move(label));
        r.roles.push_back(role);
        return static_cast<Vertex>(labels.size() - 1);
    };
    auto link = [&](Vertex u, Vertex v) { edges.emplace_back(u, v); };

    r.spine.assign(2 * N + 1, 0);
    r.pos_literal.assign(N + 1, 0);
    r.neg_literal.assign(N + 1, 0);
    r.hubs.assign(m + 1, 0);

    for (int i = 1; i <= 2 * N; ++i) {
        r.spine[i] = add("V" + std::to_string(i), {RoleKind::SpineChain, i});
    }
    for (int i = 1; i <= N; ++i) {
        r.pos_literal[i] = add("X" + std::to_string(i), {RoleKind::PosLiteral, i});
        r.neg_literal[i] = add("~X" + std::to_string(i), {RoleKind::NegLiteral, i});
    }

    // pendant chains V_1..V_N and V_{N+1}..V_2N
    for (int i = 1; i < N; ++i) {
        link(r.spine[i], r.spine[i + 1]);
        link(r.spine[N + i], r.spine[N + i + 1]);
    }
    link(r.spine[N], r.pos_literal[1]);
    link(r.spine[N], r.neg_literal[1]);
    link(r.spine[N + 1], r.pos_literal[N]);
    link(r.spine[N + 1], r.neg_literal[N]);

    // variable ladder
    for (int i = 1; i <= N; ++i) {
        link(r.pos_literal[i], r.neg_literal[i]);
        if (i < N) {
            for (Vertex a : {r.pos_literal[i], r.neg_literal[i]}) {
                for (Vertex b : {r.pos_literal[i + 1], r.neg_literal[i + 1]}) {
                    link(a, b);
                }
            }
        }
    }

    // clause hubs with one private chain per occurrence
    const int internal = N / 2;
    for (int j = 1; j <= m; ++j) {
        r.hubs[j] = add("C" + std::to_string(j), {RoleKind::ClauseHub, j});
        const auto& clause = f.clauses[j - 1];
        for (int o = 1; o <= static_cast<int>(clause.size()); ++o) {
            Literal lit = clause[o - 1];
            Vertex prev = r.hubs[j];
            for (int t = 1; t <= internal; ++t) {
                Vertex c = add("C" + std::to_string(j) + "." + std::to_string(o) + "." +
                                   std::to_string(t),
                               {RoleKind::OccurrenceChain, j, o, t});
                link(prev, c);
                prev = c;
            }
            link(prev, lit > 0 ? r.pos_literal[lit] : r.neg_literal[-lit]);
        }
    }

    r.graph = Graph(std::move(labels), edges);
    return r;
}

StructureReport validate_structure(const ReductionInstance& r) {
    StructureReport rep;
    const Graph& g = r.graph;
    const int N = r.padded_variable_count;
    const std::size_t m = r.formula.clause_count();
    const std::size_t occ = r.formula.occurrence_count();
    auto problem = [&](std::string what) { rep.problems.push_back(std::move(what)); };

    rep.vertex_count = g.vertex_count();
    rep.expected_vertex_count = 4 * static_cast<std::size_t>(N) + m + occ * (N / 2);
    rep.occurrence_convention_count = 4 * static_cast<std::size_t>(N) + occ * (N / 2 + 1);
    rep.in_hardness_regime = r.formula.in_hardness_regime();
    const std::size_t k = static_cast<std::size_t>(r.k_target);
    rep.k_bound_holds = 4 * k * k <= rep.occurrence_convention_count &&
                        rep.occurrence_convention_count <= 16 * k * k;

    if (N % 2 != 0 || N < 4 || N < r.variable_count) {
        problem("padded variable count " + std::to_string(N) + " is not valid");
    }
    if (r.k_target != N / 2 + 1) {
        problem("k_target is not N/2 + 1");
    }
    if (rep.vertex_count != rep.expected_vertex_count) {
        problem("vertex count " + std::to_string(rep.vertex_count) + " but expected " +
                std::to_string(rep.expected_vertex_count));
    }
    if (r.roles.size() != g.vertex_count()) {
        problem("roles do not cover every vertex");
        return rep;
    }

    std::size_t literals = 0, spine = 0, hubs = 0, chain = 0;
    for (const auto& role : r.roles) {
        switch (role.kind) {
        case RoleKind::PosLiteral:
        case RoleKind::NegLiteral: ++literals; break;
        case RoleKind::SpineChain: ++spine; break;
        case RoleKind::ClauseHub: ++hubs; break;
        case RoleKind::OccurrenceChain: ++chain; break;
        }
    }
    if (literals != 2 * static_cast<std::size_t>(N)) problem("literal vertex count is not 2N");
    if (spine != 2 * static_cast<std::size_t>(N)) problem("spine vertex count is not 2N");
    if (hubs != m) problem("clause hub count is not m");
    if (chain != occ * (N / 2)) problem("occurrence chain vertex count is not m_phi * N/2");

    // ladder
    for (int i = 1; i <= N; ++i) {
        Vertex x = r.pos_literal[i];
        Vertex nx = r.neg_literal[i];
        if (!g.adjacent(x, nx)) {
            problem("X" + std::to_string(i) + " not adjacent to its negation");
        }
        for (int j : {i - 1, i + 1}) {
            if (j < 1 || j > N) {
                continue;
            }
            for (Vertex a : {x, nx}) {
                for (Vertex b : {r.pos_literal[j], r.neg_literal[j]}) {
                    if (!g.adjacent(a, b)) {
                        problem("ladder edge missing between variables " + std::to_string(i) +
                                " and " + std::to_string(j));
                    }
                }
            }
        }
    }

    // spine chains
    for (int i = 1; i < 2 * N; ++i) {
        if (i != N && !g.adjacent(r.spine[i], r.spine[i + 1])) {
            problem("spine edge V" + std::to_string(i) + " - V" + std::to_string(i + 1) +
                    " missing");
        }
    }
    if (g.degree(r.spine[1]) != 1 || g.degree(r.spine[2 * N]) != 1) {
        problem("spine ends are not pendant");
    }
    for (Vertex lit : {r.pos_literal[1], r.neg_literal[1]}) {
        if (!g.adjacent(r.spine[N], lit)) problem("V_N not attached to the first variable");
    }
    for (Vertex lit : {r.pos_literal[N], r.neg_literal[N]}) {
        if (!g.adjacent(r.spine[N + 1], lit)) problem("V_{N+1} not attached to the last variable");
    }
    if (distance(g, r.spine[1], r.pos_literal[1]) != N) {
        problem("d(V_1, X_1) is not N");
    }

    // occurrence chains: hub - t=1 - ... - t=N/2 - literal, all internal
    // vertices of degree 2 and owned by exactly one chain
    std::vector<std::vector<std::vector<Vertex>>> chains(m + 1);
    for (std::size_t j = 1; j <= m; ++j) {
        chains[j].assign(r.formula.clauses[j - 1].size() + 1, std::vector<Vertex>(N / 2 + 1, 0));
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const Role& role = r.roles[v];
        if (role.kind != RoleKind::OccurrenceChain) {
            continue;
        }
        if (role.a < 1 || static_cast<std::size_t>(role.a) > m || role.b < 1 ||
            static_cast<std::size_t>(role.b) >= chains[role.a].size() || role.c < 1 ||
            role.c > N / 2) {
            problem("chain vertex " + g.label(v) + " has out-of-range indices");
            continue;
        }
        chains[role.a][role.b][role.c] = v;
        if (g.degree(v) != 2) {
            problem("chain vertex " + g.label(v) + " does not have degree 2");
        }
    }
    for (std::size_t j = 1; j <= m; ++j) {
        const auto& clause = r.formula.clauses[j - 1];
        for (std::size_t o = 1; o <= clause.size(); ++o) {
            Literal lit = clause[o - 1];
            Vertex prev = r.hubs[j];
            for (int t = 1; t <= N / 2; ++t) {
                Vertex c = chains[j][o][t];
                if (!g.adjacent(prev, c)) {
                    problem("occurrence chain " + std::to_string(j) + "." + std::to_string(o) +
                            " broken at step " + std::to_string(t));
                }
                prev = c;
            }
            Vertex target = lit > 0 ? r.pos_literal[lit] : r.neg_literal[-lit];
            if (!g.adjacent(prev, target)) {
                problem("occurrence chain " + std::to_string(j) + "." + std::to_string(o) +
                        " does not reach its literal");
            }
        }
    }
    return rep;
}

DiameterCertificate certified_diameter(const ReductionInstance& r) {
    DiameterCertificate cert;
    const Graph& g = r.graph;
    const int N = r.padded_variable_count;
    cert.literal_constant = 3 * N + 2;
    if (!is_connected(g)) {
        cert.diameter = -1;
        cert.note = "graph is disconnected (some clause is empty)";
        return cert;
    }
    auto profile = eccentricity_profile(g);
    cert.diameter = profile.diameter;
    cert.spine_distance = *distance(g, r.spine[1], r.spine[2 * N]);
    cert.achieved_by_spine_ends = cert.spine_distance == cert.diameter;
    for (std::size_t j = 1; j < r.hubs.size(); ++j) {
        cert.max_hub_eccentricity =
            std::max(cert.max_hub_eccentricity, profile.eccentricity[r.hubs[j]]);
    }
    cert.hubs_strictly_inside = cert.max_hub_eccentricity < cert.diameter;
    if (cert.diameter != cert.literal_constant) {
        cert.note = "computed diameter " + std::to_string(cert.diameter) + " = 3N - 1, not 3N + 2";
    }
    return cert;
}

Assignment assignment_from_witness(const ReductionInstance& r, const Path& p) {
    const int N = r.padded_variable_count;
    if (!is_path_of(r.graph, p)) {
        throw ContractViolation("witness is not a path of G(phi)");
    }
    std::vector<char> pos(N + 1, 0), neg(N + 1, 0);
    for (Vertex v : p.vertices()) {
        const Role& role = r.roles[v];
        if (role.kind == RoleKind::PosLiteral) pos[role.a] = 1;
        if (role.kind == RoleKind::NegLiteral) neg[role.a] = 1;
    }
    Assignment a(N + 1, false);
    for (int i = 1; i <= N; ++i) {
        if (pos[i] && neg[i]) {
            throw ContractViolation("witness visits both X" + std::to_string(i) + " and ~X" +
                                    std::to_string(i));
        }
        a[i] = pos[i] != 0;
    }
    return a;
}

EquivalenceReport verify_equivalence(const CnfFormula& f) {
    return verify_equivalence(build_reduction(f));
}

EquivalenceReport verify_equivalence(const ReductionInstance& r) {
    if (r.padded_variable_count > kMaxVerifiedVariables) {
        throw SizeGuardError("equivalence check is limited to " +
                             std::to_string(kMaxVerifiedVariables) + " padded variables");
    }
    EquivalenceReport rep;
    rep.k_target = r.k_target;
    rep.satisfying_assignment = brute_force_sat(r.formula);
    rep.satisfiable = rep.satisfying_assignment.has_value();

    const Graph& g = r.graph;
    if (!is_connected(g)) {
        // an isolated hub is at infinite distance from every path
        rep.connected = false;
        rep.laminar = false;
        rep.laminar_fast = false;
        return rep;
    }
    rep.diameter = diameter(g);

    // The path count is at most 2^N here, so the oracle's vertex guard can
    // be raised well past its default.
    OracleLimits limits;
    limits.max_vertices = 1024;
    auto bf = is_k_laminar_bf(g, r.k_target, limits);
    rep.laminar = bf.verdict;
    auto fast = is_k_laminar(g, r.k_target);
    rep.laminar_fast = fast.verdict;

    bool all_satisfy = true;
    for (const auto* w : {&bf.witness, &fast.witness}) {
        if (w->has_value()) {
            all_satisfy = all_satisfy && satisfies(r.formula, assignment_from_witness(r, **w));
        }
    }
    rep.witness = bf.witness ? bf.witness : fast.witness;
    if (rep.witness) {
        rep.assignment = assignment_from_witness(r, *rep.witness);
    }
    rep.witness_assignment_satisfies = rep.witness.has_value() && all_satisfy;
    return rep;
}

nlohmann::json to_json(const EquivalenceReport& report, const Graph& g) {
    nlohmann::json j;
    j["satisfiable"] = report.satisfiable;
    j["laminar"] = report.laminar;
    if (report.laminar_fast) {
        j["laminar_fast"] = *report.laminar_fast;
    }
    j["k_target"] = report.k_target;
    j["connected"] = report.connected;
    j["diameter"] = report.diameter >= 0 ? nlohmann::json(report.diameter) : nlohmann::json(nullptr);
    if (report.witness) {
        j["witness"] = report.witness->labels(g);
    }
    if (report.assignment) {
        j["assignment"] = assignment_json(*report.assignment);
    }
    if (report.satisfying_assignment) {
        j["satisfying_assignment"] = assignment_json(*report.satisfying_assignment);
    }
    j["agree"] = report.agree();
    return j;
}

std::string roles_table(const ReductionInstance& r) {
    std::ostringstream out;
    for (Vertex v = 0; v < r.graph.vertex_count(); ++v) {
        const Role& role = r.roles[v];
        out << r.graph.label(v) << '\t' << role_name(role.kind) << '\t' << role.a;
        if (role.kind == RoleKind::OccurrenceChain) {
            out << ',' << role.b << ',' << role.c;
        }
        out << '\n';
    }
    return out.str();
}

}
