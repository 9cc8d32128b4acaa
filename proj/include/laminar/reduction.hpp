#ifndef laminar_reduction_hpp
#define laminar_reduction_hpp

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "laminar/cnf.hpp"
#include "laminar/graph.hpp"

namespace laminar {

enum class RoleKind { PosLiteral, NegLiteral, SpineChain, ClauseHub, OccurrenceChain };

const char* role_name(RoleKind kind);

/*
 * What a vertex of G(phi) stands for. Indices are 1-based:
 *   PosLiteral / NegLiteral: a = variable
 *   SpineChain: a = position 1..2N on the two pendant chains
 *   ClauseHub: a = clause
 *   OccurrenceChain: a = clause, b = occurrence within the clause,
 *                    c = step from the hub (1..N/2)
 */
struct Role {
    RoleKind kind;
    int a = 0;
    int b = 0;
    int c = 0;
};

/*
 * The 3SAT gadget graph. N = padded variable count (even, >= 4).
 *
 *   ladder:  X_i - ~X_i, and both joined to X_{i+-1}, ~X_{i+-1}
 *   spine:   V_1 - ... - V_N joined to X_1 and ~X_1,
 *            V_{N+1} - ... - V_2N with V_{N+1} joined to X_N and ~X_N
 *   clauses: one hub per clause, linked to each of its literal vertices
 *            by a private chain of N/2 internal vertices (length N/2 + 1)
 */
struct ReductionInstance {
    CnfFormula formula;
    Graph graph;
    int variable_count = 0;
    int padded_variable_count = 0;
    int k_target = 0;
    std::vector<Role> roles;          // indexed by vertex
    std::vector<Vertex> pos_literal;  // [1..N]
    std::vector<Vertex> neg_literal;  // [1..N]
    std::vector<Vertex> spine;        // [1..2N]
    std::vector<Vertex> hubs;         // [1..m]
};

// Odd or small variable counts are padded with unused variables up to an
// even count of at least 4. Throws InputError when there are no clauses.
ReductionInstance build_reduction(const CnfFormula& f);

struct StructureReport {
    std::vector<std::string> problems;
    std::size_t vertex_count = 0;
    // 4N + m + m_phi * N/2: one hub per clause.
    std::size_t expected_vertex_count = 0;
    // 4N + m_phi * (N/2 + 1): the count that charges a hub per occurrence.
    std::size_t occurrence_convention_count = 0;
    bool in_hardness_regime = false;
    // 4k^2 <= count <= 16k^2, evaluated on occurrence_convention_count.
    bool k_bound_holds = false;

    bool ok() const { return problems.empty(); }
};

// Walks roles and adjacency and checks every structural invariant.
StructureReport validate_structure(const ReductionInstance& r);

struct DiameterCertificate {
    int diameter = 0;
    int spine_distance = 0;  // d(V_1, V_2N)
    bool achieved_by_spine_ends = false;
    int max_hub_eccentricity = 0;
    bool hubs_strictly_inside = false;
    int literal_constant = 0;  // 3N + 2
    std::string note;
};

// Exhaustive BFS. Disagreement with 3N + 2 goes into `note` only.
DiameterCertificate certified_diameter(const ReductionInstance& r);

// x_i is true iff the path visits X_i. Throws ContractViolation if the path
// visits both X_i and ~X_i. Result has N + 1 entries (index 0 unused).
Assignment assignment_from_witness(const ReductionInstance& r, const Path& p);

struct EquivalenceReport {
    bool satisfiable = false;
    bool laminar = false;  // oracle verdict
    std::optional<bool> laminar_fast;
    int k_target = 0;
    int diameter = -1;  // -1 when G(phi) is disconnected
    bool connected = true;
    std::optional<Assignment> satisfying_assignment;
    std::optional<Path> witness;
    std::optional<Assignment> assignment;  // read off the witness
    bool witness_assignment_satisfies = false;

    bool agree() const {
        return satisfiable == laminar && (!laminar_fast || *laminar_fast == laminar) &&
               (!laminar || witness_assignment_satisfies);
    }
};

inline constexpr int kMaxVerifiedVariables = 8;

// Brute-force SAT against k_target-laminarity of G(phi), decided by the
// diametral-path oracle and by the fast recognizer. Throws SizeGuardError
// when the padded variable count exceeds kMaxVerifiedVariables.
EquivalenceReport verify_equivalence(const CnfFormula& f);
EquivalenceReport verify_equivalence(const ReductionInstance& r);

nlohmann::json to_json(const EquivalenceReport& report, const Graph& g);

// Tab-separated lines: label, role, comma-separated indices.
std::string roles_table(const ReductionInstance& r);

}

#endif /* laminar_reduction_hpp */
