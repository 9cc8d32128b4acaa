#ifndef laminar_cnf_hpp
#define laminar_cnf_hpp

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace laminar {

// DIMACS-style literal: +i is x_i, -i is its negation, variables are 1-based.
using Literal = int;
using Clause = std::vector<Literal>;
// assignment[i] is the value of x_i; index 0 is unused.
using Assignment = std::vector<bool>;

struct CnfFormula {
    int variable_count = 0;
    std::vector<Clause> clauses;

    std::size_t clause_count() const { return clauses.size(); }
    // Total literal occurrences over all clauses.
    std::size_t occurrence_count() const;
    // Occurrences of variable i in 1..n, index 0 unused.
    std::vector<int> occurrences_per_variable() const;
    // Every variable occurs 2 or 3 times and no clause is longer than 3.
    bool in_hardness_regime() const;

    std::string to_dimacs() const;
};

// Accepts "c" comments, one "p cnf V C" header, clauses of signed integers
// each closed by 0 (clauses may span lines). Clauses of 0..3 literals are
// accepted; with `strict`, every clause must have exactly 3. Throws
// InputError on malformed headers, out-of-range literals, long clauses,
// or a clause count that disagrees with the header.
CnfFormula parse_dimacs_cnf(std::string_view text, bool strict = false);

bool satisfies(const CnfFormula& f, const Assignment& a);

// First satisfying assignment in binary counting order, if any (2^n).
std::optional<Assignment> brute_force_sat(const CnfFormula& f);

}

#endif /* laminar_cnf_hpp */
