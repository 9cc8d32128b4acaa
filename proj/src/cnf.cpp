#include "laminar/cnf.hpp"

#include <cstdint>
#include <cstdlib>
#include <sstream>

#include "laminar/error.hpp"

namespace laminar {

std::size_t CnfFormula::occurrence_count() const {
    std::size_t total = 0;
    for (const auto& c : clauses) {
        total += c.size();
    }
    return total;
}

std::vector<int> CnfFormula::occurrences_per_variable() const {
    std::vector<int> count(static_cast<std::size_t>(variable_count) + 1, 0);
    for (const auto& c : clauses) {
        for (Literal lit : c) {
            ++count[static_cast<std::size_t>(std::abs(lit))];
        }
    }
    return count;
}

bool CnfFormula::in_hardness_regime() const {
    for (const auto& c : clauses) {
        if (c.empty() || c.size() > 3) {
            return false;
        }
    }
    auto count = occurrences_per_variable();
    for (int i = 1; i <= variable_count; ++i) {
        if (count[i] < 2 || count[i] > 3) {
            return false;
        }
    }
    return true;
}

std::string CnfFormula::to_dimacs() const {
    std::ostringstream out;
    out << "p cnf " << variable_count << ' ' << clauses.size() << '\n';
    for (const auto& c : clauses) {
        for (Literal lit : c) {
            out << lit << ' ';
        }
        out << "0\n";
    }
    return out.str();
}

CnfFormula parse_dimacs_cnf(std::string_view text, bool strict) {
    std::istringstream in{std::string(text)};
    CnfFormula f;
    bool have_header = false;
    long declared_clauses = 0;
    Clause current;
    bool open_clause = false;
    std::string line;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& what) {
        throw InputError("DIMACS line " + std::to_string(line_no) + ": " + what);
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string first;
        if (!(tokens >> first) || first[0] == 'c') {
            continue;
        }
        if (first == "%") {
            break;  // SATLIB end marker
        }
        if (first == "p") {
            std::string format;
            long vars = -1, count = -1;
            std::string extra;
            if (have_header || !(tokens >> format >> vars >> count) || format != "cnf" ||
                vars < 0 || count < 0 || (tokens >> extra)) {
                fail("malformed problem line");
            }
            have_header = true;
            f.variable_count = static_cast<int>(vars);
            declared_clauses = count;
            continue;
        }
        if (!have_header) {
            fail("clause before the 'p cnf' header");
        }
        std::istringstream lits(line);
        std::string token;
        while (lits >> token) {
            char* end = nullptr;
            long lit = std::strtol(token.c_str(), &end, 10);
            if (*end != '\0') {
                fail("malformed literal '" + token + "'");
            }
            if (lit == 0) {
                if (strict && current.size() != 3) {
                    fail("clause with " + std::to_string(current.size()) +
                         " literals in strict 3-CNF mode");
                }
                f.clauses.push_back(std::move(current));
                current.clear();
                open_clause = false;
                continue;
            }
            if (std::labs(lit) > f.variable_count) {
                fail("literal " + token + " out of range");
            }
            current.push_back(static_cast<Literal>(lit));
            open_clause = true;
            if (current.size() > 3) {
                fail("clause longer than 3 literals");
            }
        }
    }
    if (!have_header) {
        throw InputError("missing 'p cnf' header");
    }
    if (open_clause) {
        throw InputError("last clause is not terminated by 0");
    }
    if (static_cast<long>(f.clauses.size()) != declared_clauses) {
        throw InputError("header declares " + std::to_string(declared_clauses) +
                         " clauses, found " + std::to_string(f.clauses.size()));
    }
    return f;
}

bool satisfies(const CnfFormula& f, const Assignment& a) {
    for (const auto& c : f.clauses) {
        bool sat = false;
        for (Literal lit : c) {
            bool value = a[static_cast<std::size_t>(std::abs(lit))];
            if ((lit > 0) == value) {
                sat = true;
                break;
            }
        }
        if (!sat) {
            return false;
        }
    }
    return true;
}

std::optional<Assignment> brute_force_sat(const CnfFormula& f) {
    if (f.variable_count > 30) {
        throw SizeGuardError("brute-force SAT is limited to 30 variables");
    }
    const std::uint64_t total = std::uint64_t{1} << f.variable_count;
    Assignment a(static_cast<std::size_t>(f.variable_count) + 1, false);
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        for (int i = 1; i <= f.variable_count; ++i) {
            a[i] = (bits >> (i - 1)) & 1;
        }
        if (satisfies(f, a)) {
            return a;
        }
    }
    return std::nullopt;
}

}
