#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "conlab/core/errors.hpp"

namespace conlab {

/// CNF over variables 1..variables; literal v > 0 is x_v, -v is its negation.
struct CnfFormula {
    int variables = 0;
    std::vector<std::vector<int>> clauses;

    void validate() const {
        if (variables < 0) throw InputError("negative variable count");
        for (const auto& clause : clauses) {
            for (int lit : clause) {
                if (lit == 0 || std::abs(lit) > variables) {
                    throw InputError("literal " + std::to_string(lit) + " out of range 1.." +
                                     std::to_string(variables));
                }
            }
        }
    }

    /// assignment[v] for v in 1..variables (index 0 unused).
    bool satisfied_by(const std::vector<bool>& assignment) const {
        return std::all_of(clauses.begin(), clauses.end(), [&](const auto& clause) {
            return clause_satisfied(clause, assignment);
        });
    }

    std::size_t satisfied_count(const std::vector<bool>& assignment) const {
        return static_cast<std::size_t>(std::count_if(
            clauses.begin(), clauses.end(),
            [&](const auto& clause) { return clause_satisfied(clause, assignment); }));
    }

    static bool clause_satisfied(const std::vector<int>& clause, const std::vector<bool>& assignment) {
        return std::any_of(clause.begin(), clause.end(), [&](int lit) {
            return assignment[static_cast<std::size_t>(std::abs(lit))] == (lit > 0);
        });
    }

    bool operator==(const CnfFormula&) const = default;
};

/// exists x_1..x_n . not (exists y_1..y_n . formula)
struct QSat2Instance {
    CnfFormula formula;
    std::vector<int> exists_vars;  // x block
    std::vector<int> inner_vars;   // negated inner exists block (y)

    void validate() const {
        formula.validate();
        std::vector<int> seen(static_cast<std::size_t>(formula.variables) + 1, 0);
        for (const auto* block : {&exists_vars, &inner_vars}) {
            for (int v : *block) {
                if (v < 1 || v > formula.variables) {
                    throw InputError("block variable " + std::to_string(v) + " out of range");
                }
                if (seen[static_cast<std::size_t>(v)]++ != 0) {
                    throw InputError("variable " + std::to_string(v) + " listed twice");
                }
            }
        }
        for (int v = 1; v <= formula.variables; ++v) {
            if (seen[static_cast<std::size_t>(v)] == 0) {
                throw InputError("variable " + std::to_string(v) + " is in neither block");
            }
        }
        for (const auto& clause : formula.clauses) {
            if (clause.empty() || clause.size() > 3) {
                throw InputError("QSAT2 clauses must have 1 to 3 literals");
            }
        }
    }

    bool operator==(const QSat2Instance&) const = default;
};

}  // namespace conlab
