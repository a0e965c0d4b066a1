#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "conlab/core/bits.hpp"
#include "conlab/core/cnf.hpp"
#include "conlab/core/errors.hpp"
#include "conlab/core/graph.hpp"

namespace conlab {

/// phi over x_2..x_n  ->  (x_1 ∨ D_1) ∧ ... ∧ (x_1 ∨ D_{m-1}) ∧ ¬x_1.
/// With x_1 true exactly the first m-1 clauses hold; with x_1 false the
/// count is one more than the number of satisfied clauses of phi.
inline CnfFormula phi_to_phi_prime(const CnfFormula& phi) {
    phi.validate();
    for (const auto& clause : phi.clauses) {
        for (int lit : clause) {
            if (std::abs(lit) == 1) throw PreconditionError("variable 1 must be unused in phi");
        }
    }
    CnfFormula out;
    out.variables = std::max(phi.variables, 1);
    for (const auto& clause : phi.clauses) {
        std::vector<int> widened{1};
        widened.insert(widened.end(), clause.begin(), clause.end());
        out.clauses.push_back(std::move(widened));
    }
    out.clauses.push_back({-1});
    return out;
}

/// Renumbers every variable v to v + 1, freeing variable 1.
inline CnfFormula shift_variables(const CnfFormula& phi) {
    CnfFormula out{phi.variables + 1, {}};
    for (const auto& clause : phi.clauses) {
        std::vector<int> shifted;
        for (int lit : clause) shifted.push_back(lit > 0 ? lit + 1 : lit - 1);
        out.clauses.push_back(std::move(shifted));
    }
    return out;
}

/// Enumerates all assignments of `vars` on top of `assignment`.
template <typename Fn>
bool for_each_assignment(const std::vector<int>& vars, std::vector<bool>& assignment, Fn&& fn) {
    const std::size_t n = vars.size();
    if (n >= 63) throw SizeLimitError("too many variables to enumerate");
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        for (std::size_t i = 0; i < n; ++i) assignment[static_cast<std::size_t>(vars[i])] = ((bits >> i) & 1U) != 0;
        if (fn()) return true;
    }
    return false;
}

inline bool is_satisfiable(const CnfFormula& f) {
    std::vector<int> vars;
    for (int v = 1; v <= f.variables; ++v) vars.push_back(v);
    std::vector<bool> assignment(static_cast<std::size_t>(f.variables) + 1, false);
    return for_each_assignment(vars, assignment, [&] { return f.satisfied_by(assignment); });
}

/// Truth of ∃x ¬∃y φ(x, y) by nested enumeration.
inline bool qsat2_truth(const QSat2Instance& q) {
    q.validate();
    std::vector<bool> assignment(static_cast<std::size_t>(q.formula.variables) + 1, false);
    return for_each_assignment(q.exists_vars, assignment, [&] {
        const bool inner_sat =
            for_each_assignment(q.inner_vars, assignment, [&] { return q.formula.satisfied_by(assignment); });
        return !inner_sat;
    });
}

/// Pads the smaller block with fresh unused variables so both blocks have
/// the same size. Unused variables do not change the truth value.
inline QSat2Instance pad_blocks(QSat2Instance q) {
    while (q.exists_vars.size() < q.inner_vars.size()) q.exists_vars.push_back(++q.formula.variables);
    while (q.inner_vars.size() < q.exists_vars.size()) q.inner_vars.push_back(++q.formula.variables);
    return q;
}

struct GndInstance {
    UndirectedGraph graph;
    std::int64_t ell = 0;
    Mask x = 0;
    std::int64_t limit = 0;
};

/// QSAT2 -> complement of minimum GND' recognition (independent-set form).
///
/// Karp's 3SAT -> vertex cover graph on phi, except x_i and its negation are
/// not joined: vertices x<i>/nx<i> (exists block), y<i>/ny<i> joined by an
/// edge (inner block), a<j>,b<j>,c<j> forming a triangle per clause and wired
/// to the clause's literals. For every exists variable, two padding sets
/// I<i>_* and J<i>_* of 2n+m-2 vertices each are joined to everything except
/// themselves and {x<i>, nx<i>}. ell = 2n+m-1, X = {x_1..x_n, nx_1}, k = n.
///
/// q is true iff X is *not* a minimum GND' solution, iff some n vertices
/// destroy every independent set of size 2n+m.
///
/// Clauses with fewer than three literals repeat their last literal.
inline GndInstance qsat2_to_gnd_prime(const QSat2Instance& q) {
    q.validate();
    const std::size_t n = q.exists_vars.size();
    const std::size_t m = q.formula.clauses.size();
    if (n == 0 || n != q.inner_vars.size()) {
        throw PreconditionError("both variable blocks must be nonempty and of equal size (see pad_blocks)");
    }
    if (m == 0) throw PreconditionError("formula needs at least one clause");
    const std::size_t pad = 2 * n + m - 2;
    require_vertex_count(4 * n + 3 * m + 2 * n * pad);

    // Literal -> vertex name.
    std::vector<std::string> positive(static_cast<std::size_t>(q.formula.variables) + 1);
    std::vector<std::string> negative(positive.size());
    for (std::size_t i = 0; i < n; ++i) {
        const auto x = static_cast<std::size_t>(q.exists_vars[i]);
        const auto y = static_cast<std::size_t>(q.inner_vars[i]);
        positive[x] = "x" + std::to_string(i + 1);
        negative[x] = "nx" + std::to_string(i + 1);
        positive[y] = "y" + std::to_string(i + 1);
        negative[y] = "ny" + std::to_string(i + 1);
    }
    const auto literal_vertex = [&](int lit) {
        const auto v = static_cast<std::size_t>(std::abs(lit));
        return lit > 0 ? positive[v] : negative[v];
    };

    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 1; i <= n; ++i) {
        const auto s = std::to_string(i);
        vertices.insert(vertices.end(), {"x" + s, "nx" + s, "y" + s, "ny" + s});
        edges.emplace_back("y" + s, "ny" + s);
    }
    for (std::size_t j = 1; j <= m; ++j) {
        const auto s = std::to_string(j);
        const std::string a = "a" + s, b = "b" + s, c = "c" + s;
        vertices.insert(vertices.end(), {a, b, c});
        edges.insert(edges.end(), {{a, b}, {b, c}, {a, c}});
        auto clause = q.formula.clauses[j - 1];
        while (clause.size() < 3) clause.push_back(clause.back());
        edges.emplace_back(a, literal_vertex(clause[0]));
        edges.emplace_back(b, literal_vertex(clause[1]));
        edges.emplace_back(c, literal_vertex(clause[2]));
    }
    const std::size_t core = vertices.size();
    std::vector<std::vector<std::string>> padding;
    for (std::size_t i = 1; i <= n; ++i) {
        for (const char* prefix : {"I", "J"}) {
            std::vector<std::string> block;
            for (std::size_t t = 1; t <= pad; ++t) {
                block.push_back(prefix + std::to_string(i) + "_" + std::to_string(t));
            }
            vertices.insert(vertices.end(), block.begin(), block.end());
            padding.push_back(std::move(block));
        }
    }
    // Padding vertex joins everything outside its own block and its x pair;
    // pairs of padding vertices from different blocks are added once.
    for (std::size_t b = 0; b < padding.size(); ++b) {
        const std::size_t var = b / 2 + 1;
        const std::string xi = "x" + std::to_string(var), nxi = "nx" + std::to_string(var);
        for (const auto& p : padding[b]) {
            for (std::size_t v = 0; v < core; ++v) {
                if (vertices[v] != xi && vertices[v] != nxi) edges.emplace_back(p, vertices[v]);
            }
            for (std::size_t other = b + 1; other < padding.size(); ++other) {
                for (const auto& r : padding[other]) edges.emplace_back(p, r);
            }
        }
    }

    GndInstance out;
    out.graph = UndirectedGraph::from_names(vertices, edges);
    out.ell = static_cast<std::int64_t>(2 * n + m - 1);
    out.limit = static_cast<std::int64_t>(n);
    for (std::size_t i = 1; i <= n; ++i) out.x |= bit(out.graph.names().at("x" + std::to_string(i)));
    out.x |= bit(out.graph.names().at("nx1"));
    return out;
}

}  // namespace conlab
