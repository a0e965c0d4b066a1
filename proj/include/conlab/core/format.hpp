#pragma once

#include <charconv>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "conlab/core/cnf.hpp"
#include "conlab/core/election.hpp"
#include "conlab/core/errors.hpp"
#include "conlab/core/graph.hpp"
#include "conlab/core/limits.hpp"

namespace conlab {

namespace detail {

struct Line {
    std::size_t number;
    std::string_view text;
};

/// Non-empty lines with '#' comments stripped.
inline std::vector<Line> content_lines(std::string_view text, char comment = '#') {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = text.find('\n', start);
        auto line = text.substr(start, end == text.npos ? text.npos : end - start);
        ++number;
        if (auto hash = line.find(comment); hash != line.npos) line = line.substr(0, hash);
        line = trim(line);
        if (!line.empty()) lines.push_back({number, line});
        if (end == text.npos) break;
        start = end + 1;
    }
    return lines;
}

inline std::int64_t parse_int(std::string_view s, std::size_t line, const char* what) {
    s = trim(s);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw InputError(std::string("expected integer ") + what + ", got '" + std::string(s) + "'",
                         line);
    }
    return value;
}

/// Splits "key: value"; nullopt when there is no colon.
inline std::optional<std::pair<std::string_view, std::string_view>> key_value(std::string_view s) {
    const auto colon = s.find(':');
    if (colon == s.npos) return std::nullopt;
    return std::pair{trim(s.substr(0, colon)), trim(s.substr(colon + 1))};
}

inline std::vector<std::string> name_list(std::string_view s) {
    std::vector<std::string> names;
    if (trim(s).empty()) return names;
    for (auto part : split(s, ',')) names.emplace_back(part);
    return names;
}

template <typename Fn>
auto rethrow_with_line(std::size_t line, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const InputError& e) {
        if (e.line() != 0) throw;
        throw InputError(e.what(), line);
    } catch (const DomainError& e) {
        throw InputError(e.what(), line);
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Election files
//
//   # comment
//   candidates: a,b,c
//   weights: a=2,c=3        (optional; omitted candidates weigh 1)
//   2: a>b>c
//   1: c>a>b

inline Election parse_election(std::string_view text, const Limits& limits = {}) {
    const auto lines = detail::content_lines(text);
    if (lines.empty()) throw InputError("empty election file");

    std::optional<NameIndex> names;
    std::vector<std::int64_t> weights;
    bool weights_seen = false;
    std::vector<VoteGroup> groups;

    for (const auto& [number, line] : lines) {
        auto kv = detail::key_value(line);
        if (!kv) throw InputError("expected 'key: value'", number);
        const auto [key, value] = *kv;
        if (!names) {
            if (key != "candidates") throw InputError("first line must be 'candidates: ...'", number);
            names = detail::rethrow_with_line(number, [&] { return NameIndex(detail::name_list(value)); });
            weights.assign(names->size(), 1);
            continue;
        }
        if (key == "candidates") throw InputError("duplicate 'candidates' line", number);
        if (key == "weights") {
            if (weights_seen) throw InputError("duplicate 'weights' line", number);
            if (!groups.empty()) throw InputError("'weights' must precede the votes", number);
            weights_seen = true;
            for (auto item : split(value, ',')) {
                const auto eq = item.find('=');
                if (eq == item.npos) throw InputError("expected name=weight", number);
                const Id c = detail::rethrow_with_line(number, [&] { return names->at(trim(item.substr(0, eq))); });
                const auto w = detail::parse_int(item.substr(eq + 1), number, "weight");
                if (w <= 0) throw InputError("weight must be positive", number);
                if (w > limits.max_weight) {
                    throw InputError("weight exceeds cap " + std::to_string(limits.max_weight), number);
                }
                weights[c] = w;
            }
            continue;
        }
        const auto count = detail::parse_int(key, number, "voter count");
        if (count <= 0) throw InputError("voter count must be positive", number);
        auto vote = detail::rethrow_with_line(number, [&] { return parse_ranking(value, *names); });
        groups.push_back({count, std::move(vote)});
    }
    if (!names) throw InputError("missing 'candidates' line");
    return Election(std::move(*names), std::move(groups), std::move(weights), limits.max_weight);
}

/// Canonical text: candidates sorted, non-unit weights only, vote groups
/// merged and sorted.
inline std::string serialize_election(const Election& e) {
    std::ostringstream out;
    const auto& names = e.candidates();
    out << "candidates: ";
    for (std::size_t i = 0; i < names.size(); ++i) out << (i ? "," : "") << names.name(Id(i));
    out << '\n';
    if (!e.has_unit_weights()) {
        out << "weights: ";
        bool first = true;
        for (std::size_t c = 0; c < names.size(); ++c) {
            if (e.weights()[c] == 1) continue;
            out << (first ? "" : ",") << names.name(Id(c)) << '=' << e.weights()[c];
            first = false;
        }
        out << '\n';
    }
    for (const auto& g : e.groups()) out << g.count << ": " << format_ranking(g.vote, names) << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// Graph files
//
//   vertices: a,b,c
//   edge: a,b        (undirected)   or   arc: a,b   (directed)
// Instance extensions used by the recognition and reduction commands:
//   select: a,b      vertex set X
//   select-arc: a,b  one arc of an arc set X (repeatable)
//   limit: 2         delete limit k
//   ell: 1           clique / independent-set parameter

struct GraphFile {
    bool directed = false;
    UndirectedGraph undirected;
    Digraph digraph;
    Mask selected = 0;
    ArcSet selected_arcs;
    std::optional<std::int64_t> limit;
    std::optional<std::int64_t> ell;
};

inline GraphFile parse_graph_file(std::string_view text, bool directed) {
    const auto lines = detail::content_lines(text);
    GraphFile file;
    file.directed = directed;
    std::optional<NameIndex> names;
    std::vector<std::pair<Id, Id>> pairs;
    std::vector<std::pair<Id, Id>> selected_arcs;
    bool selected_seen = false;

    const auto pair_of = [&](std::string_view value, std::size_t number) {
        const auto parts = split(value, ',');
        if (parts.size() != 2) throw InputError("expected 'u,v'", number);
        return detail::rethrow_with_line(number, [&] {
            return std::pair{names->at(parts[0]), names->at(parts[1])};
        });
    };

    for (const auto& [number, line] : lines) {
        auto kv = detail::key_value(line);
        if (!kv) throw InputError("expected 'key: value'", number);
        const auto [key, value] = *kv;
        if (!names) {
            if (key != "vertices") throw InputError("first line must be 'vertices: ...'", number);
            names = detail::rethrow_with_line(number, [&] { return NameIndex(detail::name_list(value)); });
            if (names->size() > kMaxMaskBits) {
                throw SizeLimitError("graphs are limited to 64 vertices");
            }
            continue;
        }
        if (key == "edge" || key == "arc") {
            if ((key == "arc") != directed) {
                throw InputError(directed ? "expected 'arc:' lines in a directed graph file"
                                          : "expected 'edge:' lines in an undirected graph file",
                                 number);
            }
            pairs.push_back(pair_of(value, number));
        } else if (key == "select") {
            if (directed) throw InputError("use 'select-arc:' for arc sets", number);
            if (selected_seen) throw InputError("duplicate 'select' line", number);
            selected_seen = true;
            for (const auto& n : detail::name_list(value)) {
                file.selected |= bit(detail::rethrow_with_line(number, [&] { return names->at(n); }));
            }
        } else if (key == "select-arc") {
            if (!directed) throw InputError("'select-arc:' needs a directed graph file", number);
            selected_arcs.push_back(pair_of(value, number));
        } else if (key == "limit") {
            const auto k = detail::parse_int(value, number, "limit");
            if (k < 0) throw InputError("limit must be nonnegative", number);
            file.limit = k;
        } else if (key == "ell") {
            const auto l = detail::parse_int(value, number, "ell");
            if (l < 0) throw InputError("ell must be nonnegative", number);
            file.ell = l;
        } else {
            throw InputError("unknown key '" + std::string(key) + "'", number);
        }
    }
    if (!names) throw InputError("missing 'vertices' line");
    if (directed) {
        ArcSet arcs;
        for (const auto& [u, v] : pairs) arcs.push_back({u, v});
        file.digraph = Digraph(*names, arcs);
        for (const auto& [u, v] : selected_arcs) file.selected_arcs.push_back({u, v});
        file.selected_arcs = normalize(std::move(file.selected_arcs));
        if (!file.digraph.contains_arcs(file.selected_arcs)) {
            throw InputError("selected arc is not an arc of the graph");
        }
    } else {
        file.undirected = UndirectedGraph(*names, pairs);
    }
    return file;
}

inline std::string serialize_graph_file(const GraphFile& file) {
    std::ostringstream out;
    const auto& names = file.directed ? file.digraph.names() : file.undirected.names();
    out << "vertices: ";
    for (std::size_t i = 0; i < names.size(); ++i) out << (i ? "," : "") << names.name(Id(i));
    out << '\n';
    if (file.directed) {
        for (const Arc& a : file.digraph.arcs()) {
            out << "arc: " << names.name(a.from) << ',' << names.name(a.to) << '\n';
        }
        for (const Arc& a : file.selected_arcs) {
            out << "select-arc: " << names.name(a.from) << ',' << names.name(a.to) << '\n';
        }
    } else {
        for (const auto& [u, v] : file.undirected.edges()) {
            out << "edge: " << names.name(u) << ',' << names.name(v) << '\n';
        }
        if (file.selected != 0) {
            out << "select: ";
            bool first = true;
            for (Id v : mask_members(file.selected)) {
                out << (first ? "" : ",") << names.name(v);
                first = false;
            }
            out << '\n';
        }
    }
    if (file.limit) out << "limit: " << *file.limit << '\n';
    if (file.ell) out << "ell: " << *file.ell << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// DIMACS CNF, and QSAT2 as DIMACS plus block headers:
//   e-vars: 1,2            (exists block; ranges like 1..2 allowed)
//   a-negated-vars: 3,4    (inner block under the negation)

namespace detail {

inline std::vector<int> variable_list(std::string_view value, std::size_t number) {
    std::vector<int> vars;
    std::string normalized(value);
    for (char& c : normalized) {
        if (c == ',') c = ' ';
    }
    std::istringstream in(normalized);
    std::string token;
    while (in >> token) {
        if (const auto dots = token.find(".."); dots != token.npos) {
            const auto lo = parse_int(std::string_view(token).substr(0, dots), number, "variable");
            const auto hi = parse_int(std::string_view(token).substr(dots + 2), number, "variable");
            if (lo > hi) throw InputError("empty variable range", number);
            for (auto v = lo; v <= hi; ++v) vars.push_back(static_cast<int>(v));
        } else {
            vars.push_back(static_cast<int>(parse_int(token, number, "variable")));
        }
    }
    return vars;
}

inline CnfFormula parse_dimacs_body(std::string_view text, std::vector<int>* exists_vars,
                                    std::vector<int>* inner_vars) {
    CnfFormula f;
    bool header = false;
    std::int64_t declared_clauses = 0;
    std::vector<int> current;
    for (const auto& [number, line] : content_lines(text, '%')) {
        if (line.front() == 'c') continue;
        if (auto kv = key_value(line); kv && (exists_vars || inner_vars)) {
            if (kv->first == "e-vars" && exists_vars) {
                *exists_vars = variable_list(kv->second, number);
                continue;
            }
            if (kv->first == "a-negated-vars" && inner_vars) {
                *inner_vars = variable_list(kv->second, number);
                continue;
            }
            throw InputError("unknown header '" + std::string(kv->first) + "'", number);
        }
        if (line.front() == 'p') {
            std::istringstream in{std::string(line)};
            std::string p, kind;
            in >> p >> kind >> f.variables >> declared_clauses;
            if (!in || kind != "cnf" || f.variables < 0 || declared_clauses < 0) {
                throw InputError("malformed 'p cnf' header", number);
            }
            header = true;
            continue;
        }
        if (!header) throw InputError("clause before 'p cnf' header", number);
        std::istringstream in{std::string(line)};
        std::string token;
        while (in >> token) {
            const auto lit = parse_int(token, number, "literal");
            if (lit == 0) {
                f.clauses.push_back(std::move(current));
                current.clear();
            } else {
                if (std::abs(lit) > f.variables) throw InputError("literal out of range", number);
                current.push_back(static_cast<int>(lit));
            }
        }
    }
    if (!header) throw InputError("missing 'p cnf' header");
    if (!current.empty()) f.clauses.push_back(std::move(current));
    if (static_cast<std::int64_t>(f.clauses.size()) != declared_clauses) {
        throw InputError("header declares " + std::to_string(declared_clauses) + " clauses, found " +
                         std::to_string(f.clauses.size()));
    }
    return f;
}

}  // namespace detail

inline CnfFormula parse_dimacs(std::string_view text) {
    return detail::parse_dimacs_body(text, nullptr, nullptr);
}

inline std::string serialize_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.variables << ' ' << f.clauses.size() << '\n';
    for (const auto& clause : f.clauses) {
        for (int lit : clause) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

inline QSat2Instance parse_qsat2(std::string_view text) {
    QSat2Instance q;
    q.formula = detail::parse_dimacs_body(text, &q.exists_vars, &q.inner_vars);
    q.validate();
    return q;
}

inline std::string serialize_qsat2(const QSat2Instance& q) {
    std::ostringstream out;
    const auto list = [&](const std::vector<int>& vars) {
        for (std::size_t i = 0; i < vars.size(); ++i) out << (i ? "," : "") << vars[i];
        out << '\n';
    };
    out << "e-vars: ";
    list(q.exists_vars);
    out << "a-negated-vars: ";
    list(q.inner_vars);
    out << serialize_dimacs(q.formula);
    return out.str();
}

}  // namespace conlab
