#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "conlab/conlab.hpp"

namespace conlab::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kYes = 0, kNo = 1, kInputError = 2, kSizeLimit = 3, kInternal = 4 };

inline int answer(bool yes) { return yes ? kYes : kNo; }

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// ---------------------------------------------------------------------------
// Command-line sets: vertex sets "a,b,c", arc sets "a>b,b>c".

inline Mask parse_vertex_set(std::string_view text, const NameIndex& names) {
    Mask x = 0;
    for (const auto& part : split(text, ',')) {
        if (part.empty()) continue;
        x |= bit(names.at(part));
    }
    return x;
}

inline ArcSet parse_arc_set(std::string_view text, const NameIndex& names) {
    ArcSet x;
    for (const auto& part : split(text, ',')) {
        if (part.empty()) continue;
        const auto ends = split(part, '>');
        if (ends.size() != 2) throw InputError("arc '" + std::string(part) + "' is not of the form u>v");
        x.push_back({names.at(ends[0]), names.at(ends[1])});
    }
    return normalize(std::move(x));
}

inline std::string format_vertex_set(Mask x, const NameIndex& names) {
    std::string out;
    for (Id v : mask_members(x)) out += (out.empty() ? "" : ",") + names.name(v);
    return "{" + out + "}";
}

inline std::string format_arc_set(const ArcSet& x, const NameIndex& names) {
    std::string out;
    for (const Arc& a : x) out += (out.empty() ? "" : ",") + names.name(a.from) + ">" + names.name(a.to);
    return "{" + out + "}";
}

// ---------------------------------------------------------------------------
// Results are built as ordered JSON; text mode renders the same object one
// field per line, arrays as one line per element.

inline std::string render_scalar(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    if (v.is_null()) return "none";
    if (v.is_object()) {
        std::string out;
        for (const auto& [k, item] : v.items()) out += (out.empty() ? "" : "; ") + k + "=" + render_scalar(item);
        return out;
    }
    if (v.is_array()) {
        std::string out;
        for (const auto& item : v) out += (out.empty() ? "" : ", ") + render_scalar(item);
        return "[" + out + "]";
    }
    return v.dump();
}

inline void render_text(const Json& result, std::ostream& out) {
    for (const auto& [key, value] : result.items()) {
        if (value.is_array()) {
            for (const auto& item : value) out << key << ": " << render_scalar(item) << '\n';
        } else {
            out << key << ": " << render_scalar(value) << '\n';
        }
    }
}

inline void emit(const Json& result, bool json, std::ostream& out) {
    if (json) {
        out << result.dump(2) << '\n';
    } else {
        render_text(result, out);
    }
}

inline Json names_json(const std::vector<Ranking>& rankings, const NameIndex& names) {
    Json arr = Json::array();
    for (const auto& r : rankings) arr.push_back(format_ranking(r, names));
    return arr;
}

// ---------------------------------------------------------------------------
// Subcommands

struct Options {
    bool json = false;
    std::string rule;
    std::string file;
    bool all = false;
    std::string order;
    std::optional<std::string> set;
    std::optional<std::int64_t> ell;
    bool independent = false;
    std::optional<std::int64_t> delete_limit;
    std::string variant = "restriction";
    std::int64_t manipulators = 0;
    std::string target;
    std::string prefer;
    std::int64_t limit = 0;
    std::string pool;
    std::string control_rule = "kemeny";
    std::string output;
    bool shift = false;
    bool pad = false;
    std::optional<std::int64_t> reduce_limit;
    std::optional<std::int64_t> reduce_ell;
    std::size_t max_size = 5;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
};

inline int cmd_consensus(const Options& o, const Limits& limits, std::ostream& out) {
    const Election e = parse_election(read_file(o.file), limits);
    const auto& names = e.candidates();
    Json r;
    r["rule"] = o.rule;
    if (o.rule == "borda") {
        const auto scores = borda_scores(e);
        Json s = Json::object();
        for (Id c = 0; c < e.size(); ++c) s[names.name(c)] = scores[c];
        r["scores"] = s;
        r["consensus"] = format_weak_order(borda_consensus(e), names);
        emit(r, o.json, out);
        return kYes;
    }
    const bool full = o.all || e.size() <= limits.set_candidates;
    ConsensusResult result;
    if (o.rule == "kemeny") {
        result = full ? kemeny_consensus_set(e, limits) : kemeny_consensus(e, limits);
    } else {
        result = full ? slater_consensus_set(e, limits) : slater_consensus(e, limits);
    }
    r["score"] = result.optimum;
    r["complete"] = full;
    r["consensus"] = names_json(result.consensuses, names);
    if (o.json) {
        emit(r, true, out);
        return kYes;
    }
    // Text: score header, then one ranking per line.
    out << "score: " << result.optimum << '\n';
    for (const auto& x : result.consensuses) out << format_ranking(x, names) << '\n';
    if (!full) out << "# first consensus only; --all lists every one\n";
    return kYes;
}

inline GraphFile read_graph(const std::string& path, bool directed) {
    return parse_graph_file(read_file(path), directed);
}

inline int cmd_recognize(const Options& o, const Limits& limits, std::ostream& out) {
    Json r;
    r["problem"] = o.rule;
    if (o.rule == "kemeny" || o.rule == "slater") {
        const Election e = parse_election(read_file(o.file), limits);
        if (o.order.empty()) throw InputError("--order is required");
        const Ranking x = parse_ranking(o.order, e.candidates());
        bool yes = false;
        if (o.rule == "kemeny") {
            r["distance"] = distance_to_election(x, e);
            r["optimum"] = kemeny_score(e, limits);
            yes = r["distance"] == r["optimum"];
        } else {
            r["score"] = slater_score(x, e);
            r["optimum"] = slater_optimum(majority_graph(e), e.weights(), limits);
            yes = r["score"] == r["optimum"];
        }
        r["consensus"] = yes;
        emit(r, o.json, out);
        return answer(yes);
    }
    if (o.rule == "min-fas") {
        const GraphFile file = read_graph(o.file, true);
        const Digraph& g = file.digraph;
        const ArcSet x = o.set ? parse_arc_set(*o.set, g.names()) : file.selected_arcs;
        require_arcs_of(g, x);
        r["set"] = format_arc_set(x, g.names());
        if (o.delete_limit) {
            r["variant"] = o.variant;
            const auto w = o.variant == "deletion" ? fasr_deletion(g, *o.delete_limit, x, limits)
                                                   : fasr_restriction(g, *o.delete_limit, x, limits);
            r["witness"] = w ? Json(format_vertex_set(*w, g.names())) : Json(nullptr);
            emit(r, o.json, out);
            return answer(w.has_value());
        }
        r["fas"] = is_fas(g, x);
        r["minimal"] = is_minimal_fas(g, x);
        const bool minimum = is_minimum_fas(g, x, FasMethod::automatic, limits);
        r["minimum"] = minimum;
        emit(r, o.json, out);
        return answer(minimum);
    }
    if (o.rule == "min-vc") {
        const GraphFile file = read_graph(o.file, false);
        const UndirectedGraph& g = file.undirected;
        const Mask x = o.set ? parse_vertex_set(*o.set, g.names()) : file.selected;
        r["set"] = format_vertex_set(x, g.names());
        if (o.delete_limit) {
            r["variant"] = o.variant;
            const auto w = o.variant == "deletion" ? vcr_deletion(g, *o.delete_limit, x, limits)
                                                   : vcr_restriction(g, *o.delete_limit, x, limits);
            r["witness"] = w ? Json(format_vertex_set(*w, g.names())) : Json(nullptr);
            emit(r, o.json, out);
            return answer(w.has_value());
        }
        r["cover"] = is_vertex_cover(g, x);
        r["minimal"] = is_minimal_vertex_cover(g, x);
        const bool minimum = is_minimum_vertex_cover(g, x, limits);
        r["minimum"] = minimum;
        emit(r, o.json, out);
        return answer(minimum);
    }
    // min-gnd
    const GraphFile file = read_graph(o.file, false);
    const UndirectedGraph& g = file.undirected;
    const Mask x = o.set ? parse_vertex_set(*o.set, g.names()) : file.selected;
    const auto ell = o.ell ? o.ell : file.ell;
    if (!ell) throw InputError("--ell is required (or an 'ell:' line in the graph file)");
    if (*ell < 0) throw InputError("ell must be nonnegative");
    const GndForm form = o.independent ? GndForm::independent_set : GndForm::clique;
    const auto l = static_cast<std::size_t>(*ell);
    r["form"] = o.independent ? "independent-set" : "clique";
    r["ell"] = *ell;
    r["set"] = format_vertex_set(x, g.names());
    r["solution"] = gnd_kills(g, l, x, form);
    const bool minimum = is_minimum_gnd(g, l, x, form, limits);
    r["minimum"] = minimum;
    emit(r, o.json, out);
    return answer(minimum);
}

inline int cmd_manipulate(const Options& o, const Limits& limits, std::ostream& out) {
    const Election e = parse_election(read_file(o.file), limits);
    const auto& names = e.candidates();
    Json r;
    r["rule"] = o.rule;
    r["manipulators"] = o.manipulators;
    std::optional<VoteAssignment> votes;
    if (o.rule == "slater-winner") {
        if (o.prefer.empty()) throw InputError("--prefer is required");
        r["prefer"] = o.prefer;
        votes = slater_manipulation_to_winner(e, o.manipulators, names.at(o.prefer), limits);
    } else {
        if (o.target.empty()) throw InputError("--target is required");
        if (o.rule == "kemeny") {
            const Ranking target = parse_ranking(o.target, names);
            r["target"] = format_ranking(target, names);
            votes = kemeny_manipulation_to_consensus(e, o.manipulators, target, limits);
        } else {
            const WeakOrder target = parse_weak_order(o.target, names);
            r["target"] = format_weak_order(target, names);
            votes = borda_manipulation_to_consensus(e, o.manipulators, target, limits);
        }
    }
    r["possible"] = votes.has_value();
    r["vote"] = votes ? names_json(*votes, names) : Json::array();
    emit(r, o.json, out);
    return answer(votes.has_value());
}

inline int cmd_control(const Options& o, const Limits& limits, std::ostream& out) {
    const Election e = parse_election(read_file(o.file), limits);
    const auto& names = e.candidates();
    if (o.target.empty()) throw InputError("--target is required");
    const Ranking target = parse_ranking(o.target, names);
    Json r;
    r["action"] = o.rule;
    r["limit"] = o.limit;
    r["target"] = format_ranking(target, names);
    bool yes = false;
    if (o.rule == "cdc") {
        r["rule"] = o.control_rule;
        const auto d = o.control_rule == "slater" ? slater_cdc_to_consensus(e, o.limit, target, limits)
                                                  : kemeny_cdc_to_consensus(e, o.limit, target, limits);
        yes = d.has_value();
        r["possible"] = yes;
        r["delete"] = d ? Json(format_vertex_set(*d, names)) : Json(nullptr);
    } else if (o.rule == "cdv") {
        const auto removed = kemeny_cdv_to_consensus(e, o.limit, target, limits);
        yes = removed.has_value();
        r["possible"] = yes;
        r["remove"] = removed ? names_json(*removed, names) : Json::array();
    } else {
        if (o.pool.empty()) throw InputError("--pool is required for cav");
        const Election pool = parse_election(read_file(o.pool), limits);
        const auto added = kemeny_cav_to_consensus(e, pool, o.limit, target, limits);
        yes = added.has_value();
        r["possible"] = yes;
        r["add"] = added ? names_json(*added, names) : Json::array();
    }
    emit(r, o.json, out);
    return answer(yes);
}

inline std::int64_t required(const std::optional<std::int64_t>& flag, const std::optional<std::int64_t>& file,
                             const char* what) {
    if (flag) return *flag;
    if (file) return *file;
    throw InputError(std::string("missing ") + what + " (flag or graph-file line)");
}

inline int cmd_reduce(const Options& o, const Limits&, std::ostream& out) {
    const std::string input = read_file(o.file);
    std::string text;
    Json r;
    r["reduction"] = o.rule;

    const auto election_text = [](const Election& e, const Ranking& order, std::optional<std::int64_t> limit,
                                  bool rejected) {
        std::string header = "# query-order: " + format_ranking(order, e.candidates()) + "\n";
        if (limit) header += "# delete-limit: " + std::to_string(*limit) + "\n";
        if (rejected) header += "# rejected: the input is a no-instance\n";
        return header + serialize_election(e);
    };

    if (o.rule == "vc2fas") {
        const GraphFile file = read_graph(o.file, false);
        const HatImage hat = vc_to_fas(file.undirected, file.selected);
        GraphFile image;
        image.directed = true;
        image.digraph = hat.digraph;
        image.selected_arcs = hat.arcs;
        image.limit = file.limit;
        text = serialize_graph_file(image);
        r["vertices"] = hat.digraph.size();
        r["arcs"] = hat.digraph.arc_count();
    } else if (o.rule == "g2election") {
        const GraphFile file = read_graph(o.file, true);
        const Election e = election_from_digraph(file.digraph);
        text = serialize_election(e);
        r["candidates"] = e.size();
        r["voters"] = e.voter_count();
    } else if (o.rule == "fas2rec") {
        const GraphFile file = read_graph(o.file, true);
        const auto image = fasr_to_kemeny_recognition(file.digraph, file.selected_arcs);
        text = election_text(image.election, image.order, std::nullopt, image.rejected);
        r["rejected"] = image.rejected;
        r["query-order"] = format_ranking(image.order, image.election.candidates());
    } else if (o.rule == "phi2phiprime") {
        CnfFormula phi = parse_dimacs(input);
        if (o.shift) phi = shift_variables(phi);
        const CnfFormula prime = phi_to_phi_prime(phi);
        text = serialize_dimacs(prime);
        r["variables"] = prime.variables;
        r["clauses"] = prime.clauses.size();
    } else if (o.rule == "qsat2gnd") {
        QSat2Instance q = parse_qsat2(input);
        if (o.pad) q = pad_blocks(q);
        const GndInstance image = qsat2_to_gnd_prime(q);
        GraphFile file;
        file.undirected = image.graph;
        file.selected = image.x;
        file.limit = image.limit;
        file.ell = image.ell;
        text = "# independent-set form: X is not minimum iff the formula is true\n" + serialize_graph_file(file);
        r["vertices"] = image.graph.size();
        r["ell"] = image.ell;
        r["limit"] = image.limit;
        r["set"] = format_vertex_set(image.x, image.graph.names());
    } else if (o.rule == "gnd2vcrr") {
        const GraphFile file = read_graph(o.file, false);
        const auto k = required(o.reduce_limit, file.limit, "limit");
        const auto ell = required(o.reduce_ell, file.ell, "ell");
        const VcInstance image = gnd_to_vcrr(file.undirected, k, ell);
        GraphFile result;
        result.undirected = image.graph;
        result.selected = image.x;
        result.limit = image.limit;
        text = serialize_graph_file(result);
        r["vertices"] = image.graph.size();
        r["limit"] = image.limit;
    } else if (o.rule == "vcrr2fasrr") {
        const GraphFile file = read_graph(o.file, false);
        const auto k = required(o.reduce_limit, file.limit, "limit");
        const FasInstance image = vcrr_to_fasrr(file.undirected, k, file.selected);
        GraphFile result;
        result.directed = true;
        result.digraph = image.graph;
        result.selected_arcs = image.x;
        result.limit = image.limit;
        text = serialize_graph_file(result);
        r["vertices"] = image.graph.size();
        r["limit"] = image.limit;
    } else {  // fasrr2cdc
        const GraphFile file = read_graph(o.file, true);
        const auto k = required(o.reduce_limit, file.limit, "limit");
        const CdcImage image = fasrr_to_kemeny_cdc(file.digraph, k, file.selected_arcs);
        text = election_text(image.election, image.order, image.limit, image.rejected);
        r["rejected"] = image.rejected;
        r["limit"] = image.limit;
        r["query-order"] = format_ranking(image.order, image.election.candidates());
    }

    if (o.output.empty() || o.output == "-") {
        out << text;
        return kYes;
    }
    std::ofstream file(o.output, std::ios::binary);
    if (!file) throw InputError("cannot write '" + o.output + "'");
    file << text;
    if (!file) throw InputError("cannot write '" + o.output + "'");
    r["output"] = o.output;
    emit(r, o.json, out);
    return kYes;
}

inline int cmd_verify(const Options& o, const Limits& limits, std::ostream& out) {
    const ReductionReport report = verify_reduction(o.rule, o.max_size, o.trials, o.seed, limits);
    Json r;
    r["reduction"] = report.name;
    r["seed"] = report.seed;
    r["max-size"] = report.max_size;
    r["trials"] = report.trials;
    r["agreements"] = report.agreements;
    Json failures = Json::array();
    for (const auto& f : report.failures) {
        failures.push_back(Json{{"instance", f.instance}, {"left", f.left}, {"right", f.right}});
    }
    r["failures"] = report.failures.size();
    r["failure"] = failures;
    emit(r, o.json, out);
    return report.ok() ? kYes : kNo;
}

// ---------------------------------------------------------------------------

/// Parses argv, dispatches, and maps errors to exit codes:
/// 0 yes, 1 no, 2 input error, 3 size limit, 4 internal error.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact consensus-ranking workbench", "conlab"};
    app.require_subcommand(1);
    Options o;

    const auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Print JSON instead of text"); };

    auto* consensus = app.add_subcommand("consensus", "Compute Kemeny, Slater or Borda consensuses");
    consensus->add_option("rule", o.rule)->required()->check(CLI::IsMember({"kemeny", "slater", "borda"}));
    consensus->add_option("file", o.file, "Election file")->required();
    consensus->add_flag("--all", o.all, "List every consensus even above the set-enumeration limit");
    json_flag(consensus);

    auto* recognize = app.add_subcommand("recognize", "Decide a recognition problem");
    recognize->add_option("problem", o.rule)
        ->required()
        ->check(CLI::IsMember({"kemeny", "slater", "min-fas", "min-vc", "min-gnd"}));
    recognize->add_option("file", o.file, "Election or graph file")->required();
    recognize->add_option("--order", o.order, "Ranking a>b>c (kemeny, slater)");
    recognize->add_option("--set", o.set, "Vertex set a,b or arc set a>b,b>c (defaults to the file's selection)");
    recognize->add_option("--ell", o.ell, "GND parameter");
    recognize->add_flag("--independent", o.independent, "GND in independent-set form");
    recognize->add_option("--delete-limit", o.delete_limit, "Search a deletion witness W with |W| <= K");
    recognize->add_option("--variant", o.variant, "Witness semantics")
        ->check(CLI::IsMember({"deletion", "restriction"}));
    json_flag(recognize);

    auto* manipulate = app.add_subcommand("manipulate", "Coalitional manipulation");
    manipulate->add_option("rule", o.rule)
        ->required()
        ->check(CLI::IsMember({"kemeny", "borda", "slater-winner"}));
    manipulate->add_option("file", o.file, "Election file of the nonmanipulators")->required();
    manipulate->add_option("--manipulators", o.manipulators, "Number of manipulators")->required();
    manipulate->add_option("--target", o.target, "Target ranking (Borda: a>b=c allowed)");
    manipulate->add_option("--prefer", o.prefer, "Preferred candidate (slater-winner)");
    json_flag(manipulate);

    auto* control = app.add_subcommand("control", "Control to consensus");
    control->add_option("action", o.rule)->required()->check(CLI::IsMember({"cdc", "cdv", "cav"}));
    control->add_option("file", o.file, "Election file")->required();
    control->add_option("--limit", o.limit, "Maximum number of deleted or added items")->required();
    control->add_option("--target", o.target, "Target ranking")->required();
    control->add_option("--pool", o.pool, "Election file of unregistered voters (cav)");
    control->add_option("--rule", o.control_rule, "Consensus rule for cdc")
        ->check(CLI::IsMember({"kemeny", "slater"}));
    json_flag(control);

    auto* reduce = app.add_subcommand("reduce", "Apply a reduction to an instance file");
    reduce->add_option("reduction", o.rule)
        ->required()
        ->check(CLI::IsMember({"vc2fas", "g2election", "fas2rec", "phi2phiprime", "qsat2gnd", "gnd2vcrr",
                               "vcrr2fasrr", "fasrr2cdc"}));
    reduce->add_option("input", o.file, "Instance file")->required();
    reduce->add_option("-o,--output", o.output, "Output file (default: standard output)");
    reduce->add_flag("--shift", o.shift, "phi2phiprime: renumber variables to free variable 1");
    reduce->add_flag("--pad", o.pad, "qsat2gnd: pad the smaller variable block with unused variables");
    reduce->add_option("--limit", o.reduce_limit, "Delete limit, overriding the file");
    reduce->add_option("--ell", o.reduce_ell, "GND parameter, overriding the file");
    json_flag(reduce);

    auto* verify = app.add_subcommand("verify", "Randomized check of a reduction against exact solvers");
    verify->add_option("reduction", o.rule)->required()->check(CLI::IsMember(reduction_names()));
    verify->add_option("--max-size", o.max_size, "Largest instance size")->check(CLI::PositiveNumber);
    verify->add_option("--trials", o.trials, "Number of trials");
    verify->add_option("--seed", o.seed, "Master seed");
    json_flag(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kInputError;
    }

    try {
        const Limits limits = Limits::from_env();
        if (consensus->parsed()) return cmd_consensus(o, limits, out);
        if (recognize->parsed()) return cmd_recognize(o, limits, out);
        if (manipulate->parsed()) return cmd_manipulate(o, limits, out);
        if (control->parsed()) return cmd_control(o, limits, out);
        if (reduce->parsed()) return cmd_reduce(o, limits, out);
        return cmd_verify(o, limits, out);
    } catch (const SizeLimitError& e) {
        err << "size limit: " << e.what() << '\n';
        return kSizeLimit;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const PreconditionError& e) {
        err << "precondition: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}

}  // namespace conlab::cli
