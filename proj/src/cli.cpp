#include "cpgraph/cli.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cpgraph/conditions.hpp"
#include "cpgraph/correspondence.hpp"
#include "cpgraph/errors.hpp"
#include "cpgraph/ideals.hpp"
#include "cpgraph/io.hpp"
#include "cpgraph/paths.hpp"
#include "cpgraph/verdicts.hpp"

namespace cpgraph::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Options {
    std::string file;
    std::string format = "text";
    std::size_t power = 1;
    std::string kind = "satHer";
    std::string weights;
    std::string support;
    std::size_t n = 0;
    double epsilon = 0.5;
    std::size_t max_length = 0;
    bool annotate = false;
    Limits limits;
};

bool structured(const Options& o) { return o.format == "structured"; }

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) {
        if (!item.empty()) parts.push_back(item);
    }
    return parts;
}

VertexWeights weights_from(const Graph& g, const Options& o) {
    if (!o.support.empty()) {
        auto ids = split(o.support, ',');
        return VertexWeights::indicator(g, VertexSubset::from_ids(g, ids));
    }
    std::vector<double> w(g.vertex_count(), 0.0);
    for (const auto& item : split(o.weights, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw ArgumentError("weight '" + item + "' is not of the form vertex=value");
        auto id = item.substr(0, eq);
        auto v = g.find_vertex(id);
        if (!v) throw GraphError("unknown vertex '" + id + "'");
        const auto text = item.substr(eq + 1);
        std::size_t used = 0;
        double value = 0;
        try {
            value = std::stod(text, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != text.size() || text.empty()) throw ArgumentError("weight for '" + id + "' is not a number");
        w[*v] = value;
    }
    return VertexWeights(g, std::move(w));
}

int cmd_analyze(const Options& o, std::ostream& out) {
    auto g = load_graph(o.file);
    auto report = classify(g, o.limits);
    out << (structured(o) ? report_to_json(g, report) : report_to_text(g, report));
    return kSuccess;
}

int cmd_classify(const Options& o, std::ostream& out) {
    auto g = load_graph(o.file);
    auto r = classify(g, o.limits);
    if (structured(o)) {
        ordered_json doc;
        doc["simplicity"] = to_string(r.simplicity);
        doc["condition_L"] = r.flags.condition_L;
        doc["condition_S"] = r.flags.condition_S;
        doc["nonperiodic"] = r.flags.nonperiodic;
        doc["trivial_saturated_hereditary"] = r.flags.trivial_saturated_hereditary;
        doc["schweizer_hypotheses_hold"] = r.schweizer.hypotheses_hold();
        doc["counterexample_flags"] = r.counterexample_flags;
        out << doc.dump(2) << "\n";
    } else {
        out << "verdict: " << to_string(r.simplicity) << "\n";
        if (r.counterexample_flags.empty()) {
            out << "counterexample flags: none\n";
        } else {
            for (const auto& f : r.counterexample_flags) out << f << "\n";
        }
    }
    return kSuccess;
}

int cmd_power(const Options& o, std::ostream& out) {
    auto g = load_graph(o.file);
    auto p = power_graph(g, o.power, o.limits);
    out << (structured(o) ? serialize_json(p) : serialize_dsl(p));
    return kSuccess;
}

int cmd_cycles(const Options& o, std::ostream& out) {
    auto g = load_graph(o.file);
    auto cycles = simple_cycles(g, o.limits);
    ordered_json doc = ordered_json::array();
    for (const auto& c : cycles) {
        auto exits = cycle_exits(g, c);
        std::vector<std::string> exit_ids;
        for (auto e : exits) exit_ids.push_back(g.edge_id(e));
        if (structured(o)) {
            ordered_json item;
            item["base"] = g.vertex_id(path_source(g, c));
            item["length"] = c.length();
            ordered_json edges = ordered_json::array();
            for (auto e : c.edges) edges.push_back(g.edge_id(e));
            item["edges"] = edges;
            item["exits"] = exit_ids;
            doc.push_back(std::move(item));
        } else {
            out << format_path(g, c) << " base " << g.vertex_id(path_source(g, c)) << " length " << c.length()
                << " exits: ";
            if (exit_ids.empty()) {
                out << "none";
            } else {
                for (std::size_t i = 0; i < exit_ids.size(); ++i) out << (i ? "," : "") << exit_ids[i];
            }
            out << "\n";
        }
    }
    if (structured(o)) out << doc.dump(2) << "\n";
    return kSuccess;
}

int cmd_ideals(const Options& o, std::ostream& out) {
    auto g = load_graph(o.file);
    auto lat = lattice(g, parse_lattice_kind(o.kind), o.limits);
    if (structured(o)) {
        ordered_json doc;
        doc["kind"] = to_string(lat.kind);
        doc["trivial"] = lat.trivial();
        doc["elements"] = ordered_json::array();
        for (const auto& s : lat.elements) doc["elements"].push_back(s.ids(g));
        out << doc.dump(2) << "\n";
    } else {
        for (const auto& s : lat.elements) out << format_subset(g, s) << "\n";
    }
    return kSuccess;
}

int cmd_witness(const Options& o, std::ostream& out) {
    auto g = load_graph(o.file);
    if (o.support.empty() == o.weights.empty()) throw ArgumentError("give exactly one of --weights or --support");
    WitnessRequest req{weights_from(g, o), o.n, o.epsilon,
                       o.max_length > 0 ? o.max_length : o.n + 2 * g.edge_count() + 2};
    auto w = find_witness(g, req, o.limits);
    const double threshold = req.a.sup_norm() - req.epsilon;
    if (!w) {
        if (structured(o)) {
            ordered_json doc;
            doc["found"] = false;
            doc["max_length"] = req.max_length;
            out << doc.dump(2) << "\n";
        } else {
            out << "no witness found up to length " << req.max_length << "\n";
        }
        return kCapExhausted;
    }

    auto delta = PathVector::delta(g, w->alpha);
    double value = 0.0;
    for (const auto& c : inner_product(delta, left_action(req.a, delta))) value = std::max(value, std::abs(c));
    if (structured(o)) {
        ordered_json doc;
        doc["found"] = true;
        doc["m"] = w->m;
        ordered_json edges = ordered_json::array();
        for (auto e : w->alpha.edges) edges.push_back(g.edge_id(e));
        doc["path"] = edges;
        doc["source"] = g.vertex_id(path_source(g, w->alpha));
        doc["value"] = value;
        doc["threshold"] = threshold;
        out << doc.dump(2) << "\n";
    } else {
        out << "witness: m=" << w->m << " path=" << format_path(g, w->alpha) << " source "
            << g.vertex_id(path_source(g, w->alpha)) << "\n";
        out << "||<delta, a delta>|| = " << value << " > " << threshold << "\n";
    }
    return kSuccess;
}

int cmd_dot(const Options& o, std::ostream& out) {
    auto g = load_graph(o.file);
    out << (o.annotate ? emit_dot(g, classify(g, o.limits)) : emit_dot(g));
    return kSuccess;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Condition (L)/(S), ideal lattices and simplicity verdicts for finite directed graphs", "cpgraph"};
    app.require_subcommand(1);
    Options o;

    app.add_option("--cap-vertices", o.limits.max_lattice_vertices, "Vertex cap for lattice enumeration")
        ->envname("CPGRAPH_CAP_VERTICES");
    app.add_option("--cap-paths", o.limits.max_paths, "Cap on enumerated paths")->envname("CPGRAPH_CAP_PATHS");
    app.add_option("--cap-cycles", o.limits.max_cycles, "Cap on enumerated cycles")->envname("CPGRAPH_CAP_CYCLES");

    auto add_common = [&](CLI::App* sub) {
        sub->fallthrough();
        sub->add_option("file", o.file, "Graph file (DSL or JSON)")->required();
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
        return sub;
    };

    auto* analyze = add_common(app.add_subcommand("analyze", "Full analysis report"));
    auto* classify_cmd = add_common(app.add_subcommand("classify", "Simplicity verdict and counterexample flags"));
    auto* power = add_common(app.add_subcommand("power", "Power graph whose edges are the paths of length K"));
    power->add_option("-n", o.power, "Path length K")->required()->check(CLI::PositiveNumber);
    auto* cycles = add_common(app.add_subcommand("cycles", "Elementary cycles and their exits"));
    auto* ideals = add_common(app.add_subcommand("ideals", "Hereditary or saturated hereditary subsets"));
    ideals->add_option("--kind", o.kind, "hereditary or satHer")
        ->check(CLI::IsMember({"hereditary", "satHer", "saturated_hereditary"}));
    auto* witness = add_common(app.add_subcommand("witness", "Search for a Condition (S) witness path"));
    auto* weights_opt = witness->add_option("--weights", o.weights, "Vertex weights v=1.0,w=0.5");
    auto* support_opt = witness->add_option("--support", o.support, "Indicator weights on v1,v2,...");
    weights_opt->excludes(support_opt);
    witness->add_option("--n", o.n, "Witness length must exceed N");
    witness->add_option("--epsilon", o.epsilon, "Tolerance epsilon > 0");
    witness->add_option("--max-length", o.max_length, "Longest path length searched (default N + 2|E^1| + 2)");
    auto* dot = add_common(app.add_subcommand("dot", "Graphviz output"));
    dot->add_flag("--annotate", o.annotate, "Mark exitless cycles and saturated hereditary subsets");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(o, out);
        if (classify_cmd->parsed()) return cmd_classify(o, out);
        if (power->parsed()) return cmd_power(o, out);
        if (cycles->parsed()) return cmd_cycles(o, out);
        if (ideals->parsed()) return cmd_ideals(o, out);
        if (witness->parsed()) return cmd_witness(o, out);
        if (dot->parsed()) return cmd_dot(o, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const GraphError& e) {
        err << "error: " << e.what() << "\n";
        return kGraphError;
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << "\n";
        return kGraphError;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kCapExhausted;
    } catch (const InvariantViolation& e) {
        err << "internal error: " << e.what() << "\n";
        return kInvariantViolation;
    }
    return kParseError;
}

} // namespace cpgraph::cli
