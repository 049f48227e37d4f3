#include "cpgraph/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

#include "cpgraph/errors.hpp"

namespace cpgraph {

using ordered_json = nlohmann::ordered_json;

bool is_valid_identifier(std::string_view id) {
    if (id.empty()) return false;
    for (char c : id) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
                        c == '.' || c == ':' || c == '-';
        if (!ok) return false;
    }
    return true;
}

// ---------------------------------------------------------------- DSL

namespace {

struct Token {
    std::string_view text;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i >= line.size()) break;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        tokens.push_back({line.substr(start, i - start), start + 1});
    }
    return tokens;
}

[[noreturn]] void syntax_error(std::size_t line, std::size_t column, std::string message) {
    throw ParseError({Diagnostic{{line, column, {}}, std::move(message)}});
}

void check_identifier(const Token& t, std::size_t line) {
    for (std::size_t i = 0; i < t.text.size(); ++i) {
        if (!is_valid_identifier(t.text.substr(i, 1))) {
            syntax_error(line, t.column + i,
                         "syntax error: invalid character '" + std::string(1, t.text[i]) + "' in identifier");
        }
    }
}

} // namespace

Graph parse_dsl(std::string_view text) {
    std::vector<std::string> vertices;
    std::vector<EdgeRecord> edges;
    std::unordered_map<std::string, std::size_t> vertex_line;
    std::unordered_map<std::string, std::size_t> edge_line;
    std::vector<Diagnostic> semantic;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;

        const auto& keyword = tokens[0];
        std::size_t expected = 0;
        if (keyword.text == "vertex") {
            expected = 2;
        } else if (keyword.text == "edge") {
            expected = 4;
        } else {
            syntax_error(line_no, keyword.column,
                         "syntax error: expected 'vertex' or 'edge', found '" + std::string(keyword.text) + "'");
        }
        if (tokens.size() < expected) {
            syntax_error(line_no, line.size() + 1,
                         "syntax error: '" + std::string(keyword.text) + "' expects " + std::to_string(expected - 1) +
                             " identifier(s)");
        }
        if (tokens.size() > expected) {
            syntax_error(line_no, tokens[expected].column,
                         "syntax error: unexpected token '" + std::string(tokens[expected].text) + "'");
        }
        for (std::size_t i = 1; i < tokens.size(); ++i) check_identifier(tokens[i], line_no);

        if (expected == 2) {
            std::string id(tokens[1].text);
            if (auto it = vertex_line.find(id); it != vertex_line.end()) {
                semantic.push_back({{line_no, tokens[1].column, {}},
                                    "duplicate id: vertex '" + id + "' already declared on line " +
                                        std::to_string(it->second)});
                continue;
            }
            vertex_line.emplace(id, line_no);
            vertices.push_back(std::move(id));
        } else {
            std::string id(tokens[1].text);
            bool ok = true;
            if (auto it = edge_line.find(id); it != edge_line.end()) {
                semantic.push_back({{line_no, tokens[1].column, {}},
                                    "duplicate id: edge '" + id + "' already declared on line " +
                                        std::to_string(it->second)});
                ok = false;
            }
            for (std::size_t i = 2; i < 4; ++i) {
                if (!vertex_line.contains(std::string(tokens[i].text))) {
                    semantic.push_back(
                        {{line_no, tokens[i].column, {}}, "undeclared vertex " + std::string(tokens[i].text)});
                    ok = false;
                }
            }
            if (!ok) continue;
            edge_line.emplace(id, line_no);
            edges.push_back({std::move(id), std::string(tokens[2].text), std::string(tokens[3].text)});
        }
    }

    if (!semantic.empty()) throw GraphError("invalid graph", std::move(semantic));
    return Graph::build(std::move(vertices), std::move(edges));
}

std::string serialize_dsl(const Graph& g) {
    std::string out;
    for (const auto& v : g.vertex_ids()) out += "vertex " + v + "\n";
    for (const auto& e : g.edge_records()) out += "edge " + e.id + " " + e.src + " " + e.dst + "\n";
    return out;
}

// ---------------------------------------------------------------- JSON

namespace {

[[noreturn]] void schema_error(const std::string& pointer, std::string message) {
    throw ParseError({Diagnostic{{0, 0, pointer.empty() ? "/" : pointer}, "schema error: " + std::move(message)}});
}

SourceLocation locate_byte(std::string_view text, std::size_t byte) {
    SourceLocation loc{1, 1, {}};
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++loc.line;
            loc.column = 1;
        } else {
            ++loc.column;
        }
    }
    return loc;
}

const std::string& require_string(const ordered_json& node, const std::string& pointer) {
    if (!node.is_string()) schema_error(pointer, "expected a string");
    const auto& s = node.get_ref<const std::string&>();
    if (!is_valid_identifier(s)) schema_error(pointer, "invalid identifier '" + s + "'");
    return s;
}

} // namespace

Graph parse_json(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        auto loc = locate_byte(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError({Diagnostic{loc, std::string("syntax error: ") + e.what()}});
    }

    if (!doc.is_object()) schema_error("", "document must be an object");
    for (const auto& [key, value] : doc.items()) {
        if (key != "vertices" && key != "edges") schema_error("/" + key, "unknown field '" + key + "'");
    }
    if (!doc.contains("vertices")) schema_error("/vertices", "missing field 'vertices'");
    if (!doc.contains("edges")) schema_error("/edges", "missing field 'edges'");
    const auto& vs = doc["vertices"];
    const auto& es = doc["edges"];
    if (!vs.is_array()) schema_error("/vertices", "expected an array");
    if (!es.is_array()) schema_error("/edges", "expected an array");

    std::vector<std::string> vertices;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        vertices.push_back(require_string(vs[i], "/vertices/" + std::to_string(i)));
    }
    std::vector<EdgeRecord> edges;
    for (std::size_t i = 0; i < es.size(); ++i) {
        const std::string base = "/edges/" + std::to_string(i);
        const auto& e = es[i];
        if (!e.is_object()) schema_error(base, "expected an object");
        for (const auto& [key, value] : e.items()) {
            if (key != "id" && key != "src" && key != "dst") schema_error(base + "/" + key, "unknown field '" + key + "'");
        }
        EdgeRecord rec;
        for (auto [field, target] : {std::pair{"id", &rec.id}, std::pair{"src", &rec.src}, std::pair{"dst", &rec.dst}}) {
            if (!e.contains(field)) schema_error(base + "/" + field, std::string("missing field '") + field + "'");
            *target = require_string(e[field], base + "/" + field);
        }
        edges.push_back(std::move(rec));
    }

    auto check = validate(vertices, edges);
    if (!check.ok()) {
        std::vector<Diagnostic> diags;
        for (const auto& issue : check.issues) {
            std::string pointer;
            if (issue.kind == IssueKind::DanglingEndpoint) {
                const auto& e = edges[issue.index];
                bool src_known = std::find(vertices.begin(), vertices.end(), e.src) != vertices.end();
                pointer = "/edges/" + std::to_string(issue.index) + (src_known ? "/dst" : "/src");
            } else if (issue.message.find("vertex") != std::string::npos) {
                pointer = "/vertices/" + std::to_string(issue.index);
            } else {
                pointer = "/edges/" + std::to_string(issue.index) + "/id";
            }
            diags.push_back({{0, 0, pointer}, issue.message});
        }
        throw GraphError("invalid graph", std::move(diags));
    }
    return Graph::build(std::move(vertices), std::move(edges));
}

std::string serialize_json(const Graph& g) {
    ordered_json doc;
    doc["vertices"] = g.vertex_ids();
    doc["edges"] = ordered_json::array();
    for (const auto& e : g.edge_records()) {
        ordered_json edge;
        edge["id"] = e.id;
        edge["src"] = e.src;
        edge["dst"] = e.dst;
        doc["edges"].push_back(std::move(edge));
    }
    return doc.dump(2) + "\n";
}

Graph parse_graph(std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
    return parse_dsl(text);
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError({Diagnostic{{0, 0, path}, "cannot read file"}});
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

// ---------------------------------------------------------------- DOT

namespace {

std::string dot_quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string render_dot(const Graph& g, const std::vector<bool>& exitless_edge,
                       const std::vector<std::vector<std::size_t>>& subsets_of_vertex,
                       const std::vector<std::string>& legend) {
    std::ostringstream os;
    os << "digraph E {\n";
    for (const auto& line : legend) os << "  // " << line << "\n";
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        os << "  " << dot_quote(g.vertex_id(v));
        if (!subsets_of_vertex.empty() && !subsets_of_vertex[v].empty()) {
            std::string names;
            for (auto i : subsets_of_vertex[v]) names += (names.empty() ? "S" : " S") + std::to_string(i);
            os << " [style=filled, fillcolor=lightblue, saturated_hereditary=" << dot_quote(names) << "]";
        }
        os << ";\n";
    }
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        os << "  " << dot_quote(g.vertex_id(g.src(e))) << " -> " << dot_quote(g.vertex_id(g.dst(e)))
           << " [label=" << dot_quote(g.edge_id(e));
        if (!exitless_edge.empty() && exitless_edge[e]) os << ", color=red, style=bold, exitless_cycle=true";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace

std::string emit_dot(const Graph& g) { return render_dot(g, {}, {}, {}); }

std::string emit_dot(const Graph& g, const AnalysisReport& report) {
    std::vector<bool> exitless(g.edge_count(), false);
    for (const auto& c : report.exitless_cycles) {
        for (auto e : c.edges) exitless.at(e) = true;
    }
    std::vector<std::vector<std::size_t>> membership(g.vertex_count());
    std::vector<std::string> legend;
    std::size_t index = 0;
    for (const auto& s : report.saturated_hereditary.elements) {
        if (s.empty() || s.is_full()) continue;
        ++index;
        legend.push_back("S" + std::to_string(index) + " = " + format_subset(g, s));
        for (auto v : s.members()) membership.at(v).push_back(index);
    }
    if (legend.empty()) membership.clear();
    if (report.exitless_cycles.empty()) exitless.clear();
    return render_dot(g, exitless, membership, legend);
}

// ---------------------------------------------------------------- reports

namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::vector<std::pair<std::string, bool>> flag_list(const ReportFlags& f) {
    return {{"no_sinks", f.no_sinks},
            {"no_sources", f.no_sources},
            {"finite", f.finite},
            {"full", f.full},
            {"unital", f.unital},
            {"injective_left_action", f.injective_left_action},
            {"condition_L", f.condition_L},
            {"condition_S", f.condition_S},
            {"nonperiodic", f.nonperiodic},
            {"trivial_hereditary", f.trivial_hereditary},
            {"trivial_saturated_hereditary", f.trivial_saturated_hereditary}};
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (const auto& s : items) {
        if (!out.empty()) out += sep;
        out += s;
    }
    return out;
}

std::string lattice_text(const Graph& g, const SubsetLattice& l) {
    std::vector<std::string> parts;
    for (const auto& s : l.elements) parts.push_back(format_subset(g, s));
    return join(parts, ", ") + (l.trivial() ? "  (trivial)" : "");
}

ordered_json lattice_json(const Graph& g, const SubsetLattice& l) {
    ordered_json out = ordered_json::array();
    for (const auto& s : l.elements) out.push_back(s.ids(g));
    return out;
}

ordered_json path_json(const Graph& g, const Path& p) {
    ordered_json out = ordered_json::array();
    for (auto e : p.edges) out.push_back(g.edge_id(e));
    return out;
}

} // namespace

std::string report_to_text(const Graph& g, const AnalysisReport& r) {
    std::ostringstream os;
    os << "graph: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
    os << "verdict: " << to_string(r.simplicity) << "\n";
    os << "flags:\n";
    for (const auto& [name, value] : flag_list(r.flags)) os << "  " << name << ": " << yes_no(value) << "\n";
    os << "sinks: " << format_subset(g, r.classes.sinks) << "\n";
    os << "sources: " << format_subset(g, r.classes.sources) << "\n";
    os << "connectivity: " << (r.connected.weakly_connected ? "weakly connected" : "not weakly connected") << ", "
       << (r.connected.strongly_connected ? "strongly connected" : "not strongly connected") << "\n";
    os << "condition L: " << (r.flags.condition_L ? "holds" : "fails");
    if (!r.exitless_cycles.empty()) {
        std::vector<std::string> cycles;
        for (const auto& c : r.exitless_cycles) cycles.push_back(format_path(g, c));
        os << " (exitless cycles: " << join(cycles, ", ") << ")";
    }
    os << "\n";
    os << "condition S: " << (r.flags.condition_S ? "holds" : "fails") << " (" << to_string(r.condition_S_reason)
       << ")\n";
    os << "periodicity: ";
    if (r.periodicity.periodic) {
        os << "periodic, minimal period " << *r.periodicity.minimal_period;
    } else {
        os << "nonperiodic";
    }
    os << " (" << to_string(r.periodicity.method) << ")\n";
    os << "hereditary subsets: " << lattice_text(g, r.hereditary) << "\n";
    os << "saturated hereditary subsets: " << lattice_text(g, r.saturated_hereditary) << "\n";
    os << "schweizer: ";
    if (r.schweizer.hypotheses_hold()) {
        os << "hypotheses hold, predicted " << to_string(*r.schweizer.predicted) << "\n";
    } else {
        os << "hypotheses fail (" << join(r.schweizer.failed_hypotheses, ", ") << ")\n";
    }
    os << "counterexample flags: " << (r.counterexample_flags.empty() ? "none" : join(r.counterexample_flags, ", "))
       << "\n";
    os << "citations: " << join(r.citations, ", ") << "\n";
    return os.str();
}

std::string report_to_json(const Graph& g, const AnalysisReport& r) {
    ordered_json doc;
    doc["vertices"] = g.vertex_count();
    doc["edges"] = g.edge_count();
    doc["simplicity"] = to_string(r.simplicity);
    ordered_json flags;
    for (const auto& [name, value] : flag_list(r.flags)) flags[name] = value;
    doc["flags"] = flags;
    doc["sinks"] = r.classes.sinks.ids(g);
    doc["sources"] = r.classes.sources.ids(g);
    doc["weakly_connected"] = r.connected.weakly_connected;
    doc["strongly_connected"] = r.connected.strongly_connected;
    doc["exitless_cycles"] = ordered_json::array();
    for (const auto& c : r.exitless_cycles) doc["exitless_cycles"].push_back(path_json(g, c));
    doc["condition_S_reason"] = to_string(r.condition_S_reason);
    ordered_json per;
    per["periodic"] = r.periodicity.periodic;
    per["minimal_period"] = r.periodicity.minimal_period ? ordered_json(*r.periodicity.minimal_period) : ordered_json();
    per["method"] = to_string(r.periodicity.method);
    doc["periodicity"] = per;
    doc["hereditary"] = lattice_json(g, r.hereditary);
    doc["saturated_hereditary"] = lattice_json(g, r.saturated_hereditary);
    ordered_json sch;
    sch["hypotheses_hold"] = r.schweizer.hypotheses_hold();
    sch["failed_hypotheses"] = r.schweizer.failed_hypotheses;
    sch["predicted"] = r.schweizer.predicted ? ordered_json(to_string(*r.schweizer.predicted)) : ordered_json();
    doc["schweizer"] = sch;
    doc["counterexample_flags"] = r.counterexample_flags;
    doc["citations"] = r.citations;
    return doc.dump(2) + "\n";
}

} // namespace cpgraph
