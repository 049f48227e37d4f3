// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "cpgraph/cli.hpp"
#include "cpgraph/conditions.hpp"
#include "cpgraph/correspondence.hpp"
#include "cpgraph/errors.hpp"
#include "cpgraph/ideals.hpp"
#include "cpgraph/io.hpp"
#include "cpgraph/paths.hpp"
#include "cpgraph/verdicts.hpp"
#include "support.hpp"

using namespace cpgraph;
using namespace cpgraph::testing;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
    void expect(bool cond, const std::string& why) {
        if (!cond) fail(why);
    }
};

bool has_flag(const AnalysisReport& r, std::string_view f) {
    return std::find(r.counterexample_flags.begin(), r.counterexample_flags.end(), f) != r.counterexample_flags.end();
}

std::set<VertexSubset> as_set(const SubsetLattice& l) { return {l.elements.begin(), l.elements.end()}; }

bool all_degrees_one(const Graph& g) {
    for (VertexIndex v = 0; v < g.vertex_count(); ++v)
        if (g.out_degree(v) != 1 || g.in_degree(v) != 1) return false;
    return true;
}

// ------------------------------------------------------------------ 1
Outcome lcm_example() {
    Outcome o;
    auto g = load_graph(fixture_path("g_lcm.json"));
    o.expect(g == lcm_graph(), "fixture differs from the disjoint 2,3,4 cycles");
    auto p = periodicity(g);
    o.expect(p.periodic && p.minimal_period == 12, "period is not 12");
    auto q = periodicity_by_powers(g);
    o.expect(q.periodic && q.minimal_period == 12, "direct powers disagree");
    auto pg = power_graph(g, 12);
    o.expect(pg.edge_count() == 9, "power graph does not have 9 edges");
    for (EdgeIndex e = 0; e < pg.edge_count(); ++e) o.expect(pg.src(e) == pg.dst(e), "non-loop edge at n=12");
    o.detail = o.ok ? "period 12, E^12 has 9 loops" : o.detail;
    return o;
}

// ------------------------------------------------------------------ 2
Outcome single_cycles() {
    Outcome o;
    for (std::size_t n = 1; n <= 8; ++n) {
        auto g = cycle_graph(n);
        auto tag = "C_" + std::to_string(n) + ": ";
        auto p = periodicity(g);
        o.expect(p.periodic && p.minimal_period == n, tag + "wrong period");
        o.expect(!condition_L(g).holds, tag + "Condition (L) holds");
        o.expect(lattice(g, LatticeKind::SaturatedHereditary).trivial(), tag + "nontrivial lattice");
        o.expect(simplicity_verdict(g).verdict == Simplicity::NotSimple, tag + "verdict simple");
    }
    if (o.ok) o.detail = "C_1..C_8 periodic with period n, not simple";
    return o;
}

// ------------------------------------------------------------------ 3
Outcome two_loops_example() {
    Outcome o;
    auto g = load_graph(fixture_path("g_two_loops.txt"));
    auto r = classify(g);
    o.expect(r.flags.nonperiodic, "periodic");
    o.expect(!r.flags.condition_L, "Condition (L) holds");
    std::set<VertexSubset> want{VertexSubset(g.vertex_count()), VertexSubset::from_ids(g, std::vector<std::string>{"w"}),
                                VertexSubset::full(g.vertex_count())};
    o.expect(as_set(r.saturated_hereditary) == want, "lattice is not {{}, {w}, all}");
    o.expect(r.schweizer.hypotheses_hold(), "Schweizer hypotheses fail");
    o.expect(r.schweizer.predicted == Simplicity::NotSimple, "predicted simple");
    o.expect(r.simplicity == Simplicity::NotSimple, "verdict simple");
    o.expect(has_flag(r, counterexample::kNonperiodicButNotL), "flag nonperiodic_but_not_L missing");
    if (o.ok) o.detail = "nonperiodic, not L, lattice {{}, {w}, all}, not simple, flagged";
    return o;
}

// ------------------------------------------------------------------ 4
Outcome source_loop_example() {
    Outcome o;
    auto g = load_graph(fixture_path("g_source_loop.txt"));
    auto r = classify(g);
    o.expect(r.flags.nonperiodic, "periodic");
    o.expect(r.saturated_hereditary.trivial(), "nontrivial lattice");
    o.expect(!r.flags.condition_L, "Condition (L) holds");
    o.expect(r.simplicity == Simplicity::NotSimple, "verdict simple");
    o.expect(std::find(r.schweizer.failed_hypotheses.begin(), r.schweizer.failed_hypotheses.end(), "full") !=
                 r.schweizer.failed_hypotheses.end(),
             "source does not break fullness");
    o.expect(has_flag(r, counterexample::kNonperiodicTrivialInvariantNotSimple), "flag missing");
    if (o.ok) o.detail = "nonperiodic, trivial lattice, not L, not simple, source breaks fullness";
    return o;
}

// ------------------------------------------------------------------ 5
Outcome periodic_structure() {
    Outcome o;
    Rng rng(501);
    const std::size_t samples = 600;
    std::size_t periodic = 0;
    for (std::size_t i = 0; i < samples && o.ok; ++i) {
        auto g = random_sink_source_free(rng, 5, 8);
        auto s = periodicity(g);
        auto d = periodicity_by_powers(g, 15);
        const bool degrees = all_degrees_one(g);
        // A^n = I for some n <= 15 independently of the library
        auto a = adjacency_counts(g);
        bool identity_power = false;
        auto pw = a;
        for (std::size_t n = 1; n <= 15 && !identity_power; ++n) {
            bool id = true;
            for (std::size_t x = 0; x < pw.size(); ++x)
                for (std::size_t y = 0; y < pw.size(); ++y) id = id && pw[x][y] == (x == y ? 1u : 0u);
            identity_power = id;
            pw = multiply(pw, a);
        }
        o.expect(s.periodic == degrees, "structural periodicity disagrees with degrees on sample " + std::to_string(i));
        o.expect(s.periodic == d.periodic, "structural and direct power disagree on sample " + std::to_string(i));
        o.expect(!s.periodic || s.minimal_period == d.minimal_period, "minimal periods differ");
        o.expect(d.periodic == identity_power, "direct power disagrees with A^n = I");
        periodic += s.periodic;
    }
    if (o.ok) o.detail = std::to_string(samples) + " graphs, " + std::to_string(periodic) + " periodic, 0 disagreements";
    return o;
}

// ------------------------------------------------------------------ 6
Outcome strongly_connected() {
    Outcome o;
    Rng rng(602);
    const std::size_t samples = 300;
    for (std::size_t i = 0; i < samples && o.ok; ++i) {
        auto g = random_strongly_connected(rng, 2, 6, 5);
        // strongly connected with as many edges as vertices is exactly one cycle
        const bool single_cycle = g.edge_count() == g.vertex_count();
        const bool nonperiodic = !periodicity(g).periodic;
        const bool nonperiodic_powers = !periodicity_by_powers(g).periodic;
        const bool L = condition_L_by_enumeration(g).holds;
        const bool L_fast = condition_L(g).holds;
        o.expect(nonperiodic == L && L == !single_cycle && L == L_fast && nonperiodic == nonperiodic_powers,
                 "disagreement on sample " + std::to_string(i) + ":\n" + serialize_dsl(g));
    }
    if (o.ok) o.detail = std::to_string(samples) + " graphs, 0 disagreements";
    return o;
}

// ------------------------------------------------------------------ 7
Outcome schweizer() {
    Outcome o;
    Rng rng(703);
    const std::size_t samples = 600;
    std::size_t simple = 0;
    for (std::size_t i = 0; i < samples && o.ok; ++i) {
        auto g = random_sink_source_free(rng, 6, 10);
        try {
            auto s = schweizer_check(g);
            auto v = simplicity_verdict(g);
            o.expect(s.hypotheses_hold(), "hypotheses fail without sinks or sources");
            o.expect(s.predicted == v.verdict, "prediction differs on sample " + std::to_string(i));
            simple += v.verdict == Simplicity::Simple;
        } catch (const InvariantViolation& e) {
            o.fail(std::string("invariant violation: ") + e.what());
        }
    }
    if (o.ok) o.detail = std::to_string(samples) + " graphs, " + std::to_string(simple) + " simple, 0 disagreements";
    return o;
}

// ------------------------------------------------------------------ 8
using Pairs = std::vector<std::pair<int, int>>;

Pairs canonical(const Pairs& edges, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    Pairs best;
    bool first = true;
    do {
        Pairs p;
        for (auto [u, v] : edges) p.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        std::sort(p.begin(), p.end());
        if (first || p < best) best = p;
        first = false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Every beta of every length below |alpha|, built letter by letter over all
// edges; a branch stops as soon as the relations kill S_alpha^* S_beta S_alpha.
bool some_beta_survives(const Graph& g, const Path& alpha) {
    const auto m = alpha.length();
    std::vector<EdgeIndex> beta;
    std::function<bool()> grow = [&]() -> bool {
        const auto j = beta.size();
        if (j > 0 && g.dst(beta.back()) == g.src(alpha.first()) &&
            sandwich_by_relations(g, alpha, Path{beta}))
            return true;
        if (j + 1 >= m) return false;
        for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
            if (j > 0 && g.dst(beta.back()) != g.src(e)) continue;
            if (e != alpha.edges[j]) continue; // S_{alpha_j}^* S_e = 0
            beta.push_back(e);
            if (grow()) return true;
            beta.pop_back();
        }
        return false;
    };
    return grow();
}

Outcome nonreturning_soundness() {
    Outcome o;
    std::set<std::pair<int, Pairs>> seen;
    std::size_t graphs = 0, paths = 0, checked = 0, brute_checked = 0;
    for (int n = 1; n <= 4 && o.ok; ++n) {
        Pairs all;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) all.emplace_back(u, v);
        Pairs current;
        std::function<void(std::size_t)> extend = [&](std::size_t from) {
            if (!o.ok) return;
            if (seen.emplace(n, canonical(current, n)).second) {
                ++graphs;
                std::vector<std::pair<std::size_t, std::size_t>> pairs;
                for (auto [u, v] : current) pairs.emplace_back(u, v);
                auto g = graph_from_pairs(static_cast<std::size_t>(n), pairs);
                // every edge tuple of length < 6 that composes, bucketed by range
                std::vector<std::vector<std::vector<Path>>> betas(6, std::vector<std::vector<Path>>(g.vertex_count()));
                for (std::size_t k = 1; k < 6; ++k)
                    for (auto& beta : all_paths_brute(g, k)) betas[k][g.dst(beta.last())].push_back(std::move(beta));
                for (std::size_t len = 1; len <= 6 && o.ok; ++len) {
                    for_each_path(g, len, std::nullopt, [&](const Path& alpha) {
                        ++paths;
                        if (is_returning(alpha)) return true;
                        ++checked;
                        const bool lib = is_nonreturning_vector(g, alpha);
                        const bool oracle = !some_beta_survives(g, alpha);
                        if (!lib || !oracle) {
                            o.fail("nonreturning path " + format_path(g, alpha) + " has a returning vector in\n" +
                                   serialize_dsl(g));
                            return false;
                        }
                        ++brute_checked;
                        for (std::size_t k = 1; k < len; ++k) {
                            for (const auto& beta : betas[k][g.src(alpha.first())]) {
                                if (sandwich_by_relations(g, alpha, beta)) {
                                    o.fail("exhaustive beta search disagrees on " + format_path(g, alpha));
                                    return false;
                                }
                            }
                        }
                        return true;
                    });
                }
            }
            if (current.size() == 6) return;
            for (std::size_t i = from; i < all.size(); ++i) {
                current.push_back(all[i]);
                extend(i);
                current.pop_back();
            }
        };
        extend(0);
    }
    if (o.ok)
        o.detail = std::to_string(graphs) + " graphs up to isomorphism, " + std::to_string(paths) + " paths, " +
                   std::to_string(checked) + " nonreturning (" + std::to_string(brute_checked) +
                   " also against every beta), 0 violations";
    return o;
}

// ------------------------------------------------------------------ 9
Outcome witness_contract() {
    Outcome o;
    std::size_t fixtures = 0, witnesses = 0;
    for (const char* name : {"g_cycle2.txt", "g_cycle3.txt", "g_exit.txt", "g_lcm.txt", "g_rose2.txt",
                             "g_sink.txt", "g_source_loop.txt", "g_tail_exit.txt", "g_theta.txt",
                             "g_two_loops.txt"}) {
        auto g = load_graph(fixture_path(name));
        if (!vertex_classes(g).sinks.empty() || !condition_L(g).holds) continue;
        ++fixtures;
        for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
            VertexSubset s(g.vertex_count());
            s.insert(v);
            auto a = VertexWeights::indicator(g, s);
            for (std::size_t n = 0; n <= 3; ++n) {
                const auto tag = std::string(name) + " v=" + g.vertex_id(v) + " n=" + std::to_string(n) + ": ";
                WitnessRequest req{a, n, 0.5, n + 2 * g.edge_count() + 2};
                auto w = find_witness(g, req);
                if (!w) {
                    o.fail(tag + "no witness");
                    continue;
                }
                ++witnesses;
                const double threshold = a.sup_norm() - req.epsilon;
                o.expect(w->m > n && w->m <= req.max_length, tag + "m out of range");
                o.expect(w->alpha.length() == w->m && is_path(g, w->alpha.edges), tag + "not a path of length m");
                o.expect(!is_returning(w->alpha), tag + "returning path");
                o.expect(nonreturning_vector_brute(g, w->alpha), tag + "returning vector");
                o.expect(a(path_source(g, w->alpha)) > threshold, tag + "source outside the support");
                auto delta = PathVector::delta(g, w->alpha);
                double value = 0;
                for (auto c : inner_product(delta, left_action(a, delta))) value = std::max(value, std::abs(c));
                o.expect(value > threshold, tag + "inequality fails");
            }
        }
    }
    o.expect(fixtures >= 4, "expected at least four sink-free fixtures with Condition (L)");
    if (o.ok) o.detail = std::to_string(fixtures) + " fixtures, " + std::to_string(witnesses) + " witnesses verified";
    return o;
}

// ------------------------------------------------------------------ 10
VertexSubset random_subset(Rng& rng, std::size_t n) {
    VertexSubset s(n);
    for (VertexIndex v = 0; v < n; ++v)
        if (uniform(rng, 0, 2) == 0) s.insert(v);
    return s;
}

Outcome closure_laws() {
    Outcome o;
    Rng rng(1004);
    const std::size_t pairs = 1500;
    for (std::size_t i = 0; i < pairs && o.ok; ++i) {
        auto g = random_graph(rng, 1, 10, 16);
        auto s = random_subset(rng, g.vertex_count());
        auto t = s | random_subset(rng, g.vertex_count());
        auto cs = saturated_hereditary_closure(g, s);
        o.expect(s.subset_of(cs), "not extensive");
        o.expect(saturated_hereditary_closure(g, cs) == cs, "not idempotent");
        o.expect(cs.subset_of(saturated_hereditary_closure(g, t)), "not monotone");
        o.expect(is_hereditary(g, cs) && is_saturated(g, cs), "closure not saturated hereditary");
    }
    const std::size_t lattices = 150;
    for (std::size_t i = 0; i < lattices && o.ok; ++i) {
        auto g = random_graph(rng, 1, 10, 14);
        const auto n = g.vertex_count();
        std::set<VertexSubset> fixed;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            auto s = VertexSubset::from_mask(n, mask);
            if (saturated_hereditary_closure(g, s) == s) fixed.insert(s);
        }
        o.expect(fixed == as_set(lattice(g, LatticeKind::SaturatedHereditary)),
                 "fixed points differ from the lattice on\n" + serialize_dsl(g));
    }
    if (o.ok)
        o.detail = std::to_string(pairs) + " pairs, " + std::to_string(lattices) + " lattices, 0 violations";
    return o;
}

// ------------------------------------------------------------------ 11
std::string random_id(Rng& rng) {
    static const std::string chars = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_.:-";
    std::string id;
    const auto len = uniform(rng, 1, 6);
    for (std::size_t i = 0; i < len; ++i) id += chars[uniform(rng, 0, chars.size() - 1)];
    return id;
}

Graph random_named_graph(Rng& rng) {
    const auto n = uniform(rng, 0, 8);
    std::set<std::string> used;
    auto fresh = [&] {
        for (;;) {
            auto id = random_id(rng);
            if (used.insert(id).second) return id;
        }
    };
    std::vector<std::string> vs;
    for (std::size_t i = 0; i < n; ++i) vs.push_back(fresh());
    std::vector<EdgeRecord> es;
    const auto m = n == 0 ? 0 : uniform(rng, 0, 12);
    for (std::size_t i = 0; i < m; ++i) es.push_back({fresh(), vs[uniform(rng, 0, n - 1)], vs[uniform(rng, 0, n - 1)]});
    return Graph::build(vs, es);
}

int run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    return cli::run(args, out, err);
}

Outcome parser() {
    Outcome o;
    Rng rng(1105);
    const std::size_t samples = 1200;
    for (std::size_t i = 0; i < samples && o.ok; ++i) {
        auto g = random_named_graph(rng);
        auto dsl = serialize_dsl(g);
        auto json = serialize_json(g);
        o.expect(parse_dsl(dsl) == g && serialize_dsl(parse_dsl(dsl)) == dsl, "DSL round trip fails:\n" + dsl);
        o.expect(parse_json(json) == g && serialize_json(parse_json(json)) == json, "JSON round trip fails:\n" + json);
        o.expect(parse_graph(dsl) == g && parse_graph(json) == g, "format sniffing fails");
    }

    const std::map<std::string, Graph> fixtures{
        {"g_cycle2.txt", cycle_graph(2)},    {"g_cycle3.txt", cycle_graph(3)},
        {"g_exit.txt", exit_graph()},        {"g_lcm.json", lcm_graph()},
        {"g_lcm.txt", lcm_graph()},          {"g_source_loop.txt", source_loop()},
        {"g_two_loops.txt", two_loops()},
        {"g_sink.txt", graph_from({"u", "w"}, {{"a", "u", "u"}, {"b", "u", "w"}})},
        {"g_rose2.txt", graph_from({"v"}, {{"a", "v", "v"}, {"b", "v", "v"}})},
        {"g_theta.txt", graph_from({"p", "q", "r"},
                                   {{"e1", "p", "q"}, {"e2", "q", "r"}, {"e3", "r", "p"}, {"e4", "p", "r"}})},
    };
    for (const auto& [name, want] : fixtures) o.expect(load_graph(fixture_path(name)) == want, name + " misparsed");
    auto tail = load_graph(fixture_path("g_tail_exit.txt"));
    o.expect(tail.edge_count() == exit_graph().edge_count() + 1, "g_tail_exit.txt misparsed");

    struct Bad {
        std::string text;
        bool graph_error;
        std::size_t line, column;
        std::string pointer;
    };
    const std::vector<Bad> bad{
        {"vertex u\nnode w\n", false, 2, 1, ""},
        {"vertex u\nedge a u\n", false, 2, 9, ""},
        {"vertex u\nedge a u x\n", true, 2, 10, ""},
        {"vertex u\nvertex u\n", true, 2, 8, ""},
        {"{\"vertices\": [\"u\"]}", false, 0, 0, "/edges"},
        {"{\"vertices\": [\"u\"], \"edges\": [{\"id\": \"a\", \"src\": \"u\", \"dst\": \"x\"}]}", true, 0, 0,
         "/edges/0/dst"},
        {"{\n  \"vertices\": [,]\n}", false, 2, 0, ""},
    };
    for (const auto& b : bad) {
        std::vector<Diagnostic> diags;
        bool graph_error = false;
        try {
            parse_graph(b.text);
            o.fail("accepted malformed input:\n" + b.text);
            continue;
        } catch (const GraphError& e) {
            graph_error = true;
            diags = e.diagnostics();
        } catch (const ParseError& e) {
            diags = e.diagnostics();
        }
        o.expect(graph_error == b.graph_error, "wrong error kind for:\n" + b.text);
        o.expect(!diags.empty(), "no diagnostics for:\n" + b.text);
        if (diags.empty()) continue;
        const auto& loc = diags.front().location;
        if (b.line) o.expect(loc.line == b.line, "wrong line for:\n" + b.text);
        if (b.column) o.expect(loc.column == b.column, "wrong column for:\n" + b.text);
        if (!b.pointer.empty()) o.expect(loc.pointer == b.pointer, "wrong pointer for:\n" + b.text);

        const auto path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/cpgraph_bad_input";
        std::ofstream(path) << b.text;
        o.expect(run_cli({"analyze", path}) == (b.graph_error ? cli::kGraphError : cli::kParseError),
                 "wrong exit code for:\n" + b.text);
    }
    o.expect(run_cli({"analyze", fixture_path("g_exit.txt")}) == cli::kSuccess, "exit code 0 expected");
    o.expect(run_cli({"bogus"}) == cli::kParseError, "usage error should exit 1");
    o.expect(run_cli({"--cap-paths", "2", "power", fixture_path("g_lcm.txt"), "-n", "12"}) == cli::kCapExhausted,
             "cap should exit 3");
    if (o.ok)
        o.detail = std::to_string(samples) + " round trips, " + std::to_string(fixtures.size() + 1) + " fixtures, " +
                   std::to_string(bad.size()) + " malformed inputs located";
    return o;
}

struct Criterion {
    const char* label;
    double seconds;
    Outcome (*run)();
};

} // namespace

int main() {
    const Criterion criteria[] = {
        {"AC1  lcm example", 1, lcm_example},
        {"AC2  single cycles C_1..C_8", 1, single_cycles},
        {"AC3  two loops example", 1, two_loops_example},
        {"AC4  source loop example", 1, source_loop_example},
        {"AC5  periodic iff disjoint cycles", 60, periodic_structure},
        {"AC6  strongly connected equivalences", 60, strongly_connected},
        {"AC7  Schweizer cross-check", 60, schweizer},
        {"AC8  nonreturning soundness", 120, nonreturning_soundness},
        {"AC9  witness contract", 10, witness_contract},
        {"AC10 closure laws", 60, closure_laws},
        {"AC11 parser", 10, parser},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && secs >= c.seconds) o.fail("took longer than " + std::to_string(static_cast<int>(c.seconds)) + " s");
        failures += !o.ok;
        std::printf("%s %-40s %8.3f s  %s\n", o.ok ? "PASS" : "FAIL", c.label, secs, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
    return failures == 0 ? 0 : 1;
}
