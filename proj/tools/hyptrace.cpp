// hyptrace: exact traces of power hypergraphs from the command line.
//
//   hyptrace trace GRAPH --m 3 --ell 1,2,3 [--method oracle|formula|auto] [--budget N]
//   hyptrace ctilde --k-max 5 --ell-max 5
//   hyptrace cospectral GRAPH1 GRAPH2 --m-max 4 --ell-max 4
//   hyptrace construct FAMILY PARAMS... [--out FILE]
//
// Output is JSON on stdout. Exit codes: 0 ok, 2 bad input or parameters,
// 3 budget exceeded or no applicable method.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyptrace/hyptrace.hpp"

using namespace hyptrace;

namespace {

using Clock = std::chrono::steady_clock;

std::size_t to_size(const std::string& s, const std::string& what) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos == 0 || pos != s.size() || s[0] == '-') throw InvalidParameter(what + ": expected a natural number, got \"" + s + "\"");
    return static_cast<std::size_t>(v);
}

Json girth_json(const Girth& g) { return g ? Json(*g) : Json("inf"); }

Json graph_summary(const std::string& file, const Graph& g) {
    return Json{{"file", file}, {"n", g.vertex_count()}, {"edges", g.edge_count()}};
}

Json report_json(const InvariantReport& r) {
    return Json{{"n_P1", r.n_P1}, {"n_P2", r.n_P2}, {"n_P3", r.n_P3},
                {"n_C3", r.n_C3}, {"n_C4", r.n_C4}, {"girth", girth_json(r.girth)}};
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------

struct TraceArgs {
    std::string file;
    std::vector<std::size_t> m{3};
    std::vector<std::size_t> ell{1};
    std::string method = "auto";
    std::uint64_t budget = kDefaultBudget;
    bool no_timing = false;
    bool value_only = false;
};

int cmd_trace(const TraceArgs& a) {
    const auto start = Clock::now();
    const Graph g = read_graph_file(a.file);
    TraceOptions opt;
    opt.method = parse_trace_method(a.method);
    opt.budget = a.budget;
    std::vector<TraceQuery> queries;
    for (auto m : a.m)
        for (auto l : a.ell) {
            if (m < 2) throw InvalidParameter("--m must be >= 2");
            if (l < 1) throw InvalidParameter("--ell must be >= 1");
            queries.push_back({m, l});
        }
    const auto table = trace_table(g, queries, opt);
    if (a.value_only) {
        for (const auto& e : table) std::cout << rational_to_json(e.value).dump() << "\n";
        return 0;
    }
    Json results = Json::array();
    for (const auto& e : table)
        results.push_back(Json{{"m", e.query.m}, {"ell", e.query.ell}, {"d", e.query.d()},
                               {"value", rational_to_json(e.value)}, {"method", e.method}});
    Json out{{"command", "trace"}, {"graph", graph_summary(a.file, g)}, {"requested_method", a.method},
             {"results", results}};
    if (!a.no_timing)
        out["elapsed_ms"] = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    emit(out);
    return 0;
}

// ---------------------------------------------------------------------------

int cmd_ctilde(std::size_t k_max, std::size_t ell_max) {
    if (k_max < 1 || k_max > 6) throw InvalidParameter("--k-max must lie in [1, 6]");
    Json rows = Json::array();
    for (std::size_t k = 1; k <= k_max; ++k)
        for (const Graph& t : enumerate_trees(k)) {
            Json values = Json::object();
            for (std::size_t l = k; l <= ell_max; ++l) values[std::to_string(l)] = rational_to_json(c_tilde(t, l));
            rows.push_back(Json{{"edges", k}, {"code", canonical_code(t).code}, {"name", tree_display_name(t)},
                                {"values", values}});
        }
    emit(Json{{"command", "ctilde"}, {"k_max", k_max}, {"ell_max", ell_max}, {"rows", rows}});
    return 0;
}

// ---------------------------------------------------------------------------

int cmd_cospectral(const std::string& f1, const std::string& f2, std::size_t m_max, std::size_t ell_max,
                   std::uint64_t budget, bool no_timing) {
    const auto start = Clock::now();
    const Graph g1 = read_graph_file(f1), g2 = read_graph_file(f2);
    TraceOptions opt;
    opt.budget = budget;
    Json out{{"command", "cospectral"},
             {"graphs", Json::array({graph_summary(f1, g1), graph_summary(f2, g2)})},
             {"cospectral", is_cospectral(g1, g2)},
             {"char_poly", Json::array({char_poly(g1).to_string(), char_poly(g2).to_string()})},
             {"invariants", Json::array({report_json(invariants_report(g1)), report_json(invariants_report(g2))})},
             {"bounds", Json{{"m_max", m_max}, {"ell_max", ell_max}}}};
    if (auto w = find_distinguisher(g1, g2, m_max, ell_max, opt))
        out["witness"] = Json{{"m", w->m}, {"d", w->d}, {"ell", w->d / w->m}, {"gap", rational_to_json(w->gap)}};
    else
        out["witness"] = "none within bounds";
    if (!no_timing) out["elapsed_ms"] = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    emit(out);
    return 0;
}

// ---------------------------------------------------------------------------

void write_or_print(const Graph& g, const std::string& out) {
    if (out.empty())
        std::cout << graph_to_json(g).dump() << "\n";
    else
        write_graph_file(out, g);
}

int cmd_construct(const std::string& family, const std::vector<std::string>& p, const std::string& out) {
    auto need = [&](std::size_t k, const char* usage) {
        if (p.size() != k) throw InvalidParameter("construct " + family + ": usage: " + usage);
    };
    auto num = [&](std::size_t i) { return to_size(p[i], family + " parameter " + std::to_string(i + 1)); };
    if (family == "path") {
        need(1, "path K");
        write_or_print(path_graph(num(0)), out);
    } else if (family == "cycle") {
        need(1, "cycle K");
        write_or_print(cycle_graph(num(0)), out);
    } else if (family == "star") {
        need(1, "star K  (K_{1,K})");
        write_or_print(star_graph(num(0)), out);
    } else if (family == "H") {
        need(4, "H N Q N1 N2");
        write_or_print(h_family(num(0), num(1), num(2), num(3)), out);
    } else if (family == "coalesce") {
        need(4, "coalesce G.json U H.json V");
        write_or_print(coalesce(read_graph_file(p[0]), num(1), read_graph_file(p[2]), num(3)), out);
    } else if (family == "rooted_product") {
        // rooted_product G.json path K   (P_K rooted at an end vertex)
        // rooted_product G.json GAMMA.json ROOT
        if (p.size() == 3 && p[1] == "path")
            write_or_print(rooted_product(read_graph_file(p[0]), path_graph(num(2)), 0), out);
        else {
            need(3, "rooted_product G.json (path K | GAMMA.json ROOT)");
            write_or_print(rooted_product(read_graph_file(p[0]), read_graph_file(p[1]), num(2)), out);
        }
    } else if (family == "ominus") {
        need(4, "ominus T.json A U.json W");
        write_or_print(ominus_join(read_graph_file(p[0]), num(1), read_graph_file(p[2]), num(3)), out);
    } else if (family == "schwenk_pair") {
        need(2, "schwenk_pair U.json W");
        const auto pair = schwenk_ominus_pair(read_graph_file(p[0]), num(1));
        const Json base{{"tree", graph_to_json(pair.base.tree)}, {"u", pair.base.u}, {"v", pair.base.v}};
        if (out.empty()) {
            emit(Json{{"base", base}, {"uw", graph_to_json(pair.uw)}, {"vw", graph_to_json(pair.vw)}});
        } else {
            write_graph_file(out + ".uw.json", pair.uw);
            write_graph_file(out + ".vw.json", pair.vw);
            emit(Json{{"base", base}, {"files", Json::array({out + ".uw.json", out + ".vw.json"})}});
        }
    } else {
        throw InvalidParameter("unknown family \"" + family +
                               "\" (path, cycle, star, H, coalesce, rooted_product, ominus, schwenk_pair)");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact traces Tr_d(G^m) of power hypergraphs"};
    app.require_subcommand(1);

    TraceArgs ta;
    auto* trace = app.add_subcommand("trace", "Tr_{m*ell}(G^m) for every requested (m, ell)");
    trace->add_option("graph", ta.file, "graph file (JSON or text)")->required();
    trace->add_option("--m", ta.m, "power order(s)")->delimiter(',');
    trace->add_option("--ell", ta.ell, "d/m value(s)")->delimiter(',');
    trace->add_option("--method", ta.method, "oracle | formula | auto")->check(CLI::IsMember({"oracle", "formula", "auto"}));
    trace->add_option("--budget", ta.budget, "oracle candidate cap");
    trace->add_flag("--no-timing", ta.no_timing, "omit timing fields");
    trace->add_flag("--value-only", ta.value_only, "print only the exact values, one per line");

    std::size_t k_max = 5, c_ell_max = 5;
    auto* ctilde = app.add_subcommand("ctilde", "table of c~_ell over all trees with at most k-max edges");
    ctilde->add_option("--k-max", k_max, "largest tree size in edges (<= 6)");
    ctilde->add_option("--ell-max", c_ell_max, "largest ell");

    std::string f1, f2;
    std::size_t m_max = 4, ell_max = 4;
    std::uint64_t c_budget = kDefaultBudget;
    bool c_no_timing = false;
    auto* cosp = app.add_subcommand("cospectral", "cospectrality and a distinguishing (m, d)");
    cosp->add_option("graph1", f1)->required();
    cosp->add_option("graph2", f2)->required();
    cosp->add_option("--m-max", m_max, "largest m scanned");
    cosp->add_option("--ell-max", ell_max, "largest ell scanned");
    cosp->add_option("--budget", c_budget, "oracle candidate cap");
    cosp->add_flag("--no-timing", c_no_timing, "omit timing fields");

    std::string family, out;
    std::vector<std::string> params;
    auto* cons = app.add_subcommand("construct", "write a graph from a named family or operation");
    cons->add_option("family", family, "path|cycle|star|H|coalesce|rooted_product|ominus|schwenk_pair")->required();
    cons->add_option("params", params, "family parameters");
    cons->add_option("--out", out, "output file (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*trace) return cmd_trace(ta);
        if (*ctilde) return cmd_ctilde(k_max, c_ell_max);
        if (*cosp) return cmd_cospectral(f1, f2, m_max, ell_max, c_budget, c_no_timing);
        if (*cons) return cmd_construct(family, params, out);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const UnsupportedInstance& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {  // malformed input, bad parameters, wrong graph class
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const FormulaOutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
