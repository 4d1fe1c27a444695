// Command-line front end for the generating-graph toolkit.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/budget/input errors.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gengraph/gengraph.hpp"

namespace gg = gengraph;

namespace {

struct GlobalOpts {
    std::uint64_t budget_steps = gg::kDefaultStepBudget;
    long long vertex_cap = gg::kDefaultVertexCap;
    int order_cap = 0;  // 0 = per-command default
    int ab_cap = 6;
    int workers = 0;    // 0 = GENGRAPH_WORKERS env or 1
    long n_cap = 170;
    std::string format = "text";
    std::string out_path;

    int resolved_workers() const {
        if (workers > 0) return workers;
        if (const char* env = std::getenv("GENGRAPH_WORKERS")) {
            const int w = std::atoi(env);
            if (w > 0) return w;
        }
        return 1;
    }

    gg::EnumOptions enum_options() const {
        return gg::EnumOptions{budget_steps, resolved_workers()};
    }

    int construction_cap() const {
        return order_cap > 0 ? order_cap : gg::kDefaultOrderCap;
    }
};

class Output {
public:
    explicit Output(const GlobalOpts& go) {
        if (!go.out_path.empty()) {
            file_.open(go.out_path);
            if (!file_) throw gg::Error("cannot open output file: " + go.out_path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

using Record = std::vector<std::pair<std::string, std::string>>;

void emit_record(const std::string& schema, const Record& kv, const GlobalOpts& go,
                 std::ostream& out) {
    if (go.format == "json") {
        nlohmann::ordered_json j;
        j["schema"] = schema;
        for (auto& [k, v] : kv) j[k] = v;
        out << j.dump(1) << "\n";
    } else if (go.format == "csv") {
        out << "# " << schema << "\n";
        for (std::size_t i = 0; i < kv.size(); ++i)
            out << (i ? "," : "") << kv[i].first;
        out << "\n";
        for (std::size_t i = 0; i < kv.size(); ++i)
            out << (i ? "," : "") << kv[i].second;
        out << "\n";
    } else {
        for (auto& [k, v] : kv) out << k << ": " << v << "\n";
    }
}

std::string radical_record(const gg::Radical& r) {
    return r.str() + " (~" + gg::format_double(r.approx()) + ")";
}

int run_phi(const GlobalOpts& go, const std::string& expr, int d) {
    const auto g = gg::group_from_text(expr, go.construction_cap());
    const auto phi = gg::phi_enumerate(g, d, go.enum_options());
    Output o(go);
    if (go.format == "text") {
        o.stream() << phi << "\n";
    } else {
        emit_record("gengraph.phi.v1",
                    {{"group", g.name()},
                     {"d", std::to_string(d)},
                     {"phi", std::to_string(phi)}},
                    go, o.stream());
    }
    return 0;
}

int run_stats(const GlobalOpts& go, const std::string& expr, int d) {
    const auto g = gg::group_from_text(expr, go.construction_cap());
    const auto s = gg::gen_stats(g, d, go.enum_options());
    Output o(go);
    emit_record("gengraph.stats.v1",
                {{"group", s.group},
                 {"order", std::to_string(g.order())},
                 {"d", std::to_string(s.d)},
                 {"phi", std::to_string(s.phi)},
                 {"prob", gg::to_fraction_string(s.prob)},
                 {"prob_float", gg::format_double(gg::to_double(s.prob))},
                 {"alpha", gg::to_fraction_string(s.alpha)},
                 {"alpha_float", gg::format_double(gg::to_double(s.alpha))}},
                go, o.stream());
    return 0;
}

int run_graph(const GlobalOpts& go, const std::string& expr, int a, int b) {
    const auto g = gg::group_from_text(expr, go.construction_cap());
    const auto gr = gg::build_gamma(g, a, b, go.enum_options(), go.vertex_cap);
    Output o(go);
    if (go.format == "json")
        gg::export_adjacency_json(gr, o.stream());
    else if (go.format == "text")
        gg::export_edge_list(gr, o.stream());
    else
        throw gg::Error("graph export supports --format text (edge list) or json");
    return 0;
}

int run_bounds(const GlobalOpts& go, const std::string& expr, int a, int b) {
    const auto g = gg::group_from_text(expr, go.construction_cap());
    const auto r = gg::bound_report(g, a, b, go.enum_options());
    Record kv{{"group", r.group},
              {"order", std::to_string(r.order)},
              {"a", std::to_string(r.a)},
              {"b", std::to_string(r.b)},
              {"nu", r.nu.str()},
              {"eta", std::to_string(r.eta)},
              {"loops", std::to_string(r.loop_count)},
              {"genus_lb", gg::to_fraction_string(r.genus_lb)},
              {"genus_lb_float", gg::format_double(gg::to_double(r.genus_lb))},
              {"genus_lb_ceiled", r.genus_lb_ceiled.str()},
              {"thickness_lb",
               r.thickness_defined ? gg::to_fraction_string(r.thickness_lb) : "n/a"},
              {"thickness_lb_ceiled",
               r.thickness_defined ? r.thickness_lb_ceiled.str() : "n/a"},
              {"crossing_lb", gg::to_fraction_string(r.crossing_lb)},
              {"crossing_lb_clamped", gg::to_fraction_string(r.crossing_lb_clamped)},
              {"genus_rhs", radical_record(r.rhs.genus)},
              {"thickness_rhs", radical_record(r.rhs.thickness)},
              {"crossing_rhs", radical_record(r.rhs.crossing)}};
    Output o(go);
    emit_record("gengraph.bounds.v1", kv, go, o.stream());
    return 0;
}

std::string witness_summary(const gg::KuratowskiWitness& w) {
    std::string s = w.kind == gg::KuratowskiWitness::Kind::K5 ? "K5" : "K33";
    s += " branch=[";
    for (std::size_t i = 0; i < w.branch.size(); ++i)
        s += (i ? " " : "") + std::to_string(w.branch[i]);
    s += "]";
    return s;
}

int run_planarity(const GlobalOpts& go, const std::string& expr, int a, int b,
                  const std::string& from_file) {
    gg::SimpleGraph graph;
    std::string source;
    if (!from_file.empty()) {
        std::ifstream in(from_file);
        if (!in) throw gg::Error("cannot open edge list: " + from_file);
        graph = gg::load_edge_list(in);
        source = from_file;
    } else {
        const auto g = gg::group_from_text(expr, go.construction_cap());
        graph = gg::simple_graph_of(
            gg::build_gamma(g, a, b, go.enum_options(), go.vertex_cap));
        source = g.name() + " a=" + std::to_string(a) + " b=" + std::to_string(b);
    }
    const auto verdict = gg::is_planar(graph);
    Record kv{{"input", source},
              {"nu", std::to_string(graph.n)},
              {"eta", std::to_string(graph.eta())},
              {"planar", verdict.planar ? "true" : "false"},
              {"method", gg::method_name(verdict.method)}};
    if (verdict.witness) kv.emplace_back("witness", witness_summary(*verdict.witness));
    Output o(go);
    emit_record("gengraph.planarity.v1", kv, go, o.stream());
    return 0;
}

int run_verify(const GlobalOpts& go, const std::string& suite) {
    gg::VerifyConfig cfg;
    cfg.order_cap = go.order_cap;
    cfg.ab_cap = go.ab_cap;
    cfg.vertex_cap = go.vertex_cap;
    cfg.budget_steps = go.budget_steps;
    cfg.workers = go.resolved_workers();
    cfg.n_cap = go.n_cap;
    const auto tables = gg::run_suites(suite, cfg);
    Output o(go);
    gg::write_tables(tables, go.format, o.stream());
    for (auto& t : tables)
        if (!t.passed()) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generating-graph toolkit: tuple counts, graphs, topological "
                 "bounds, planarity"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts go;
    app.add_option("--budget-steps", go.budget_steps,
                   "closure-step budget for enumerations");
    app.add_option("--vertex-cap", go.vertex_cap, "vertex cap for built graphs");
    app.add_option("--order-cap", go.order_cap,
                   "group order cap (0 = per-command default)");
    app.add_option("--ab-cap", go.ab_cap, "cap on a+b in verification suites");
    app.add_option("--workers", go.workers,
                   "worker threads (default: GENGRAPH_WORKERS or 1)");
    app.add_option("--n-cap", go.n_cap, "range cap for the numeric-lemma suite");
    app.add_option("--format", go.format, "output format: text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--out", go.out_path, "write output to a file instead of stdout");

    std::function<int()> action;

    std::string expr, suite = "all", from_file;
    int d = 0, a = 0, b = 0;

    auto* c_phi = app.add_subcommand("phi", "count generating d-tuples");
    c_phi->add_option("expr", expr, "group expression, e.g. C4xC2")->required();
    c_phi->add_option("d", d, "tuple arity")->required();
    c_phi->callback([&] { action = [&] { return run_phi(go, expr, d); }; });

    auto* c_stats = app.add_subcommand("stats", "phi with probability and alpha");
    c_stats->add_option("expr", expr)->required();
    c_stats->add_option("d", d)->required();
    c_stats->callback([&] { action = [&] { return run_stats(go, expr, d); }; });

    auto* c_graph = app.add_subcommand("graph", "build and export a generating graph");
    c_graph->add_option("expr", expr)->required();
    c_graph->add_option("a", a)->required();
    c_graph->add_option("b", b)->required();
    c_graph->callback([&] { action = [&] { return run_graph(go, expr, a, b); }; });

    auto* c_bounds = app.add_subcommand("bounds", "genus/thickness/crossing bounds");
    c_bounds->add_option("expr", expr)->required();
    c_bounds->add_option("a", a)->required();
    c_bounds->add_option("b", b)->required();
    c_bounds->callback([&] { action = [&] { return run_bounds(go, expr, a, b); }; });

    auto* c_pla = app.add_subcommand("planarity", "planarity verdict with witness");
    c_pla->add_option("expr", expr);
    c_pla->add_option("a", a);
    c_pla->add_option("b", b);
    c_pla->add_option("--from-file", from_file, "read an exported edge list");
    c_pla->callback([&] {
        action = [&] {
            if (from_file.empty() && expr.empty())
                throw gg::Error("planarity needs <expr> <a> <b> or --from-file");
            return run_planarity(go, expr, a, b, from_file);
        };
    });

    auto* c_verify = app.add_subcommand("verify", "run a verification suite");
    c_verify->add_option("suite", suite,
                         "dual-oracle | main-theorem | corollary | minab | "
                         "alpha-factorization | stima-chain | "
                         "planarity-classification | stirling | all");
    c_verify->callback([&] { action = [&] { return run_verify(go, suite); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return action ? action() : 2;
    } catch (const gg::BudgetError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
