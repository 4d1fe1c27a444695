#pragma once

#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gengraph/counting.hpp"
#include "gengraph/group.hpp"

namespace gengraph {

inline constexpr long long kDefaultVertexCap = 100'000;

/// The generating graph on tuple parts G^a and G^b.  Vertices are tuples,
/// identified by their lexicographic (mixed-radix) rank; for a != b the
/// b-part ranks are offset by |G|^a.  Loops exist only when a = b and are
/// stored apart from the edges, which carry no duplicates and no self-pairs.
struct GenGraph {
    std::string group_name;
    int order = 0;  // |G|
    int a = 0, b = 0;
    long long nu = 0;                       // vertex count
    std::vector<std::pair<int, int>> edges;  // eta = edges.size()
    std::vector<int> loops;

    long long eta() const { return (long long)edges.size(); }
    long long loop_count() const { return (long long)loops.size(); }
    bool bipartite_parts() const { return a != b; }

    long long part_a_size() const {
        long long s = 1;
        for (int i = 0; i < a; ++i) s *= order;
        return s;
    }

    /// Tuple of the vertex with the given rank (most significant digit first).
    GroupTuple vertex_tuple(long long rank) const {
        const bool in_b = a != b && rank >= part_a_size();
        const int arity = in_b ? b : a;
        long long r = in_b ? rank - part_a_size() : rank;
        GroupTuple t(arity);
        for (int i = arity - 1; i >= 0; --i) {
            t[i] = int(r % order);
            r /= order;
        }
        return t;
    }
};

/// Counts (nu, eta, loops) derivable from phi alone, without materializing.
struct GammaCounts {
    BigInt nu;
    std::uint64_t eta = 0;
    std::uint64_t loop_count = 0;
    std::uint64_t phi_d = 0;  // phi_G(a+b)
    std::uint64_t phi_a = 0;  // phi_G(a); loops when a = b
};

namespace detail {

inline void check_gamma_args(const FiniteGroup& g, int a, int b) {
    if (a == 0)
        throw InvariantError(
            "a = 0 gives a star graph (one hub for the empty tuple); it is "
            "documented but not constructed");
    if (a < 0 || b < a)
        throw InvariantError("generating graph requires 1 <= a <= b (swap first)");
    if (g.order() < 1) throw InvariantError("empty group");
}

}  // namespace detail

inline GammaCounts gamma_counts(const FiniteGroup& g, int a, int b,
                                const EnumOptions& opts = {}) {
    detail::check_gamma_args(g, a, b);
    GammaCounts c;
    c.phi_d = phi_enumerate(g, a + b, opts);
    if (a == b) {
        c.phi_a = phi_enumerate(g, a, opts);
        c.nu = int_pow(g.order(), unsigned(a));
        c.loop_count = c.phi_a;
        if ((c.phi_d - c.phi_a) % 2 != 0)
            throw InvariantError("phi(2a) - phi(a) must be even");
        c.eta = (c.phi_d - c.phi_a) / 2;
    } else {
        c.nu = int_pow(g.order(), unsigned(a)) + int_pow(g.order(), unsigned(b));
        c.loop_count = 0;
        c.eta = c.phi_d;
    }
    return c;
}

/// Materializes the graph.  Edge generation iterates over generating
/// (a+b)-tuples, so each visited tuple is already a verified edge; the edge
/// list is produced in deterministic lexicographic order regardless of the
/// worker count.
inline GenGraph build_gamma(const FiniteGroup& g, int a, int b,
                            const EnumOptions& opts = {},
                            long long vertex_cap = kDefaultVertexCap) {
    detail::check_gamma_args(g, a, b);
    const int n = g.order();
    const BigInt nu_big = a == b
                              ? int_pow(n, unsigned(a))
                              : int_pow(n, unsigned(a)) + int_pow(n, unsigned(b));
    if (nu_big > vertex_cap)
        throw BudgetError("vertex cap " + std::to_string(vertex_cap) +
                          " exceeded: nu = " + nu_big.str());
    detail::check_enum_budget(g, a + b, opts.budget_steps, "build_gamma");

    GenGraph gr;
    gr.group_name = g.name();
    gr.order = n;
    gr.a = a;
    gr.b = b;
    gr.nu = nu_big.convert_to<long long>();

    const long long offset = a == b ? 0 : gr.part_a_size();
    struct Part {
        std::vector<std::pair<int, int>> edges;
        std::vector<int> loops;
    };
    auto parts = detail::map_indexed<Part>(n, opts.workers, [&](int x0) {
        Part p;
        visit_generating_tuples_prefix(g, a + b, x0, [&](const GroupTuple& t) {
            long long u = 0, v = 0;
            for (int i = 0; i < a; ++i) u = u * n + t[i];
            for (int i = a; i < a + b; ++i) v = v * n + t[i];
            if (a == b) {
                if (u == v) p.loops.push_back(int(u));
                else if (u < v) p.edges.emplace_back(int(u), int(v));
            } else {
                p.edges.emplace_back(int(u), int(offset + v));
            }
        });
        return p;
    });
    for (auto& p : parts) {
        gr.edges.insert(gr.edges.end(), p.edges.begin(), p.edges.end());
        gr.loops.insert(gr.loops.end(), p.loops.begin(), p.loops.end());
    }
    return gr;
}

// ---------------------------------------------------------------------------
// Exports.  Edge-list text format:
//
//   p <nu> <eta> <loops>
//   <u> <v>        (one line per edge)
//   loop <u>       (one line per loop)
// ---------------------------------------------------------------------------

inline void export_edge_list(const GenGraph& g, std::ostream& out) {
    out << "p " << g.nu << " " << g.eta() << " " << g.loop_count() << "\n";
    for (auto& [u, v] : g.edges) out << u << " " << v << "\n";
    for (int u : g.loops) out << "loop " << u << "\n";
}

inline nlohmann::ordered_json adjacency_json(const GenGraph& g) {
    nlohmann::ordered_json j;
    j["schema"] = "gengraph.graph.v1";
    j["group"] = g.group_name;
    j["order"] = g.order;
    j["a"] = g.a;
    j["b"] = g.b;
    j["nu"] = g.nu;
    j["eta"] = g.eta();
    j["loop_count"] = g.loop_count();
    auto edges = nlohmann::ordered_json::array();
    for (auto& [u, v] : g.edges) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    j["loops"] = g.loops;
    return j;
}

inline void export_adjacency_json(const GenGraph& g, std::ostream& out) {
    out << adjacency_json(g).dump(1) << "\n";
}

/// A plain undirected simple graph (no loops), as consumed by the planarity
/// routines and produced by stripping a GenGraph's loops.
struct SimpleGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    long long eta() const { return (long long)edges.size(); }

    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(n);
        for (auto& [u, v] : edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        return adj;
    }
};

inline SimpleGraph simple_graph_of(const GenGraph& g) {
    if (g.nu > std::numeric_limits<int>::max())
        throw BudgetError("graph too large for the planarity engine");
    return SimpleGraph{int(g.nu), g.edges};
}

/// Reads the edge-list text format back; loops are accepted and dropped.
inline SimpleGraph load_edge_list(std::istream& in) {
    std::string tag;
    long long nu, eta, loops;
    if (!(in >> tag >> nu >> eta >> loops) || tag != "p")
        throw ParseError("expected header 'p <vertices> <edges> <loops>'", 1, 1);
    SimpleGraph g;
    g.n = int(nu);
    g.edges.reserve(std::size_t(eta));
    for (long long i = 0; i < eta; ++i) {
        long long u, v;
        if (!(in >> u >> v))
            throw ParseError("truncated edge list", int(i + 2), 1);
        if (u < 0 || v < 0 || u >= nu || v >= nu || u == v)
            throw ParseError("invalid edge endpoint", int(i + 2), 1);
        g.edges.emplace_back(int(u), int(v));
    }
    for (long long i = 0; i < loops; ++i) {
        long long u;
        if (!(in >> tag >> u) || tag != "loop")
            throw ParseError("truncated loop list", int(eta + i + 2), 1);
    }
    return g;
}

}  // namespace gengraph
