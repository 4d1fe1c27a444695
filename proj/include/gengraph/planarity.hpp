#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "gengraph/counting.hpp"
#include "gengraph/graph.hpp"

namespace gengraph {

enum class PlanarityMethod { EulerPruned, BipartiteBoundPruned, FullTest };

inline const char* method_name(PlanarityMethod m) {
    switch (m) {
        case PlanarityMethod::EulerPruned: return "euler-pruned";
        case PlanarityMethod::BipartiteBoundPruned: return "bipartite-bound-pruned";
        default: return "full-test";
    }
}

/// A K5 or K33 subdivision: branch vertices plus the subdivided paths
/// (each path lists its full vertex sequence, branch endpoints included).
/// For K33 the first three branch vertices form one side.
struct KuratowskiWitness {
    enum class Kind { K5, K33 } kind = Kind::K5;
    std::vector<int> branch;
    std::vector<std::vector<int>> paths;
};

struct PlanarityVerdict {
    bool planar = false;
    PlanarityMethod method = PlanarityMethod::FullTest;
    std::optional<KuratowskiWitness> witness;
};

// ---------------------------------------------------------------------------
// Witness validation, independent of how the witness was found.
// ---------------------------------------------------------------------------

inline bool validate_witness(const SimpleGraph& g, const KuratowskiWitness& w) {
    const int k5 = w.kind == KuratowskiWitness::Kind::K5;
    const std::size_t nb = k5 ? 5 : 6, np = k5 ? 10 : 9;
    if (w.branch.size() != nb || w.paths.size() != np) return false;
    std::unordered_set<int> branch(w.branch.begin(), w.branch.end());
    if (branch.size() != nb) return false;
    for (int v : w.branch)
        if (v < 0 || v >= g.n) return false;

    std::unordered_set<long long> edge_set;
    for (auto& [u, v] : g.edges) {
        edge_set.insert((long long)std::min(u, v) * g.n + std::max(u, v));
    }
    auto is_edge = [&](int u, int v) {
        return edge_set.count((long long)std::min(u, v) * g.n + std::max(u, v)) > 0;
    };

    std::unordered_set<int> interior_used;
    std::vector<std::pair<int, int>> endpoint_pairs;
    for (auto& p : w.paths) {
        if (p.size() < 2) return false;
        if (!branch.count(p.front()) || !branch.count(p.back())) return false;
        if (p.front() == p.back()) return false;
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            if (!is_edge(p[i], p[i + 1])) return false;
        for (std::size_t i = 1; i + 1 < p.size(); ++i) {
            const int v = p[i];
            if (branch.count(v)) return false;           // passes through a branch
            if (!interior_used.insert(v).second) return false;  // shared interior
        }
        endpoint_pairs.emplace_back(std::min(p.front(), p.back()),
                                    std::max(p.front(), p.back()));
    }
    std::sort(endpoint_pairs.begin(), endpoint_pairs.end());
    if (std::adjacent_find(endpoint_pairs.begin(), endpoint_pairs.end()) !=
        endpoint_pairs.end())
        return false;  // duplicated pair

    std::vector<std::pair<int, int>> expected;
    if (k5) {
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = i + 1; j < 5; ++j)
                expected.emplace_back(std::min(w.branch[i], w.branch[j]),
                                      std::max(w.branch[i], w.branch[j]));
    } else {
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 3; j < 6; ++j)
                expected.emplace_back(std::min(w.branch[i], w.branch[j]),
                                      std::max(w.branch[i], w.branch[j]));
    }
    std::sort(expected.begin(), expected.end());
    return endpoint_pairs == expected;
}

// ---------------------------------------------------------------------------
// Witness reconstruction from a Kuratowski edge set.
// ---------------------------------------------------------------------------

namespace detail {

inline std::optional<KuratowskiWitness> witness_from_edge_set(
    int n, const std::vector<std::pair<int, int>>& sub) {
    std::unordered_map<int, std::vector<int>> adj;
    for (auto& [u, v] : sub) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    // peel leaves (a minimal subdivision has none, but stay safe)
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = adj.begin(); it != adj.end();) {
            if (it->second.size() <= 1) {
                const int dead = it->first;
                for (int w : it->second) {
                    auto& l = adj[w];
                    l.erase(std::remove(l.begin(), l.end(), dead), l.end());
                }
                it = adj.erase(it);
                changed = true;
            } else {
                ++it;
            }
        }
    }

    std::vector<int> branch;
    for (auto& [v, nb] : adj)
        if (nb.size() >= 3) branch.push_back(v);
    std::sort(branch.begin(), branch.end());

    KuratowskiWitness w;
    if (branch.size() == 5) {
        w.kind = KuratowskiWitness::Kind::K5;
        for (int v : branch)
            if (adj[v].size() != 4) return std::nullopt;
    } else if (branch.size() == 6) {
        w.kind = KuratowskiWitness::Kind::K33;
        for (int v : branch)
            if (adj[v].size() != 3) return std::nullopt;
    } else {
        return std::nullopt;
    }
    w.branch = branch;
    std::unordered_set<int> branch_set(branch.begin(), branch.end());

    std::unordered_set<long long> used;  // undirected edges already on a path
    auto key = [n](int u, int v) {
        return (long long)std::min(u, v) * n + std::max(u, v);
    };
    for (int s : branch) {
        for (int first : adj[s]) {
            if (used.count(key(s, first))) continue;
            std::vector<int> path{s, first};
            used.insert(key(s, first));
            int prev = s, cur = first;
            while (!branch_set.count(cur)) {
                if (adj[cur].size() != 2) return std::nullopt;
                const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                used.insert(key(cur, next));
                path.push_back(next);
                prev = cur;
                cur = next;
            }
            if (cur == s) return std::nullopt;  // cycle back to the start
            w.paths.push_back(std::move(path));
        }
    }

    if (w.kind == KuratowskiWitness::Kind::K33) {
        // order the branch vertices side-by-side using the path pairs
        std::unordered_map<int, std::unordered_set<int>> linked;
        for (auto& p : w.paths) linked[p.front()].insert(p.back()), linked[p.back()].insert(p.front());
        std::vector<int> left{branch[0]}, right;
        for (int v : branch) {
            if (v == branch[0]) continue;
            if (linked[branch[0]].count(v)) right.push_back(v);
            else left.push_back(v);
        }
        if (left.size() != 3 || right.size() != 3) return std::nullopt;
        w.branch = left;
        w.branch.insert(w.branch.end(), right.begin(), right.end());
    }
    return w;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// The planarity engine: edge-count pruning, bipartite refinement, then a
// certified Boyer-Myrvold run.  Planar full-test verdicts are certified by
// re-counting faces of the returned rotation system against the Euler
// formula; non-planar full-test verdicts carry a re-validated witness.
// ---------------------------------------------------------------------------

namespace detail {

struct ColorResult {
    bool bipartite = true;
    std::vector<int> component;  // per vertex
    std::vector<long long> comp_vertices;
    std::vector<long long> comp_edges;
};

inline ColorResult color_components(const SimpleGraph& g) {
    ColorResult r;
    r.component.assign(g.n, -1);
    std::vector<int> color(g.n, -1);
    const auto adj = g.adjacency();
    std::vector<int> queue;
    for (int s = 0; s < g.n; ++s) {
        if (r.component[s] >= 0) continue;
        const int c = int(r.comp_vertices.size());
        r.comp_vertices.push_back(0);
        r.comp_edges.push_back(0);
        queue.assign(1, s);
        r.component[s] = c;
        color[s] = 0;
        while (!queue.empty()) {
            const int u = queue.back();
            queue.pop_back();
            ++r.comp_vertices[c];
            for (int w : adj[u]) {
                if (r.component[w] < 0) {
                    r.component[w] = c;
                    color[w] = color[u] ^ 1;
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    r.bipartite = false;
                }
            }
        }
    }
    for (auto& [u, v] : g.edges) ++r.comp_edges[r.component[u]];
    return r;
}

struct BoyerResult {
    bool planar = false;
    std::vector<std::vector<int>> rotation;          // planar case
    std::vector<std::pair<int, int>> kuratowski;     // non-planar case
};

inline BoyerResult run_boyer_myrvold(const SimpleGraph& g) {
    using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                        boost::no_property,
                                        boost::property<boost::edge_index_t, int>>;
    using Edge = boost::graph_traits<Graph>::edge_descriptor;
    Graph bg(g.n);
    for (auto& [u, v] : g.edges) boost::add_edge(u, v, bg);
    int idx = 0;
    for (auto [ei, ee] = boost::edges(bg); ei != ee; ++ei)
        boost::put(boost::edge_index, bg, *ei, idx++);

    std::vector<std::vector<Edge>> embedding(g.n);
    std::vector<Edge> kuratowski;
    BoyerResult r;
    r.planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding = embedding.data(),
        boost::boyer_myrvold_params::kuratowski_subgraph =
            std::back_inserter(kuratowski));
    if (r.planar) {
        r.rotation.resize(g.n);
        for (int v = 0; v < g.n; ++v)
            for (const auto& e : embedding[v]) {
                const int s = int(boost::source(e, bg)), t = int(boost::target(e, bg));
                r.rotation[v].push_back(s == v ? t : s);
            }
    } else {
        for (const auto& e : kuratowski)
            r.kuratowski.emplace_back(int(boost::source(e, bg)),
                                      int(boost::target(e, bg)));
    }
    return r;
}

/// Euler-formula certification of a rotation system: every component with
/// edges must satisfy v - e + f = 2.
inline bool certify_rotation_planar(const SimpleGraph& g,
                                    const std::vector<std::vector<int>>& rot) {
    const auto comps = color_components(g);
    std::vector<std::unordered_map<int, int>> pos(g.n);
    for (int v = 0; v < g.n; ++v)
        for (int i = 0; i < int(rot[v].size()); ++i) pos[v][rot[v][i]] = i;

    // directed edges, indexed inside per-vertex rotation lists
    std::unordered_set<long long> visited;
    auto key = [&](int u, int v) { return (long long)u * g.n + v; };
    std::vector<long long> comp_faces(comps.comp_vertices.size(), 0);
    for (int u = 0; u < g.n; ++u)
        for (int v0 : rot[u]) {
            if (visited.count(key(u, v0))) continue;
            int cu = u, cv = v0;
            while (!visited.count(key(cu, cv))) {
                visited.insert(key(cu, cv));
                const auto it = pos[cv].find(cu);
                if (it == pos[cv].end()) return false;  // rotation inconsistent
                const int deg = int(rot[cv].size());
                const int w = rot[cv][(it->second + 1) % deg];
                cu = cv;
                cv = w;
            }
            ++comp_faces[comps.component[u]];
        }
    for (std::size_t c = 0; c < comps.comp_vertices.size(); ++c) {
        if (comps.comp_edges[c] == 0) continue;
        if (comps.comp_vertices[c] - comps.comp_edges[c] + comp_faces[c] != 2)
            return false;
    }
    return true;
}

}  // namespace detail

namespace detail {

/// For small graphs a pruned non-planar verdict still gets a witness; the
/// verdict itself stays with the pruning rule that decided it.
inline void attach_witness_if_small(const SimpleGraph& g, PlanarityVerdict& v);

}  // namespace detail

/// Planarity of a simple loop-free graph.  Certified: the full test either
/// yields an Euler-checked embedding or a re-validated Kuratowski witness.
inline PlanarityVerdict is_planar(const SimpleGraph& g) {
    PlanarityVerdict verdict;
    const long long nu = g.n, eta = g.eta();
    if (nu >= 3 && eta > 3 * nu - 6) {
        verdict.planar = false;
        verdict.method = PlanarityMethod::EulerPruned;
        detail::attach_witness_if_small(g, verdict);
        return verdict;
    }
    const auto comps = detail::color_components(g);
    if (comps.bipartite) {
        long long v3 = 0, e3 = 0;
        for (std::size_t c = 0; c < comps.comp_vertices.size(); ++c)
            if (comps.comp_vertices[c] >= 3) {
                v3 += comps.comp_vertices[c];
                e3 += comps.comp_edges[c];
            }
        if (v3 >= 3 && e3 > 2 * v3 - 4) {
            verdict.planar = false;
            verdict.method = PlanarityMethod::BipartiteBoundPruned;
            detail::attach_witness_if_small(g, verdict);
            return verdict;
        }
    }
    auto res = detail::run_boyer_myrvold(g);
    verdict.method = PlanarityMethod::FullTest;
    verdict.planar = res.planar;
    if (res.planar) {
        if (!detail::certify_rotation_planar(g, res.rotation))
            throw InvariantError("planar embedding failed Euler certification");
    } else {
        auto w = detail::witness_from_edge_set(g.n, res.kuratowski);
        if (!w || !validate_witness(g, *w))
            throw InvariantError("Kuratowski witness failed re-validation");
        verdict.witness = std::move(w);
    }
    return verdict;
}

namespace detail {

inline void attach_witness_if_small(const SimpleGraph& g, PlanarityVerdict& v) {
    if (g.n > 64) return;
    auto res = run_boyer_myrvold(g);
    if (res.planar)
        throw InvariantError("edge-count pruning contradicted by the full test");
    auto w = witness_from_edge_set(g.n, res.kuratowski);
    if (!w || !validate_witness(g, *w))
        throw InvariantError("Kuratowski witness failed re-validation");
    v.witness = std::move(w);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Exhaustive subdivision oracle (test-side ground truth for tiny graphs).
// ---------------------------------------------------------------------------

namespace detail {

struct SubdivisionSearch {
    int n;
    std::vector<std::uint32_t> adj;  // adjacency bitmask per vertex

    bool connect_pairs(const std::vector<std::pair<int, int>>& pairs,
                       std::size_t idx, std::uint32_t branch_mask,
                       std::uint32_t used) {
        if (idx == pairs.size()) return true;
        const auto [s, t] = pairs[idx];
        // grow a simple path s -> t over free interior vertices
        auto dfs = [&](auto&& self, int cur, std::uint32_t interior) -> bool {
            if (adj[cur] & (std::uint32_t(1) << t)) {
                if (connect_pairs(pairs, idx + 1, branch_mask, used | interior))
                    return true;
            }
            std::uint32_t cand = adj[cur] & ~(branch_mask | used | interior);
            while (cand) {
                const int w = std::countr_zero(cand);
                cand &= cand - 1;
                if (self(self, w, interior | (std::uint32_t(1) << w))) return true;
            }
            return false;
        };
        return dfs(dfs, s, 0);
    }
};

}  // namespace detail

/// True iff the graph contains a K5 or K33 subdivision, by exhaustive search
/// over branch-vertex choices and internally disjoint connecting paths.
/// Intended as an independent oracle; capped at 12 vertices.
inline bool kuratowski_oracle_nonplanar(const SimpleGraph& g) {
    if (g.n > 12) throw BudgetError("kuratowski oracle capped at 12 vertices");
    detail::SubdivisionSearch s;
    s.n = g.n;
    s.adj.assign(g.n, 0);
    for (auto& [u, v] : g.edges) {
        s.adj[u] |= std::uint32_t(1) << v;
        s.adj[v] |= std::uint32_t(1) << u;
    }
    std::vector<int> deg(g.n);
    for (int v = 0; v < g.n; ++v) deg[v] = std::popcount(s.adj[v]);

    // K5: five branch vertices of degree >= 4, ten pairwise paths
    std::vector<int> cand5;
    for (int v = 0; v < g.n; ++v)
        if (deg[v] >= 4) cand5.push_back(v);
    const int m5 = int(cand5.size());
    std::vector<int> pick(5);
    auto choose5 = [&](auto&& self, int start, int k) -> bool {
        if (k == 5) {
            std::uint32_t mask = 0;
            for (int v : pick) mask |= std::uint32_t(1) << v;
            std::vector<std::pair<int, int>> pairs;
            for (int i = 0; i < 5; ++i)
                for (int j = i + 1; j < 5; ++j) pairs.emplace_back(pick[i], pick[j]);
            return s.connect_pairs(pairs, 0, mask, 0);
        }
        for (int i = start; i < m5; ++i) {
            pick[k] = cand5[i];
            if (self(self, i + 1, k + 1)) return true;
        }
        return false;
    };
    if (m5 >= 5 && choose5(choose5, 0, 0)) return true;

    // K33: six branch vertices of degree >= 3 split into sides of three
    std::vector<int> cand3;
    for (int v = 0; v < g.n; ++v)
        if (deg[v] >= 3) cand3.push_back(v);
    const int m3 = int(cand3.size());
    if (m3 < 6) return false;
    std::vector<int> six(6);
    auto try_partitions = [&]() -> bool {
        // fix six[0] on the left side; choose the rest of the left side
        for (int i = 1; i < 5; ++i)
            for (int j = i + 1; j < 6; ++j) {
                std::array<int, 3> left{six[0], six[i], six[j]};
                std::array<int, 3> right;
                int r = 0;
                for (int k = 1; k < 6; ++k)
                    if (k != i && k != j) right[r++] = six[k];
                std::uint32_t mask = 0;
                for (int v : six) mask |= std::uint32_t(1) << v;
                std::vector<std::pair<int, int>> pairs;
                for (int x : left)
                    for (int y : right) pairs.emplace_back(x, y);
                if (s.connect_pairs(pairs, 0, mask, 0)) return true;
            }
        return false;
    };
    auto choose6 = [&](auto&& self, int start, int k) -> bool {
        if (k == 6) return try_partitions();
        for (int i = start; i < m3; ++i) {
            six[k] = cand3[i];
            if (self(self, i + 1, k + 1)) return true;
        }
        return false;
    };
    return choose6(choose6, 0, 0);
}

}  // namespace gengraph
