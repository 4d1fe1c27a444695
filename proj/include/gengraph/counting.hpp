#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "gengraph/group.hpp"
#include "gengraph/rational.hpp"
#include "gengraph/subgroups.hpp"

namespace gengraph {

inline constexpr std::uint64_t kDefaultStepBudget = 100'000'000ULL;

/// Knobs for the enumeration loops.  The step budget is enforced as a
/// deterministic up-front gate on the worst-case number of incremental
/// closure steps, so results and abort behaviour do not depend on the worker
/// count or on scheduling.
struct EnumOptions {
    std::uint64_t budget_steps = kDefaultStepBudget;
    int workers = 1;
};

namespace detail {

/// Worst case closure-extension steps of the tuple DFS: sum of |G|^i.
inline BigInt worst_case_steps(int order, int d) {
    BigInt total = 0, pw = 1;
    for (int i = 1; i <= d; ++i) {
        pw *= order;
        total += pw;
    }
    return total;
}

inline void check_enum_budget(const FiniteGroup& g, int d, std::uint64_t budget,
                              const char* what) {
    if (worst_case_steps(g.order(), d) <= budget) return;
    int feasible = 0;
    while (worst_case_steps(g.order(), feasible + 1) <= budget) ++feasible;
    throw BudgetError(std::string(what) + ": worst-case step count for |G|=" +
                          std::to_string(g.order()) + ", d=" + std::to_string(d) +
                          " exceeds budget " + std::to_string(budget) +
                          " (feasible depth " + std::to_string(feasible) + ")",
                      feasible);
}

inline std::uint64_t u64_pow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

/// Runs f(i) for i in [0, n) on up to `workers` threads.  Each slot of the
/// result vector is written by exactly one call, so the merged result is
/// independent of scheduling.
template <class R, class F>
std::vector<R> map_indexed(int n, int workers, F&& f) {
    std::vector<R> out(n);
    if (workers <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) out[i] = f(i);
        return out;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) out[i] = f(i);
    };
    const int k = std::min(workers, n);
    std::vector<std::thread> pool;
    pool.reserve(k - 1);
    for (int t = 0; t < k - 1; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return out;
}

/// Counts generating d-tuples below one DFS node.  `stack[depth]` holds the
/// closure of the current prefix.  Once the closure is full every completion
/// generates and the subtree is counted in closed form; nothing appended
/// there can matter.
struct TupleCounter {
    const FiniteGroup& g;
    const int d;
    std::vector<ClosureState> stack;
    std::uint64_t steps = 0;

    TupleCounter(const FiniteGroup& g, int d) : g(g), d(d), stack(d + 1) {
        for (auto& s : stack) s.reset(g.order());
    }

    std::uint64_t count_from(int depth) {
        const int n = g.order();
        const int size = stack[depth].size();
        if (size == n) return u64_pow(n, d - depth);
        if (depth == d) return 0;
        std::uint64_t total = 0;
        for (int x = 0; x < n; ++x) {
            stack[depth + 1].assign(stack[depth]);
            closure_add(g, stack[depth + 1], x);
            ++steps;
            total += count_from(depth + 1);
        }
        return total;
    }
};

}  // namespace detail

/// phi_G(d): the number of generating d-tuples, by pruned depth-first
/// enumeration with an incrementally extended closure.  Parallelises over the
/// first tuple coordinate; partial counts are summed in coordinate order.
inline std::uint64_t phi_enumerate(const FiniteGroup& g, int d,
                                   const EnumOptions& opts = {}) {
    if (d < 0) throw InvariantError("phi_enumerate: negative arity");
    if (d == 0) return g.trivial() ? 1 : 0;
    detail::check_enum_budget(g, d, opts.budget_steps, "phi_enumerate");
    const int n = g.order();
    auto per_first = detail::map_indexed<std::uint64_t>(
        n, opts.workers, [&](int x0) {
            detail::TupleCounter tc(g, d);
            tc.stack[1].assign(tc.stack[0]);
            detail::closure_add(g, tc.stack[1], x0);
            return tc.count_from(1);
        });
    std::uint64_t total = 0;
    for (auto c : per_first) total += c;
    return total;
}

/// Visits every generating d-tuple with first coordinate `first`, in
/// lexicographic order.  The callback receives a reusable buffer.
template <class F>
void visit_generating_tuples_prefix(const FiniteGroup& g, int d, int first, F&& f) {
    const int n = g.order();
    std::vector<ClosureState> stack(d + 1);
    for (auto& s : stack) s.reset(n);
    GroupTuple buf(d, 0);

    // once the prefix closure is full, spin through all completions
    auto emit_completions = [&](auto&& self, int depth) -> void {
        if (depth == d) {
            f(const_cast<const GroupTuple&>(buf));
            return;
        }
        for (int x = 0; x < n; ++x) {
            buf[depth] = x;
            self(self, depth + 1);
        }
    };
    auto dfs = [&](auto&& self, int depth) -> void {
        if (stack[depth].size() == n) {
            emit_completions(emit_completions, depth);
            return;
        }
        if (depth == d) return;
        for (int x = 0; x < n; ++x) {
            stack[depth + 1].assign(stack[depth]);
            detail::closure_add(g, stack[depth + 1], x);
            buf[depth] = x;
            self(self, depth + 1);
        }
    };

    if (d == 0) {
        if (g.trivial()) f(const_cast<const GroupTuple&>(buf));
        return;
    }
    stack[1].assign(stack[0]);
    detail::closure_add(g, stack[1], first);
    buf[0] = first;
    dfs(dfs, 1);
}

/// Single-threaded full visit in lexicographic order.
template <class F>
void for_each_generating_tuple(const FiniteGroup& g, int d, F&& f,
                               std::uint64_t budget = kDefaultStepBudget) {
    if (d == 0) {
        if (g.trivial()) f(GroupTuple{});
        return;
    }
    detail::check_enum_budget(g, d, budget, "tuple enumeration");
    for (int x0 = 0; x0 < g.order(); ++x0)
        visit_generating_tuples_prefix(g, d, x0, f);
}

/// The first `limit` generating d-tuples in lexicographic order (fewer when
/// phi_G(d) is smaller).
inline std::vector<GroupTuple> first_generating_tuples(const FiniteGroup& g, int d,
                                                       std::size_t limit) {
    std::vector<GroupTuple> out;
    if (limit == 0) return out;
    if (d == 0) {
        if (g.trivial()) out.push_back(GroupTuple{});
        return out;
    }
    const int n = g.order();
    std::vector<ClosureState> stack(d + 1);
    for (auto& s : stack) s.reset(n);
    GroupTuple buf(d, 0);
    auto emit_all = [&](auto&& self, int depth) -> bool {
        if (out.size() == limit) return true;
        if (depth == d) {
            out.push_back(buf);
            return out.size() == limit;
        }
        for (int x = 0; x < n; ++x) {
            buf[depth] = x;
            if (self(self, depth + 1)) return true;
        }
        return false;
    };
    auto dfs = [&](auto&& self, int depth) -> bool {
        if (stack[depth].size() == n) return emit_all(emit_all, depth);
        if (depth == d) return false;
        for (int x = 0; x < n; ++x) {
            stack[depth + 1].assign(stack[depth]);
            detail::closure_add(g, stack[depth + 1], x);
            buf[depth] = x;
            if (self(self, depth + 1)) return true;
        }
        return false;
    };
    dfs(dfs, 0);
    return out;
}

/// Independent oracle for phi_G(d) by Moebius inversion over the subgroup
/// lattice: phi_G(d) = sum_H mu(H, G) |H|^d.
inline std::uint64_t phi_mobius(const FiniteGroup& g, int d,
                                int cap = kDefaultSubgroupCap) {
    if (d < 0) throw InvariantError("phi_mobius: negative arity");
    const auto subs = all_subgroups(g, cap);  // ascending order; last is G
    const int m = int(subs.size());
    std::vector<BigInt> mu(m);
    for (int i = m - 1; i >= 0; --i) {
        if (i == m - 1) {
            mu[i] = 1;
            continue;
        }
        BigInt s = 0;
        for (int k = i + 1; k < m; ++k)
            if (subs[k].members.contains_all(subs[i].members)) s += mu[k];
        mu[i] = -s;
    }
    BigInt phi = 0;
    for (int i = 0; i < m; ++i) phi += mu[i] * int_pow(subs[i].order, unsigned(d));
    if (phi < 0) throw InvariantError("phi_mobius produced a negative count");
    return phi.convert_to<std::uint64_t>();
}

// ---------------------------------------------------------------------------
// Aggregate statistics
// ---------------------------------------------------------------------------

struct GenStats {
    std::string group;
    int d = 0;
    std::uint64_t phi = 0;
    Rational prob;   // phi / |G|^d
    Rational alpha;  // phi / |G|^(d-1)
};

inline GenStats gen_stats(const FiniteGroup& g, int d, const EnumOptions& opts = {}) {
    GenStats s;
    s.group = g.name();
    s.d = d;
    s.phi = phi_enumerate(g, d, opts);
    const BigInt phi = s.phi;
    s.prob = Rational(phi, int_pow(g.order(), unsigned(d)));
    s.alpha = d == 0 ? Rational(phi) : Rational(phi, int_pow(g.order(), unsigned(d - 1)));
    return s;
}

namespace detail {

/// True iff some generating d-tuple has value `x` pinned at `pos`.
inline bool element_in_generating_tuple(const FiniteGroup& g, int d, int pos, int x) {
    const int n = g.order();
    std::vector<ClosureState> stack(d + 1);
    for (auto& s : stack) s.reset(n);
    auto dfs = [&](auto&& self, int depth) -> bool {
        const int size = stack[depth].size();
        if (depth == d) return size == n;
        if (size == n && depth > pos) return true;
        const int lo = depth == pos ? x : 0;
        const int hi = depth == pos ? x + 1 : n;
        for (int y = lo; y < hi; ++y) {
            stack[depth + 1].assign(stack[depth]);
            closure_add(g, stack[depth + 1], y);
            if (self(self, depth + 1)) return true;
        }
        return false;
    };
    return dfs(dfs, 0);
}

}  // namespace detail

/// rho(G): how many elements occur at position `pos` of at least one
/// generating d(G)-tuple.  The defining condition is symmetric in the
/// position; tests assert that rather than assume it.
inline long long rho_at_position(const FiniteGroup& g, int pos,
                                 const EnumOptions& opts = {}) {
    if (g.trivial())
        throw InvariantError("rho is defined for nontrivial groups only");
    const int d = min_gen_size(g);
    if (pos < 0 || pos >= d) throw InvariantError("rho: position out of range");
    detail::check_enum_budget(g, d, opts.budget_steps, "rho");
    auto flags = detail::map_indexed<char>(g.order(), opts.workers, [&](int x) {
        return char(detail::element_in_generating_tuple(g, d, pos, x));
    });
    long long c = 0;
    for (char f : flags) c += f;
    return c;
}

inline long long rho(const FiniteGroup& g, const EnumOptions& opts = {}) {
    return rho_at_position(g, 0, opts);
}

// ---------------------------------------------------------------------------
// Relative (Gaschuetz) counts
// ---------------------------------------------------------------------------

namespace detail {

inline bool generates_mod(const FiniteGroup& g, const Subgroup& n,
                          const GroupTuple& t) {
    ClosureState s;
    s.reset(g.order());
    n.members.for_each([&](int x) { closure_add(g, s, x); });
    for (int x : t) {
        closure_add(g, s, x);
        if (s.size() == g.order()) return true;
    }
    return s.size() == g.order();
}

}  // namespace detail

/// |Phi_N(g_1,...,g_k)|: the number of correction tuples (n_1,...,n_k) in N^k
/// with <g_1 n_1, ..., g_k n_k> = G.  Requires <g_1,...,g_k> N = G.
inline std::uint64_t gaschutz_count(const FiniteGroup& g, const Subgroup& n,
                                    const GroupTuple& tuple,
                                    std::uint64_t budget = kDefaultStepBudget) {
    if (!is_normal(g, n)) throw InvariantError("gaschutz_count: N is not normal");
    for (int x : tuple)
        if (x < 0 || x >= g.order())
            throw InvariantError("gaschutz_count: tuple entry out of range");
    if (!detail::generates_mod(g, n, tuple))
        throw InvariantError("gaschutz_count: tuple does not generate modulo N");
    const int k = int(tuple.size());
    const auto mem = n.members.members();
    BigInt combos = int_pow(n.order, unsigned(k));
    if (combos * std::max(1, k) > budget)
        throw BudgetError("gaschutz_count: |N|^k exceeds budget");
    std::uint64_t count = 0;
    GroupTuple corrected(k);
    std::vector<int> odo(k, 0);
    while (true) {
        for (int i = 0; i < k; ++i) corrected[i] = g.mul(tuple[i], mem[odo[i]]);
        if (generates(g, corrected)) ++count;
        int i = k - 1;
        while (i >= 0 && ++odo[i] == int(mem.size())) odo[i--] = 0;
        if (i < 0) break;
    }
    if (k == 0) return g.trivial() ? 1 : 0;
    return count;
}

struct RelativeStats {
    std::string group;
    int n_order = 0;
    int k = 0;
    std::uint64_t gaschutz = 0;  // |Phi_N| for the canonical lifting tuple
    Rational p_gn;               // |Phi_N| / |N|^k
    Rational alpha_rel;          // p_gn * |N|
};

/// Canonical lifting tuple: the lexicographically first generating k-tuple of
/// G (it generates, hence generates modulo N).  Exists whenever k >= d(G).
inline GroupTuple canonical_lifting_tuple(const FiniteGroup& g, const Subgroup& n,
                                          int k) {
    if (auto t = first_generating_tuple(g, k)) return *t;
    // fall back to a lexicographic scan for tuples generating only modulo N
    GroupTuple t(k, 0);
    while (true) {
        if (detail::generates_mod(g, n, t)) return t;
        int i = k - 1;
        while (i >= 0 && ++t[i] == g.order()) t[i--] = 0;
        if (i < 0)
            throw InvariantError("no lifting tuple exists: k < d(G/N)");
    }
}

inline RelativeStats relative_stats(const FiniteGroup& g, const Subgroup& n, int k,
                                    std::uint64_t budget = kDefaultStepBudget) {
    RelativeStats r;
    r.group = g.name();
    r.n_order = n.order;
    r.k = k;
    r.gaschutz = gaschutz_count(g, n, canonical_lifting_tuple(g, n, k), budget);
    r.p_gn = Rational(BigInt(r.gaschutz), int_pow(n.order, unsigned(k)));
    r.alpha_rel = r.p_gn * n.order;
    return r;
}

struct IndependenceResult {
    bool independent = true;
    std::uint64_t value = 0;     // common |Phi_N|
    std::uint64_t deviant = 0;   // differing count when !independent
    GroupTuple witness;          // tuple exhibiting the difference
    int tuples_checked = 0;
    bool exhaustive = false;
};

/// Checks that |Phi_N| agrees across lifting tuples.  All tuples are checked
/// when |G|^k is small; otherwise a fixed-seed random sample of at least 128
/// lifting tuples keeps runs reproducible.
inline IndependenceResult gaschutz_independence_check(
    const FiniteGroup& g, const Subgroup& n, int k,
    std::uint64_t budget = kDefaultStepBudget) {
    IndependenceResult res;
    std::vector<GroupTuple> lifting;
    const BigInt total = int_pow(g.order(), unsigned(k));
    if (total <= 65536) {
        res.exhaustive = true;
        GroupTuple t(k, 0);
        while (true) {
            if (detail::generates_mod(g, n, t)) lifting.push_back(t);
            int i = k - 1;
            while (i >= 0 && ++t[i] == g.order()) t[i--] = 0;
            if (i < 0) break;
        }
    } else {
        std::mt19937 rng(0x5eedU);
        std::uniform_int_distribution<int> pick(0, g.order() - 1);
        GroupTuple t(k);
        for (long attempts = 0; lifting.size() < 128 && attempts < 10'000'000;
             ++attempts) {
            for (int i = 0; i < k; ++i) t[i] = pick(rng);
            if (detail::generates_mod(g, n, t)) lifting.push_back(t);
        }
    }
    if (lifting.empty())
        throw InvariantError("gaschutz_independence_check: no lifting tuple");
    res.value = gaschutz_count(g, n, lifting.front(), budget);
    res.tuples_checked = int(lifting.size());
    for (auto& t : lifting) {
        const std::uint64_t v = gaschutz_count(g, n, t, budget);
        if (v != res.value) {
            res.independent = false;
            res.deviant = v;
            res.witness = t;
            break;
        }
    }
    return res;
}

/// Number of complements of a minimal abelian normal subgroup.
inline long long complement_count(const FiniteGroup& g, const Subgroup& n,
                                  int cap = kDefaultSubgroupCap) {
    if (!is_normal(g, n) || n.order == 1)
        throw InvariantError("complement_count: N must be a nontrivial normal subgroup");
    const auto mem = n.members.members();
    for (int x : mem)
        for (int y : mem)
            if (g.mul(x, y) != g.mul(y, x))
                throw InvariantError("complement_count: N is not abelian");
    for (auto& m : normal_subgroups(g, cap))
        if (m.order > 1 && m.order < n.order && n.members.contains_all(m.members))
            throw InvariantError("complement_count: N is not minimal normal");
    return count_complements(g, n, cap);
}

}  // namespace gengraph
