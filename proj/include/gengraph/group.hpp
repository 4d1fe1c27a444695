#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gengraph/bitset.hpp"
#include "gengraph/errors.hpp"

namespace gengraph {

inline constexpr int kDefaultOrderCap = 10000;   // table construction
inline constexpr int kDefaultAssocCheckCap = 512;  // O(n^3) associativity scan
inline constexpr int kDefaultSubgroupCap = 48;   // full lattice enumeration

/// An ordered tuple of element indices.
using GroupTuple = std::vector<int>;

/// A finite group given concretely by its multiplication table.
///
/// Index 0 is always the identity.  table(i,j) is the index of x_i * x_j.
/// Instances are immutable after construction and safe to share across
/// threads.
class FiniteGroup {
public:
    FiniteGroup() = default;

    FiniteGroup(std::string name, int n, std::vector<int> table,
                std::vector<std::string> labels)
        : name_(std::move(name)),
          n_(n),
          table_(std::move(table)),
          labels_(std::move(labels)) {
        build_inverses();
    }

    const std::string& name() const { return name_; }
    int order() const { return n_; }
    bool trivial() const { return n_ == 1; }

    int mul(int i, int j) const { return table_[std::size_t(i) * n_ + j]; }
    int inv(int i) const { return inverse_[i]; }
    int conj(int g, int h) const { return mul(mul(g, h), inv(g)); }  // g h g^-1

    const std::string& label(int i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<int>& raw_table() const { return table_; }

    int element_order(int i) const {
        int k = 1, x = i;
        while (x != 0) {
            x = mul(x, i);
            ++k;
        }
        return k;
    }

    bool is_abelian() const {
        for (int i = 1; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (mul(i, j) != mul(j, i)) return false;
        return true;
    }

    ElementSet center() const {
        ElementSet z(n_);
        for (int i = 0; i < n_; ++i) {
            bool central = true;
            for (int j = 0; j < n_ && central; ++j)
                central = mul(i, j) == mul(j, i);
            if (central) z.set(i);
        }
        return z;
    }

private:
    void build_inverses() {
        inverse_.assign(n_, -1);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (mul(i, j) == 0) {
                    inverse_[i] = j;
                    break;
                }
        for (int i = 0; i < n_; ++i)
            if (inverse_[i] < 0)
                throw InvariantError("group table has an element without inverse");
    }

    std::string name_;
    int n_ = 0;
    std::vector<int> table_;
    std::vector<int> inverse_;
    std::vector<std::string> labels_;
};

/// A subgroup of some ambient FiniteGroup, stored as a member bit set.
struct Subgroup {
    ElementSet members;
    int order = 0;

    bool operator==(const Subgroup& o) const { return members == o.members; }
};

// ---------------------------------------------------------------------------
// Structural validation
// ---------------------------------------------------------------------------

/// Checks every FiniteGroup invariant: Latin-square rows/columns, identity
/// at index 0, inverses, and (for n <= assoc_cap) full associativity.
/// Throws InvariantError with the violating cell/triple.
inline void check_group_invariants(const FiniteGroup& g,
                                   int assoc_cap = kDefaultAssocCheckCap) {
    const int n = g.order();
    std::vector<char> seen(n);
    for (int i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < n; ++j) {
            int v = g.mul(i, j);
            if (v < 0 || v >= n)
                throw InvariantError("table entry out of range at row " +
                                     std::to_string(i) + ", col " + std::to_string(j));
            if (seen[v]++)
                throw InvariantError("row " + std::to_string(i) +
                                     " is not a permutation (repeats " +
                                     std::to_string(v) + ")");
        }
    }
    for (int j = 0; j < n; ++j) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int i = 0; i < n; ++i)
            if (seen[g.mul(i, j)]++)
                throw InvariantError("column " + std::to_string(j) +
                                     " is not a permutation");
    }
    for (int j = 0; j < n; ++j)
        if (g.mul(0, j) != j || g.mul(j, 0) != j)
            throw InvariantError("index 0 is not a two-sided identity");
    for (int i = 0; i < n; ++i)
        if (g.mul(i, g.inv(i)) != 0 || g.mul(g.inv(i), i) != 0)
            throw InvariantError("inverse table broken at " + std::to_string(i));
    if (n <= assoc_cap) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const int ij = g.mul(i, j);
                for (int k = 0; k < n; ++k)
                    if (g.mul(ij, k) != g.mul(i, g.mul(j, k)))
                        throw InvariantError(
                            "associativity fails at triple (" + std::to_string(i) +
                            ", " + std::to_string(j) + ", " + std::to_string(k) + ")");
            }
    }
}

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

inline FiniteGroup make_cyclic(int n, int order_cap = kDefaultOrderCap) {
    if (n < 1) throw InvariantError("cyclic group needs n >= 1");
    if (n > order_cap)
        throw BudgetError("cyclic group order " + std::to_string(n) +
                          " exceeds cap " + std::to_string(order_cap));
    std::vector<int> t(std::size_t(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[std::size_t(i) * n + j] = (i + j) % n;
    std::vector<std::string> labels(n);
    labels[0] = "e";
    for (int i = 1; i < n; ++i) labels[i] = i == 1 ? "g" : "g^" + std::to_string(i);
    return FiniteGroup("C" + std::to_string(n), n, std::move(t), std::move(labels));
}

/// Dihedral group of order 2n: indices 0..n-1 are rotations r^k, n..2n-1 are
/// reflections s*r^k, with s r s = r^-1.
inline FiniteGroup make_dihedral(int n, int order_cap = kDefaultOrderCap) {
    if (n < 2) throw InvariantError("dihedral group needs n >= 2");
    if (2 * n > order_cap)
        throw BudgetError("dihedral group order " + std::to_string(2 * n) +
                          " exceeds cap " + std::to_string(order_cap));
    const int m = 2 * n;
    std::vector<int> t(std::size_t(m) * m);
    auto idx = [n](bool refl, int k) { return (refl ? n : 0) + ((k % n) + n) % n; };
    for (int i = 0; i < m; ++i) {
        const bool ri = i >= n;
        const int ki = ri ? i - n : i;  // s^ri r^ki
        for (int j = 0; j < m; ++j) {
            const bool rj = j >= n;
            const int kj = rj ? j - n : j;
            // (s^a r^i)(s^b r^j) = s^(a+b) r^(j + (-1)^b i)
            const int k = rj ? kj - ki : kj + ki;
            t[std::size_t(i) * m + j] = idx(ri != rj, k);
        }
    }
    std::vector<std::string> labels(m);
    for (int k = 0; k < n; ++k) {
        labels[k] = k == 0 ? "e" : (k == 1 ? "r" : "r^" + std::to_string(k));
        labels[n + k] = k == 0 ? "s" : "s.r^" + std::to_string(k);
    }
    return FiniteGroup("D" + std::to_string(n), m, std::move(t), std::move(labels));
}

/// Quaternion group of order 8: elements +-1, +-i, +-j, +-k.
inline FiniteGroup make_quaternion8() {
    // Element = (sign, axis) with axis in {1, i, j, k}; index = axis + 4*neg.
    auto axis_mul = [](int a, int b, int& sign) -> int {
        // 0=1, 1=i, 2=j, 3=k
        static constexpr int prod[4][4] = {
            {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static constexpr int sgn[4][4] = {
            {+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}};
        sign *= sgn[a][b];
        return prod[a][b];
    };
    const int n = 8;
    std::vector<int> t(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int sign = (i >= 4 ? -1 : 1) * (j >= 4 ? -1 : 1);
            int ax = axis_mul(i % 4, j % 4, sign);
            t[std::size_t(i) * n + j] = ax + (sign < 0 ? 4 : 0);
        }
    std::vector<std::string> labels = {"1", "i", "j", "k", "-1", "-i", "-j", "-k"};
    return FiniteGroup("Q8", n, std::move(t), std::move(labels));
}

namespace detail {

inline std::vector<std::vector<int>> permutations_lex(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> all;
    do {
        all.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return all;
}

inline bool perm_even(const std::vector<int>& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 == 0;
}

inline std::string cycle_notation(const std::vector<int>& p) {
    const int n = int(p.size());
    std::vector<char> used(n, 0);
    std::string out;
    for (int s = 0; s < n; ++s) {
        if (used[s] || p[s] == s) continue;
        out += '(';
        int x = s;
        while (!used[x]) {
            used[x] = 1;
            out += std::to_string(x + 1);
            x = p[x];
        }
        out += ')';
    }
    return out.empty() ? "e" : out;
}

inline FiniteGroup group_from_perms(std::string name,
                                    std::vector<std::vector<int>> perms) {
    // identity is lexicographically first, hence index 0
    const int n = int(perms.size());
    const int deg = int(perms[0].size());
    std::vector<std::vector<int>> sorted = perms;  // already lex sorted by caller
    auto rank_of = [&](const std::vector<int>& q) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), q);
        return int(it - sorted.begin());
    };
    std::vector<int> t(std::size_t(n) * n);
    std::vector<int> comp(deg);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // apply perms[i] first, then perms[j]
            for (int x = 0; x < deg; ++x) comp[x] = perms[j][perms[i][x]];
            t[std::size_t(i) * n + j] = rank_of(comp);
        }
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = cycle_notation(perms[i]);
    return FiniteGroup(std::move(name), n, std::move(t), std::move(labels));
}

}  // namespace detail

inline FiniteGroup make_symmetric(int n) {
    if (n < 1 || n > 6)
        throw InvariantError("symmetric group constructor supports 1 <= n <= 6");
    return detail::group_from_perms("S" + std::to_string(n),
                                    detail::permutations_lex(n));
}

inline FiniteGroup make_alternating(int n) {
    if (n < 1 || n > 6)
        throw InvariantError("alternating group constructor supports 1 <= n <= 6");
    auto all = detail::permutations_lex(n);
    std::vector<std::vector<int>> even;
    for (auto& p : all)
        if (detail::perm_even(p)) even.push_back(p);
    return detail::group_from_perms("A" + std::to_string(n), std::move(even));
}

inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                  int order_cap = kDefaultOrderCap) {
    const long long n = (long long)a.order() * b.order();
    if (n > order_cap)
        throw BudgetError("direct product order " + std::to_string(n) +
                          " exceeds cap " + std::to_string(order_cap));
    const int na = a.order(), nb = b.order(), m = int(n);
    std::vector<int> t(std::size_t(m) * m);
    for (int i = 0; i < m; ++i) {
        const int ia = i / nb, ib = i % nb;
        for (int j = 0; j < m; ++j) {
            const int ja = j / nb, jb = j % nb;
            t[std::size_t(i) * m + j] = a.mul(ia, ja) * nb + b.mul(ib, jb);
        }
    }
    std::vector<std::string> labels(m);
    for (int i = 0; i < m; ++i)
        labels[i] = "(" + a.label(i / nb) + "," + b.label(i % nb) + ")";
    return FiniteGroup(a.name() + "x" + b.name(), m, std::move(t), std::move(labels));
}

// ---------------------------------------------------------------------------
// Table file format
//
//   order <n>
//   name <display name>          (optional)
//   <n rows of n 0-based indices>
//   labels                       (optional; followed by n lines, one label each)
//
// The loader accepts the identity at any index and renumbers so it lands at
// index 0; all invariants are validated strictly.
// ---------------------------------------------------------------------------

inline FiniteGroup load_table(std::istream& in, const std::string& display,
                              int assoc_cap = kDefaultAssocCheckCap) {
    std::string line;
    int lineno = 0;
    auto next_line = [&](bool required) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        if (required) throw ParseError("unexpected end of file", lineno + 1, 1);
        return false;
    };

    next_line(true);
    std::istringstream head(line);
    std::string kw;
    long long n = -1;
    if (!(head >> kw >> n) || kw != "order" || n < 1)
        throw ParseError("expected header 'order <n>'", lineno, 1);
    if (n > kDefaultOrderCap)
        throw BudgetError("table order " + std::to_string(n) + " exceeds cap " +
                          std::to_string(kDefaultOrderCap));
    if (n > assoc_cap)
        throw BudgetError("table order " + std::to_string(n) +
                          " exceeds the associativity check cap " +
                          std::to_string(assoc_cap) +
                          "; full validation is required for loaded tables");

    next_line(true);
    std::string name = display;
    if (line.rfind("name", 0) == 0) {
        name = line.substr(4);
        const auto pos = name.find_first_not_of(" \t");
        name = pos == std::string::npos ? display : name.substr(pos);
        next_line(true);
    }

    const int N = int(n);
    std::vector<int> table(std::size_t(N) * N);
    for (int i = 0; i < N; ++i) {
        if (i > 0) next_line(true);
        std::istringstream row(line);
        for (int j = 0; j < N; ++j) {
            long long v;
            if (!(row >> v))
                throw ParseError("row " + std::to_string(i) + " has fewer than " +
                                 std::to_string(N) + " entries", lineno, j + 1);
            if (v < 0 || v >= N)
                throw ParseError("entry " + std::to_string(v) + " out of range",
                                 lineno, j + 1);
            table[std::size_t(i) * N + j] = int(v);
        }
        long long extra;
        if (row >> extra)
            throw ParseError("row " + std::to_string(i) + " has more than " +
                             std::to_string(N) + " entries", lineno, N + 1);
    }

    std::vector<std::string> labels;
    if (next_line(false)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos &&
            line.rfind("labels", 0) == 0) {
            labels.resize(N);
            for (int i = 0; i < N; ++i) {
                if (!std::getline(in, line))
                    throw ParseError("expected " + std::to_string(N) + " labels",
                                     lineno + i + 1, 1);
                while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
                    line.pop_back();
                labels[i] = line;
            }
            lineno += N;
        } else {
            throw ParseError("unexpected trailing content", lineno, 1);
        }
    }

    // locate the identity and renumber it to index 0 if necessary
    int e = -1;
    for (int i = 0; i < N && e < 0; ++i) {
        bool ok = true;
        for (int j = 0; j < N && ok; ++j)
            ok = table[std::size_t(i) * N + j] == j && table[std::size_t(j) * N + i] == j;
        if (ok) e = i;
    }
    if (e < 0) throw InvariantError("table has no two-sided identity");
    if (e != 0) {
        std::vector<int> pi(N);
        std::iota(pi.begin(), pi.end(), 0);
        pi[0] = e;
        pi[e] = 0;  // swap 0 <-> e; pi is its own inverse
        std::vector<int> t2(std::size_t(N) * N);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                t2[std::size_t(pi[i]) * N + pi[j]] = pi[table[std::size_t(i) * N + j]];
        table.swap(t2);
        if (!labels.empty()) {
            std::swap(labels[0], labels[e]);
        }
    }

    if (labels.empty()) {
        labels.resize(N);
        for (int i = 0; i < N; ++i) labels[i] = "x" + std::to_string(i);
        labels[0] = "e";
    }

    FiniteGroup g(name, N, std::move(table), std::move(labels));
    check_group_invariants(g, assoc_cap);
    return g;
}

inline FiniteGroup load_table(const std::string& path,
                              int assoc_cap = kDefaultAssocCheckCap) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open group table file: " + path);
    return load_table(in, path, assoc_cap);
}

inline void save_table(const FiniteGroup& g, std::ostream& out) {
    out << "order " << g.order() << "\n";
    out << "name " << g.name() << "\n";
    for (int i = 0; i < g.order(); ++i) {
        for (int j = 0; j < g.order(); ++j) out << (j ? " " : "") << g.mul(i, j);
        out << "\n";
    }
    out << "labels\n";
    for (int i = 0; i < g.order(); ++i) out << g.label(i) << "\n";
}

inline void save_table(const FiniteGroup& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write group table file: " + path);
    save_table(g, out);
}

// ---------------------------------------------------------------------------
// Closure and generation
// ---------------------------------------------------------------------------

/// Incrementally extendable subgroup closure.  `members` lists elements in
/// insertion order; all pairwise products of listed members are already in
/// the set once `settle` has run over them.
struct ClosureState {
    ElementSet in;
    std::vector<int> members;

    void reset(int universe) {
        if (in.universe() != universe) in = ElementSet(universe);
        else in.clear();
        members.clear();
        in.set(0);
        members.push_back(0);
    }

    void assign(const ClosureState& o) {
        in = o.in;
        members = o.members;
    }

    int size() const { return int(members.size()); }
};

namespace detail {

inline void closure_add(const FiniteGroup& g, ClosureState& s, int x) {
    if (s.in.test(x)) return;
    const std::size_t start = s.members.size();
    s.in.set(x);
    s.members.push_back(x);
    // multiply every new member with everything present, both sides
    for (std::size_t i = start; i < s.members.size(); ++i) {
        const int a = s.members[i];
        for (std::size_t j = 0; j < s.members.size(); ++j) {
            const int b = s.members[j];
            int p = g.mul(a, b);
            if (!s.in.test(p)) {
                s.in.set(p);
                s.members.push_back(p);
            }
            p = g.mul(b, a);
            if (!s.in.test(p)) {
                s.in.set(p);
                s.members.push_back(p);
            }
        }
    }
}

}  // namespace detail

/// Smallest subgroup containing `seed`.
inline Subgroup closure(const FiniteGroup& g, const std::vector<int>& seed) {
    ClosureState s;
    s.reset(g.order());
    for (int x : seed) {
        if (x < 0 || x >= g.order())
            throw InvariantError("closure: element index out of range");
        detail::closure_add(g, s, x);
    }
    return Subgroup{s.in, s.size()};
}

inline Subgroup closure(const FiniteGroup& g, const ElementSet& seed) {
    ClosureState s;
    s.reset(g.order());
    seed.for_each([&](int x) { detail::closure_add(g, s, x); });
    return Subgroup{s.in, s.size()};
}

inline Subgroup trivial_subgroup(const FiniteGroup& g) {
    return closure(g, std::vector<int>{});
}

inline Subgroup whole_group(const FiniteGroup& g) {
    ElementSet all(g.order());
    for (int i = 0; i < g.order(); ++i) all.set(i);
    return Subgroup{all, g.order()};
}

/// True iff the entries of `t` generate the whole group.  Exits early once
/// the running closure reaches full order.
inline bool generates(const FiniteGroup& g, const GroupTuple& t) {
    ClosureState s;
    s.reset(g.order());
    for (int x : t) {
        if (x < 0 || x >= g.order())
            throw InvariantError("generates: element index out of range");
        detail::closure_add(g, s, x);
        if (s.size() == g.order()) return true;
    }
    return s.size() == g.order();
}

namespace detail {

// DFS for a generating d-tuple in lexicographic order.
inline bool find_generating_tuple(const FiniteGroup& g, int depth, int d,
                                  std::vector<ClosureState>& stack,
                                  GroupTuple& out) {
    const int n = g.order();
    if (stack[depth].size() == n) {  // pad the rest with identity
        std::fill(out.begin() + depth, out.end(), 0);
        return true;
    }
    if (depth == d) return false;
    for (int x = 0; x < n; ++x) {
        stack[depth + 1].assign(stack[depth]);
        closure_add(g, stack[depth + 1], x);
        out[depth] = x;
        if (find_generating_tuple(g, depth + 1, d, stack, out)) return true;
    }
    return false;
}

}  // namespace detail

/// The lexicographically first generating d-tuple, or nullopt if none exists.
/// When the closure fills up early the remaining positions are identities.
inline std::optional<GroupTuple> first_generating_tuple(const FiniteGroup& g, int d) {
    if (d == 0) return g.trivial() ? std::optional<GroupTuple>(GroupTuple{}) : std::nullopt;
    std::vector<ClosureState> stack(d + 1);
    for (auto& s : stack) s.reset(g.order());
    GroupTuple out(d, 0);
    if (detail::find_generating_tuple(g, 0, d, stack, out)) return out;
    return std::nullopt;
}

/// d(G): minimum size of a generating set; 0 for the trivial group.
inline int min_gen_size(const FiniteGroup& g) {
    if (g.trivial()) return 0;
    for (int d = 1;; ++d)
        if (first_generating_tuple(g, d)) return d;
}

/// A minimal generating tuple (lexicographically first).
inline GroupTuple min_gen_tuple(const FiniteGroup& g) {
    return *first_generating_tuple(g, min_gen_size(g));
}

// ---------------------------------------------------------------------------
// Fingerprints (order + abelianness + center size + element-order profile).
// Sufficient to tell apart all non-isomorphic groups in the bundled catalog;
// not an isomorphism test.
// ---------------------------------------------------------------------------

struct Fingerprint {
    int order = 0;
    bool abelian = false;
    int center_size = 0;
    std::vector<std::pair<int, int>> profile;  // (element order, count), sorted

    bool operator==(const Fingerprint& o) const {
        return order == o.order && abelian == o.abelian &&
               center_size == o.center_size && profile == o.profile;
    }
    bool operator<(const Fingerprint& o) const {
        return std::tie(order, abelian, center_size, profile) <
               std::tie(o.order, o.abelian, o.center_size, o.profile);
    }

    std::string key() const {
        std::string s = std::to_string(order) + (abelian ? ":a" : ":n") + ":z" +
                        std::to_string(center_size) + ":";
        for (auto& [o, c] : profile)
            s += std::to_string(o) + "^" + std::to_string(c) + ".";
        return s;
    }
};

inline Fingerprint fingerprint(const FiniteGroup& g) {
    Fingerprint f;
    f.order = g.order();
    f.abelian = g.is_abelian();
    f.center_size = g.center().count();
    std::vector<std::pair<int, int>> prof;
    for (int i = 0; i < g.order(); ++i) {
        const int o = g.element_order(i);
        auto it = std::find_if(prof.begin(), prof.end(),
                               [o](auto& p) { return p.first == o; });
        if (it == prof.end()) prof.emplace_back(o, 1);
        else ++it->second;
    }
    std::sort(prof.begin(), prof.end());
    f.profile = std::move(prof);
    return f;
}

/// Direct table comparison under a supplied bijection: true iff
/// perm(a.mul(i,j)) == b.mul(perm(i), perm(j)) for all i, j.
inline bool tables_isomorphic_under(const FiniteGroup& a, const FiniteGroup& b,
                                    const std::vector<int>& perm) {
    if (a.order() != b.order() || int(perm.size()) != a.order()) return false;
    for (int i = 0; i < a.order(); ++i)
        for (int j = 0; j < a.order(); ++j)
            if (perm[a.mul(i, j)] != b.mul(perm[i], perm[j])) return false;
    return true;
}

/// Reindexes a subgroup as a standalone FiniteGroup.  Member order is
/// ascending, so the identity stays at index 0.
inline FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h,
                                     const std::string& name) {
    const auto mem = h.members.members();
    const int m = int(mem.size());
    std::vector<int> pos(g.order(), -1);
    for (int i = 0; i < m; ++i) pos[mem[i]] = i;
    std::vector<int> t(std::size_t(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const int p = g.mul(mem[i], mem[j]);
            if (pos[p] < 0)
                throw InvariantError("subgroup_as_group: member set not closed");
            t[std::size_t(i) * m + j] = pos[p];
        }
    std::vector<std::string> labels(m);
    for (int i = 0; i < m; ++i) labels[i] = g.label(mem[i]);
    return FiniteGroup(name, m, std::move(t), std::move(labels));
}

}  // namespace gengraph
