#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "gengraph/group.hpp"
#include "gengraph/rational.hpp"

namespace gengraph {

inline bool is_normal(const FiniteGroup& g, const Subgroup& h) {
    bool ok = true;
    h.members.for_each([&](int x) {
        if (!ok) return;
        for (int a = 0; a < g.order(); ++a)
            if (!h.members.test(g.conj(a, x))) {
                ok = false;
                return;
            }
    });
    return ok;
}

/// Every subgroup, enumerated by closing the set of cyclic subgroups under
/// pairwise joins.  Result is sorted by (order, member set) and contains no
/// duplicates.  Throws BudgetError above the cap.
inline std::vector<Subgroup> all_subgroups(const FiniteGroup& g,
                                           int cap = kDefaultSubgroupCap) {
    if (g.order() > cap)
        throw BudgetError("subgroup enumeration cap " + std::to_string(cap) +
                          " exceeded by order " + std::to_string(g.order()));
    std::unordered_set<ElementSet, ElementSetHash> seen;
    std::vector<Subgroup> subs;
    auto push = [&](Subgroup s) {
        if (seen.insert(s.members).second) subs.push_back(std::move(s));
    };
    push(trivial_subgroup(g));
    for (int x = 1; x < g.order(); ++x) push(closure(g, std::vector<int>{x}));
    // join-closure fixpoint; every new subgroup is joined against all others
    for (std::size_t i = 0; i < subs.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (subs[i].members.contains_all(subs[j].members) ||
                subs[j].members.contains_all(subs[i].members))
                continue;
            ElementSet u = subs[i].members;
            u.unite_with(subs[j].members);
            push(closure(g, u));
        }
    }
    std::sort(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.members.members_lex_less(b.members);
    });
    return subs;
}

inline std::vector<Subgroup> normal_subgroups(const FiniteGroup& g,
                                              int cap = kDefaultSubgroupCap) {
    std::vector<Subgroup> out;
    for (auto& h : all_subgroups(g, cap))
        if (is_normal(g, h)) out.push_back(h);
    return out;
}

/// Normal, nontrivial, containing no smaller nontrivial normal subgroup.
inline std::vector<Subgroup> minimal_normal_subgroups(const FiniteGroup& g,
                                                      int cap = kDefaultSubgroupCap) {
    const auto normals = normal_subgroups(g, cap);
    std::vector<Subgroup> out;
    for (auto& n : normals) {
        if (n.order == 1) continue;
        bool minimal = true;
        for (auto& m : normals) {
            if (m.order == 1 || m.order >= n.order) continue;
            if (n.members.contains_all(m.members)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(n);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Quotients
// ---------------------------------------------------------------------------

struct Quotient {
    FiniteGroup group;
    std::vector<int> coset_of;  // element index -> coset index (a homomorphism)
};

/// G/N for normal N.  Coset indices are assigned in order of each coset's
/// smallest member, so the image of the identity is again index 0.
inline Quotient quotient(const FiniteGroup& g, const Subgroup& n) {
    if (!is_normal(g, n)) throw InvariantError("quotient: subgroup is not normal");
    const int ord = g.order();
    std::vector<int> coset_of(ord, -1);
    std::vector<int> reps;
    for (int x = 0; x < ord; ++x) {
        if (coset_of[x] >= 0) continue;
        const int c = int(reps.size());
        reps.push_back(x);
        n.members.for_each([&](int h) { coset_of[g.mul(x, h)] = c; });
    }
    const int m = int(reps.size());
    std::vector<int> t(std::size_t(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            t[std::size_t(i) * m + j] = coset_of[g.mul(reps[i], reps[j])];
    std::vector<std::string> labels(m);
    for (int i = 0; i < m; ++i) labels[i] = "[" + g.label(reps[i]) + "]";
    FiniteGroup q(g.name() + "/N" + std::to_string(n.order), m, std::move(t),
                  std::move(labels));
    return Quotient{std::move(q), std::move(coset_of)};
}

// ---------------------------------------------------------------------------
// Chief series
// ---------------------------------------------------------------------------

struct ChiefSeriesFactor {
    Subgroup upper;                    // X_i
    Subgroup lower;                    // X_{i+1}, normal in the whole group
    int factor_order = 0;              // |X_i| / |X_{i+1}|
    bool is_abelian = false;
    int prime = 0;                     // set when abelian: factor_order = p^a
    int exponent = 0;
    std::optional<long long> complement_count;  // abelian factors only
    std::optional<Rational> alpha_rel;          // filled by counting routines
};

namespace detail {

inline bool factor_is_abelian(const FiniteGroup& g, const Subgroup& upper,
                              const Subgroup& lower) {
    // commutators of upper-members must land in lower
    const auto mem = upper.members.members();
    for (int x : mem)
        for (int y : mem) {
            const int comm = g.mul(g.mul(x, y), g.inv(g.mul(y, x)));
            if (!lower.members.test(comm)) return false;
        }
    return true;
}

inline std::optional<std::pair<int, int>> prime_power(int n) {
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            int a = 0;
            while (n % p == 0) {
                n /= p;
                ++a;
            }
            if (n != 1) return std::nullopt;
            return std::make_pair(p, a);
        }
    return std::make_pair(n, 1);  // n prime (n >= 2 expected)
}

}  // namespace detail

/// Number of complements of N in G: subgroups H with H meet N = 1 and HN = G.
inline long long count_complements(const FiniteGroup& g, const Subgroup& n,
                                   int cap = kDefaultSubgroupCap) {
    long long c = 0;
    for (auto& h : all_subgroups(g, cap)) {
        if ((long long)h.order * n.order != g.order()) continue;
        ElementSet meet(g.order());
        bool inter_trivial = true;
        h.members.for_each([&](int x) {
            if (x != 0 && n.members.test(x)) inter_trivial = false;
        });
        if (!inter_trivial) continue;
        // |H||N| = |G| and trivial intersection force HN = G
        ++c;
    }
    return c;
}

/// A chief series of G from G down to 1, as a list of consecutive factors.
/// Ties between candidate next terms are broken deterministically on the
/// lexicographically smallest member set (largest when `reverse_tie_break`),
/// which makes reports reproducible and lets callers probe independence of
/// the chosen series.
inline std::vector<ChiefSeriesFactor> chief_series(const FiniteGroup& g,
                                                   bool reverse_tie_break = false,
                                                   int cap = kDefaultSubgroupCap) {
    const auto normals = normal_subgroups(g, cap);
    std::vector<ChiefSeriesFactor> out;
    Subgroup current = whole_group(g);
    while (current.order > 1) {
        // maximal G-normal subgroups strictly below `current`
        std::vector<const Subgroup*> candidates;
        for (auto& n : normals) {
            if (!(n.members.is_proper_subset_of(current.members))) continue;
            bool maximal = true;
            for (auto& m : normals)
                if (n.members.is_proper_subset_of(m.members) &&
                    m.members.is_proper_subset_of(current.members)) {
                    maximal = false;
                    break;
                }
            if (maximal) candidates.push_back(&n);
        }
        if (candidates.empty())
            throw InvariantError("chief series: no maximal normal subgroup found");
        const Subgroup* pick = candidates[0];
        for (auto* c : candidates) {
            const bool less = c->members.members_lex_less(pick->members);
            if (reverse_tie_break ? pick->members.members_lex_less(c->members) : less)
                pick = c;
        }
        ChiefSeriesFactor f;
        f.upper = current;
        f.lower = *pick;
        f.factor_order = current.order / pick->order;
        f.is_abelian = detail::factor_is_abelian(g, current, *pick);
        if (f.is_abelian) {
            const auto pa = detail::prime_power(f.factor_order);
            if (!pa)
                throw InvariantError("abelian chief factor of non-prime-power order");
            f.prime = pa->first;
            f.exponent = pa->second;
        }
        out.push_back(std::move(f));
        current = *pick;
    }
    return out;
}

/// K = H'H^2: the subgroup generated by all commutators and all squares of H
/// (H given as a subgroup of g; pass whole_group(g) for H = G).  Returns K
/// and the 2-rank t with |H/K| = 2^t; H/K is always elementary abelian of
/// exponent <= 2.
inline std::pair<Subgroup, int> commutator_square_subgroup(const FiniteGroup& g,
                                                           const Subgroup& h) {
    ElementSet seed(g.order());
    const auto mem = h.members.members();
    for (int x : mem) {
        seed.set(g.mul(x, x));
        for (int y : mem)
            seed.set(g.mul(g.mul(x, y), g.inv(g.mul(y, x))));  // [x,y] = xy(yx)^-1
    }
    Subgroup k = closure(g, seed);
    if (!h.members.contains_all(k.members))
        throw InvariantError("commutator-square subgroup escapes H");
    int quot = h.order / k.order;
    int t = 0;
    while (quot > 1) {
        if (quot % 2)
            throw InvariantError("H/H'H^2 must be an elementary abelian 2-group");
        quot /= 2;
        ++t;
    }
    return {std::move(k), t};
}

}  // namespace gengraph
