#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gengraph/counting.hpp"

namespace gengraph {

// ---------------------------------------------------------------------------
// Minimal abelian normal subgroups: closed form, lower bound and trichotomy
// for alpha(G, N, d) = P_{G,N}(d) |N|.
// ---------------------------------------------------------------------------

struct MinabCheck {
    std::string group;
    int n_order = 0;
    int d = 0;
    int p = 0, a = 0;
    long long complements = 0;
    Rational alpha_brute;      // via correction-tuple enumeration
    Rational alpha_closed;     // (p^{da} - c) / p^{(d-1)a}
    Rational lower_bound;      // p^{a-1}(p-1)
    int case_id = 0;           // 1, 2 or 3
    bool closed_form_ok = false;
    bool bound_ok = false;
    bool case_ok = false;
    bool two_formula_ok = true;  // alpha = 2 - 2^{t-d+1} when |N|=2 complemented
    std::optional<int> complement_two_rank;
    bool ok() const { return closed_form_ok && bound_ok && case_ok && two_formula_ok; }
};

/// Full check for one (G, N, d) with N minimal abelian normal and d >= d(G).
inline MinabCheck check_min_abelian_normal(const FiniteGroup& g, const Subgroup& n,
                                           int d, const EnumOptions& opts = {},
                                           int cap = kDefaultSubgroupCap) {
    MinabCheck r;
    r.group = g.name();
    r.n_order = n.order;
    r.d = d;
    r.complements = complement_count(g, n, cap);
    const auto pa = detail::prime_power(n.order);
    if (!pa) throw InvariantError("minimal abelian normal subgroup of non-prime-power order");
    r.p = pa->first;
    r.a = pa->second;

    const BigInt pda = int_pow(r.p, unsigned(std::int64_t(d) * r.a));
    const BigInt pd1a = int_pow(r.p, unsigned(std::int64_t(d - 1) * r.a));
    r.alpha_closed = Rational(pda - r.complements, pd1a);
    r.alpha_brute = relative_stats(g, n, d, opts.budget_steps).alpha_rel;
    r.lower_bound = Rational(int_pow(r.p, unsigned(r.a - 1)) * (r.p - 1));
    r.closed_form_ok = r.alpha_brute == r.alpha_closed;
    r.bound_ok = r.alpha_closed >= r.lower_bound;

    const bool size2 = n.order == 2;
    const bool complemented = r.complements > 0;
    bool epi = false;  // does G/N map onto C_2^{d-1}?
    {
        const auto q = quotient(g, n);
        const auto [k, t] = commutator_square_subgroup(q.group, whole_group(q.group));
        (void)k;
        epi = t >= d - 1;
    }
    if (size2 && complemented && epi) r.case_id = 1;
    else if (size2 && complemented) r.case_id = 2;
    else r.case_id = 3;

    switch (r.case_id) {
        case 1:
            r.case_ok = r.alpha_closed == Rational(1);
            break;
        case 2:
            r.case_ok = r.alpha_closed >= Rational(3, 2);
            break;
        default:
            r.case_ok = r.alpha_closed >= Rational(2);
            break;
    }
    // the "alpha = 1" characterisation must also hold in the converse direction
    if (r.alpha_closed == Rational(1) && r.case_id != 1) r.case_ok = false;

    if (size2 && complemented) {
        // pick the first complement in enumeration order
        std::optional<Subgroup> comp;
        for (auto& h : all_subgroups(g, cap)) {
            if ((long long)h.order * n.order != g.order()) continue;
            bool trivial_meet = true;
            h.members.for_each([&](int x) {
                if (x != 0 && n.members.test(x)) trivial_meet = false;
            });
            if (trivial_meet) {
                comp = h;
                break;
            }
        }
        if (!comp) throw InvariantError("complemented factor without complement");
        const auto [k, t] = commutator_square_subgroup(g, *comp);
        (void)k;
        r.complement_two_rank = t;
        // alpha = 2 - 2^{t-d+1} and c = 2^t; d-generation forces t < d
        if (t >= d) {
            r.two_formula_ok = false;
        } else {
            const Rational expect =
                Rational(2) - Rational(BigInt(1), int_pow(2, unsigned(d - 1 - t)));
            r.two_formula_ok = r.alpha_closed == expect &&
                               BigInt(r.complements) == int_pow(2, unsigned(t));
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// alpha(G,d) factors exactly over any chief series, with each factor's
// contribution measured independently by correction-tuple counting in the
// corresponding quotient.
// ---------------------------------------------------------------------------

struct AlphaFactorRow {
    int factor_order = 0;
    bool abelian = false;
    Rational alpha_i;
};

struct AlphaFactorization {
    std::string group;
    int d = 0;
    Rational alpha_total;             // phi_G(d) / |G|^{d-1}
    std::vector<AlphaFactorRow> standard_series;
    std::vector<AlphaFactorRow> reversed_series;
    bool product_ok_standard = false;
    bool product_ok_reversed = false;
    bool ok() const { return product_ok_standard && product_ok_reversed; }
};

namespace detail {

inline std::vector<AlphaFactorRow> alpha_factors_of_series(
    const FiniteGroup& g, const std::vector<ChiefSeriesFactor>& series, int d,
    const EnumOptions& opts) {
    std::vector<AlphaFactorRow> rows;
    for (const auto& f : series) {
        const auto q = quotient(g, f.lower);
        ElementSet image(q.group.order());
        f.upper.members.for_each([&](int x) { image.set(q.coset_of[x]); });
        const Subgroup m{image, image.count()};
        // project a generating tuple of G; its image generates Q, so it
        // certainly generates Q modulo M
        GroupTuple lift = *first_generating_tuple(g, d);
        for (auto& x : lift) x = q.coset_of[x];
        const std::uint64_t phi_m = gaschutz_count(q.group, m, lift, opts.budget_steps);
        AlphaFactorRow row;
        row.factor_order = f.factor_order;
        row.abelian = f.is_abelian;
        row.alpha_i = Rational(BigInt(phi_m), int_pow(m.order, unsigned(d))) * m.order;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace detail

/// Verifies alpha(G,d) = prod_i alpha_i along a chief series, for both
/// tie-break orders (the product must not depend on the series chosen).
inline AlphaFactorization alpha_factorization_check(const FiniteGroup& g, int d,
                                                    const EnumOptions& opts = {},
                                                    int cap = kDefaultSubgroupCap) {
    if (d < min_gen_size(g))
        throw InvariantError("alpha_factorization_check needs d >= d(G)");
    AlphaFactorization res;
    res.group = g.name();
    res.d = d;
    res.alpha_total = gen_stats(g, d, opts).alpha;
    for (bool reversed : {false, true}) {
        const auto series = chief_series(g, reversed, cap);
        auto rows = detail::alpha_factors_of_series(g, series, d, opts);
        Rational prod = 1;
        for (auto& r : rows) prod *= r.alpha_i;
        if (reversed) {
            res.product_ok_reversed = prod == res.alpha_total;
            res.reversed_series = std::move(rows);
        } else {
            res.product_ok_standard = prod == res.alpha_total;
            res.standard_series = std::move(rows);
        }
    }
    return res;
}

/// Annotates a chief series with complement counts and relative alpha values.
inline std::vector<ChiefSeriesFactor> chief_series_with_alpha(
    const FiniteGroup& g, int d, bool reverse_tie_break = false,
    const EnumOptions& opts = {}, int cap = kDefaultSubgroupCap) {
    auto series = chief_series(g, reverse_tie_break, cap);
    auto rows = detail::alpha_factors_of_series(g, series, d, opts);
    for (std::size_t i = 0; i < series.size(); ++i) {
        series[i].alpha_rel = rows[i].alpha_i;
        if (series[i].is_abelian) {
            const auto q = quotient(g, series[i].lower);
            ElementSet image(q.group.order());
            series[i].upper.members.for_each([&](int x) { image.set(q.coset_of[x]); });
            series[i].complement_count =
                count_complements(q.group, Subgroup{image, image.count()}, cap);
        }
    }
    return series;
}

// ---------------------------------------------------------------------------
// Headline inequalities, in exact integer form.
// ---------------------------------------------------------------------------

struct GenerationBoundCheck {
    std::string group;
    int order = 0;
    int d = 0;
    std::uint64_t phi = 0;
    bool ok = false;  // 4 phi^2 >= |G|^{2d-1}, i.e. alpha >= sqrt(|G|)/2
};

inline GenerationBoundCheck check_generation_bound(const FiniteGroup& g, int d,
                                                   const EnumOptions& opts = {}) {
    GenerationBoundCheck r;
    r.group = g.name();
    r.order = g.order();
    r.d = d;
    r.phi = phi_enumerate(g, d, opts);
    const BigInt lhs = 4 * BigInt(r.phi) * BigInt(r.phi);
    const BigInt rhs = int_pow(g.order(), unsigned(2 * d - 1));
    r.ok = lhs >= rhs;
    return r;
}

struct RhoBoundCheck {
    std::string group;
    int order = 0;
    int d = 0;
    long long rho = 0;
    std::uint64_t phi = 0;
    bool power_ok = false;   // rho^d >= phi_G(d)
    bool bound_ok = false;   // 4 rho^{2d} >= |G|^{2d-1}
    bool ok() const { return power_ok && bound_ok; }
};

inline RhoBoundCheck check_rho_bound(const FiniteGroup& g, const EnumOptions& opts = {}) {
    RhoBoundCheck r;
    r.group = g.name();
    r.order = g.order();
    r.d = min_gen_size(g);
    r.rho = rho(g, opts);
    r.phi = phi_enumerate(g, r.d, opts);
    r.power_ok = int_pow(r.rho, unsigned(r.d)) >= BigInt(r.phi);
    r.bound_ok = 4 * int_pow(r.rho, unsigned(2 * r.d)) >=
                 int_pow(g.order(), unsigned(2 * r.d - 1));
    return r;
}

}  // namespace gengraph
