#pragma once

#include <map>
#include <string>
#include <vector>

#include "gengraph/catalog.hpp"
#include "gengraph/checks.hpp"
#include "gengraph/classification.hpp"
#include "gengraph/intervals.hpp"
#include "gengraph/report.hpp"

namespace gengraph {

/// Caps and budgets for the verification suites.  order_cap = 0 selects the
/// per-suite default (24 for the counting suites, 16 for the minimal-normal
/// and planarity suites).
struct VerifyConfig {
    int order_cap = 0;
    int ab_cap = 6;
    long long vertex_cap = 20'000;
    std::uint64_t budget_steps = kDefaultStepBudget;
    int workers = 1;
    long n_cap = 170;  // numeric-lemma range
};

namespace detail {

inline std::string ts(long long v) { return std::to_string(v); }
inline std::string ts(std::uint64_t v) { return std::to_string(v); }
inline std::string ts(int v) { return std::to_string(v); }

struct PhiCache {
    const std::vector<CatalogEntry>* cat = nullptr;
    EnumOptions opts;
    std::map<std::pair<int, int>, std::uint64_t> values;

    std::uint64_t get(int entry, int d) {
        const auto key = std::make_pair(entry, d);
        auto it = values.find(key);
        if (it != values.end()) return it->second;
        const std::uint64_t v = phi_enumerate((*cat)[entry].group, d, opts);
        values[key] = v;
        return v;
    }
};

inline GammaCounts cached_gamma_counts(PhiCache& cache, int entry, int a, int b) {
    const FiniteGroup& g = (*cache.cat)[entry].group;
    GammaCounts c;
    c.phi_d = cache.get(entry, a + b);
    if (a == b) {
        c.phi_a = cache.get(entry, a);
        c.nu = int_pow(g.order(), unsigned(a));
        c.loop_count = c.phi_a;
        c.eta = (c.phi_d - c.phi_a) / 2;
    } else {
        c.nu = int_pow(g.order(), unsigned(a)) + int_pow(g.order(), unsigned(b));
        c.loop_count = 0;
        c.eta = c.phi_d;
    }
    return c;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

/// phi by pruned enumeration against phi by Moebius inversion, d <= 4.
inline ReportTable run_dual_oracle_suite(const VerifyConfig& cfg) {
    const int cap = cfg.order_cap ? cfg.order_cap : 24;
    ReportTable t;
    t.suite = "dual-oracle";
    t.schema = "gengraph.dual-oracle.v1";
    t.columns = {"group", "order", "d", "phi_enumerate", "phi_mobius", "ok"};
    const EnumOptions opts{cfg.budget_steps, cfg.workers};
    for (auto& e : build_catalog(cap)) {
        for (int d = 0; d <= 4; ++d) {
            if (detail::worst_case_steps(e.group.order(), d) > cfg.budget_steps) {
                ++t.skipped;
                continue;
            }
            const std::uint64_t pe = phi_enumerate(e.group, d, opts);
            const std::uint64_t pm = phi_mobius(e.group, d);
            const bool ok = pe == pm;
            t.add_row({e.group.name(), detail::ts(e.group.order()), detail::ts(d),
                       detail::ts(pe), detail::ts(pm), bool_str(ok)},
                      ok);
        }
    }
    return t;
}

/// alpha(G, d) >= sqrt(|G|)/2 in squared-integer form, d = d(G) and d(G)+1.
inline ReportTable run_generation_bound_suite(const VerifyConfig& cfg) {
    const int cap = cfg.order_cap ? cfg.order_cap : 24;
    ReportTable t;
    t.suite = "main-theorem";
    t.schema = "gengraph.main-theorem.v1";
    t.columns = {"group", "order", "d", "phi", "alpha", "alpha_float", "ok"};
    const EnumOptions opts{cfg.budget_steps, cfg.workers};
    for (auto& e : build_catalog(cap)) {
        if (e.group.trivial()) continue;
        for (int d : {e.d, e.d + 1}) {
            if (detail::worst_case_steps(e.group.order(), d) > cfg.budget_steps) {
                ++t.skipped;
                continue;
            }
            const auto r = check_generation_bound(e.group, d, opts);
            const Rational alpha(BigInt(r.phi), int_pow(e.group.order(), unsigned(d - 1)));
            t.add_row({r.group, detail::ts(r.order), detail::ts(d), detail::ts(r.phi),
                       to_fraction_string(alpha), format_double(to_double(alpha)),
                       bool_str(r.ok)},
                      r.ok);
        }
    }
    return t;
}

/// rho(G)^d >= phi_G(d) and 4 rho^{2d} >= |G|^{2d-1}.
inline ReportTable run_rho_bound_suite(const VerifyConfig& cfg) {
    const int cap = cfg.order_cap ? cfg.order_cap : 24;
    ReportTable t;
    t.suite = "corollary";
    t.schema = "gengraph.corollary.v1";
    t.columns = {"group", "order", "d", "rho", "phi", "power_ok", "bound_ok", "ok"};
    const EnumOptions opts{cfg.budget_steps, cfg.workers};
    for (auto& e : build_catalog(cap)) {
        if (e.group.trivial()) continue;
        if (detail::worst_case_steps(e.group.order(), e.d) > cfg.budget_steps) {
            ++t.skipped;
            continue;
        }
        const auto r = check_rho_bound(e.group, opts);
        t.add_row({r.group, detail::ts(r.order), detail::ts(r.d), detail::ts(r.rho),
                   detail::ts(r.phi), bool_str(r.power_ok), bool_str(r.bound_ok),
                   bool_str(r.ok())},
                  r.ok());
    }
    return t;
}

/// Closed form, lower bound, trichotomy and the 2 - 2^{t-d+1} identity for
/// every minimal abelian normal subgroup; plus correction-count independence
/// at k = d(G) and d(G)+1.
inline ReportTable run_min_abelian_normal_suite(const VerifyConfig& cfg) {
    const int cap = cfg.order_cap ? std::min(cfg.order_cap, 48) : 16;
    ReportTable t;
    t.suite = "minab";
    t.schema = "gengraph.minab.v1";
    t.columns = {"group", "order", "n_order", "d", "p", "a", "complements",
                 "alpha", "alpha_float", "case", "closed_form_ok", "bound_ok",
                 "case_ok", "two_formula_ok", "indep_d_ok", "indep_d1_ok", "ok"};
    const EnumOptions opts{cfg.budget_steps, cfg.workers};
    for (auto& e : build_catalog(cap)) {
        if (e.group.trivial()) continue;
        for (auto& n : minimal_normal_subgroups(e.group)) {
            bool abelian = true;
            const auto mem = n.members.members();
            for (int x : mem)
                for (int y : mem)
                    if (e.group.mul(x, y) != e.group.mul(y, x)) abelian = false;
            if (!abelian) continue;
            const auto c = check_min_abelian_normal(e.group, n, e.d, opts);
            const auto i1 = gaschutz_independence_check(e.group, n, e.d, cfg.budget_steps);
            const auto i2 =
                gaschutz_independence_check(e.group, n, e.d + 1, cfg.budget_steps);
            const bool ok = c.ok() && i1.independent && i2.independent;
            t.add_row({c.group, detail::ts(e.group.order()), detail::ts(c.n_order),
                       detail::ts(c.d), detail::ts(c.p), detail::ts(c.a),
                       detail::ts(c.complements), to_fraction_string(c.alpha_closed),
                       format_double(to_double(c.alpha_closed)), detail::ts(c.case_id),
                       bool_str(c.closed_form_ok), bool_str(c.bound_ok),
                       bool_str(c.case_ok), bool_str(c.two_formula_ok),
                       bool_str(i1.independent), bool_str(i2.independent),
                       bool_str(ok)},
                      ok);
        }
    }
    return t;
}

/// alpha(G,d) = product of the per-factor alphas along a chief series, for
/// both tie-break orders, on the fixed small-group list.
inline ReportTable run_alpha_factorization_suite(const VerifyConfig& cfg) {
    ReportTable t;
    t.suite = "alpha-factorization";
    t.schema = "gengraph.alpha-factorization.v1";
    t.columns = {"group", "d", "alpha", "factors", "product_ok", "product_ok_reversed",
                 "ok"};
    const EnumOptions opts{cfg.budget_steps, cfg.workers};
    std::vector<FiniteGroup> groups;
    groups.push_back(make_cyclic(6));
    groups.push_back(direct_product(make_cyclic(2), make_cyclic(2)));
    groups.push_back(make_symmetric(3));
    groups.push_back(make_dihedral(4));
    groups.push_back(make_quaternion8());
    groups.push_back(direct_product(make_cyclic(4), make_cyclic(2)));
    groups.push_back(make_dihedral(6));
    groups.push_back(make_alternating(4));
    groups.push_back(make_symmetric(4));
    for (auto& g : groups) {
        const int d = min_gen_size(g);
        const auto f = alpha_factorization_check(g, d, opts);
        std::string factors;
        for (auto& row : f.standard_series) {
            if (!factors.empty()) factors += " | ";
            factors += detail::ts(row.factor_order) + ":" + to_fraction_string(row.alpha_i);
        }
        t.add_row({f.group, detail::ts(d), to_fraction_string(f.alpha_total), factors,
                   bool_str(f.product_ok_standard), bool_str(f.product_ok_reversed),
                   bool_str(f.ok())},
                  f.ok());
    }
    return t;
}

/// Every link of the genus/thickness/crossing bound chains, exactly.
inline ReportTable run_bound_chain_suite(const VerifyConfig& cfg) {
    const int cap = cfg.order_cap ? cfg.order_cap : 24;
    ReportTable t;
    t.suite = "stima-chain";
    t.schema = "gengraph.stima-chain.v1";
    t.columns = {"group", "a", "b", "nu", "eta", "phi", "components",
                 "links_checked", "first_failure", "ok"};
    const EnumOptions opts{cfg.budget_steps, cfg.workers};
    const auto catalog = build_catalog(cap);
    detail::PhiCache cache{&catalog, opts, {}};
    for (int idx = 0; idx < int(catalog.size()); ++idx) {
        const auto& e = catalog[idx];
        if (e.group.trivial()) continue;
        for (int a = 1; a <= cfg.ab_cap / 2; ++a)
            for (int b = a; a + b <= cfg.ab_cap; ++b) {
                if (a + b < e.d) continue;
                if (detail::worst_case_steps(e.group.order(), a + b) >
                    cfg.budget_steps) {
                    ++t.skipped;
                    continue;
                }
                const auto counts = detail::cached_gamma_counts(cache, idx, a, b);
                const auto r =
                    verify_bound_chain(e.group, a, b, counts, opts, cfg.vertex_cap);
                int checked = 0;
                std::string first_fail = "-";
                for (auto& l : r.links) {
                    if (!l.checked) continue;
                    ++checked;
                    if (!l.ok && first_fail == "-")
                        first_fail = l.name + " [" + l.lhs + " vs " + l.rhs + "]";
                }
                t.add_row({r.group, detail::ts(a), detail::ts(b), r.nu.str(),
                           detail::ts(r.eta), detail::ts(r.phi_d),
                           detail::ts(r.components), detail::ts(checked), first_fail,
                           bool_str(r.ok())},
                          r.ok());
            }
    }
    return t;
}

/// Engine verdict against the classification, with the matching
/// proof-structure checks (K33 witnesses, bipartite bound violations).
inline ReportTable run_planarity_suite(const VerifyConfig& cfg) {
    const int cap = cfg.order_cap ? cfg.order_cap : 16;
    ReportTable t;
    t.suite = "planarity-classification";
    t.schema = "gengraph.planarity-classification.v1";
    t.columns = {"group", "a", "b", "nu", "eta", "loops", "verdict", "expected",
                 "method"};
    const EnumOptions opts{cfg.budget_steps, cfg.workers};
    const auto catalog = build_catalog(cap);
    static const Fingerprint c2fp = fingerprint(make_cyclic(2));
    for (auto& e : catalog) {
        if (e.group.trivial()) continue;
        std::vector<std::pair<int, int>> cells;
        for (int a = 1; a <= cfg.ab_cap / 2; ++a)
            for (int b = a; a + b <= cfg.ab_cap; ++b)
                if (a + b >= e.d) cells.emplace_back(a, b);
        if (e.fp == c2fp)
            for (int b = cfg.ab_cap; b <= 10; ++b) cells.emplace_back(1, b);
        for (auto [a, b] : cells) {
            if (detail::worst_case_steps(e.group.order(), a + b) > cfg.budget_steps) {
                ++t.skipped;
                continue;
            }
            PlanarityCell cell;
            try {
                cell = planarity_cell_check(e.group, a, b, opts, cfg.vertex_cap);
            } catch (const BudgetError&) {
                ++t.skipped;  // nu above the cap and not decidable from counts
                continue;
            }
            t.add_row({cell.group, detail::ts(a), detail::ts(b), cell.nu.str(),
                       detail::ts(cell.eta), detail::ts(cell.loop_count),
                       cell.verdict ? "planar" : "non-planar",
                       cell.expected ? "planar" : "non-planar", cell.method},
                      cell.ok());
        }
    }
    return t;
}

/// Rigorous interval verification of the factorial sandwich and the falling
/// factorial lower bound.
inline ReportTable run_stirling_suite(const VerifyConfig& cfg) {
    ReportTable t;
    t.suite = "stirling";
    t.schema = "gengraph.stirling.v1";
    t.columns = {"check", "range", "failures", "ok"};
    const auto bad1 = stirling_range_failures(cfg.n_cap);
    t.add_row({"factorial-sandwich", "1.." + detail::ts((long long)cfg.n_cap),
               detail::ts((long long)bad1.size()), bool_str(bad1.empty())},
              bad1.empty());
    const auto bad2 = factorial_ratio_failures(cfg.n_cap);
    t.add_row({"factorial-ratio", "1<=t<n<=" + detail::ts((long long)cfg.n_cap),
               detail::ts((long long)bad2.size()), bool_str(bad2.empty())},
              bad2.empty());
    return t;
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

inline std::vector<std::string> suite_names() {
    return {"dual-oracle", "main-theorem",       "corollary",
            "minab",       "alpha-factorization", "stima-chain",
            "planarity-classification", "stirling"};
}

inline ReportTable run_suite(const std::string& name, const VerifyConfig& cfg) {
    if (name == "dual-oracle") return run_dual_oracle_suite(cfg);
    if (name == "main-theorem") return run_generation_bound_suite(cfg);
    if (name == "corollary") return run_rho_bound_suite(cfg);
    if (name == "minab") return run_min_abelian_normal_suite(cfg);
    if (name == "alpha-factorization") return run_alpha_factorization_suite(cfg);
    if (name == "stima-chain") return run_bound_chain_suite(cfg);
    if (name == "planarity-classification") return run_planarity_suite(cfg);
    if (name == "stirling") return run_stirling_suite(cfg);
    throw Error("unknown verification suite: " + name);
}

inline std::vector<ReportTable> run_suites(const std::string& name,
                                           const VerifyConfig& cfg) {
    std::vector<ReportTable> out;
    if (name == "all") {
        for (auto& s : suite_names()) out.push_back(run_suite(s, cfg));
    } else {
        out.push_back(run_suite(name, cfg));
    }
    return out;
}

}  // namespace gengraph
