#pragma once

#include <map>
#include <string>
#include <vector>

#include "gengraph/group.hpp"

namespace gengraph {

struct CatalogEntry {
    FiniteGroup group;
    Fingerprint fp;
    int d = 0;  // minimal generating set size
};

/// The bundled group catalog: every group of order <= order_cap reachable as
/// an iterated direct product of the named constructors (cyclic, dihedral,
/// quaternion, symmetric, alternating), deduplicated by fingerprint.  Atoms
/// are generated first so a group keeps its simplest name (C6 rather than
/// C2xC3, D3 rather than S3).  Output is sorted by (order, name).
inline std::vector<CatalogEntry> build_catalog(int order_cap) {
    std::vector<CatalogEntry> out;
    std::map<std::string, std::size_t> by_fp;
    auto push = [&](FiniteGroup g) {
        CatalogEntry e;
        e.fp = fingerprint(g);
        const auto key = e.fp.key();
        if (by_fp.count(key)) return;
        e.d = min_gen_size(g);
        e.group = std::move(g);
        by_fp[key] = out.size();
        out.push_back(std::move(e));
    };

    for (int n = 1; n <= order_cap; ++n) push(make_cyclic(n, order_cap));
    for (int n = 3; 2 * n <= order_cap; ++n) push(make_dihedral(n, order_cap));
    if (order_cap >= 8) push(make_quaternion8());
    static constexpr int fact[] = {1, 1, 2, 6, 24, 120, 720};
    for (int n = 3; n <= 6; ++n) {
        if (fact[n] <= order_cap) push(make_symmetric(n));
        if (n >= 4 && fact[n] / 2 <= order_cap) push(make_alternating(n));
    }

    // close under direct products with atoms (every iterated product of
    // atoms is isomorphic to a left-nested one)
    const std::size_t atom_count = out.size();
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i].group.trivial()) continue;
        for (std::size_t j = 0; j < atom_count; ++j) {
            if (out[j].group.trivial()) continue;
            const long long ord =
                (long long)out[i].group.order() * out[j].group.order();
            if (ord > order_cap) continue;
            push(direct_product(out[i].group, out[j].group, order_cap));
        }
    }

    std::sort(out.begin(), out.end(), [](const CatalogEntry& x, const CatalogEntry& y) {
        if (x.group.order() != y.group.order())
            return x.group.order() < y.group.order();
        return x.group.name() < y.group.name();
    });
    return out;
}

/// Looks up an entry by fingerprint; nullptr when absent.
inline const CatalogEntry* find_by_fingerprint(const std::vector<CatalogEntry>& cat,
                                               const Fingerprint& fp) {
    for (auto& e : cat)
        if (e.fp == fp) return &e;
    return nullptr;
}

}  // namespace gengraph
