// Builds a few small groups, prints their generating statistics and the
// topological lower bounds of their generating graphs.

#include <algorithm>
#include <iostream>

#include "gengraph/gengraph.hpp"

int main() {
    using namespace gengraph;
    for (const char* expr : {"C6", "D4", "Q8", "S4"}) {
        const auto g = group_from_text(expr);
        const int d = min_gen_size(g);
        const auto s = gen_stats(g, d);
        std::cout << g.name() << ": |G|=" << g.order() << " d=" << d
                  << " phi=" << s.phi << " alpha=" << to_fraction_string(s.alpha)
                  << "\n";
        const int b = std::max(1, d - 1);
        const auto r = bound_report(g, 1, b);
        std::cout << "  Gamma_{1," << r.b << "}: nu=" << r.nu.str()
                  << " eta=" << r.eta
                  << " genus_lb=" << to_fraction_string(r.genus_lb)
                  << " (ceil " << r.genus_lb_ceiled.str() << ")\n";
        const auto graph = simple_graph_of(build_gamma(g, 1, r.b));
        const auto verdict = is_planar(graph);
        std::cout << "  planar: " << (verdict.planar ? "yes" : "no") << " ("
                  << method_name(verdict.method) << ")\n";
    }
    return 0;
}
