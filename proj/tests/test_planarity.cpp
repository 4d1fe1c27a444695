#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gengraph/classification.hpp"
#include "gengraph/expr.hpp"
#include "gengraph/planarity.hpp"
#include "gengraph/verify.hpp"

using namespace gengraph;

namespace {

SimpleGraph complete(int n) {
    SimpleGraph g;
    g.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
    return g;
}

SimpleGraph complete_bipartite(int m, int n) {
    SimpleGraph g;
    g.n = m + n;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) g.edges.emplace_back(i, m + j);
    return g;
}

/// Subdivide the idx-th edge by a fresh vertex.
SimpleGraph subdivide_edge(SimpleGraph g, std::size_t idx) {
    const auto [u, v] = g.edges[idx];
    const int w = g.n++;
    g.edges.erase(g.edges.begin() + idx);
    g.edges.emplace_back(u, w);
    g.edges.emplace_back(w, v);
    return g;
}

SimpleGraph random_graph(std::mt19937& rng) {
    SimpleGraph g;
    g.n = 1 + int(rng() % 7);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const double p = 0.15 + 0.7 * coin(rng);
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (coin(rng) < p) g.edges.emplace_back(i, j);
    return g;
}

}  // namespace

TEST_CASE("classic verdicts") {
    const auto k4 = is_planar(complete(4));
    CHECK(k4.planar);
    CHECK(k4.method == PlanarityMethod::FullTest);

    const auto k5 = is_planar(complete(5));
    CHECK_FALSE(k5.planar);
    CHECK(k5.method == PlanarityMethod::EulerPruned);  // 10 > 3*5-6
    REQUIRE(k5.witness.has_value());
    CHECK(k5.witness->kind == KuratowskiWitness::Kind::K5);
    CHECK(validate_witness(complete(5), *k5.witness));

    const auto k33 = is_planar(complete_bipartite(3, 3));
    CHECK_FALSE(k33.planar);
    CHECK(k33.method == PlanarityMethod::BipartiteBoundPruned);  // 9 > 2*6-4
    REQUIRE(k33.witness.has_value());
    CHECK(k33.witness->kind == KuratowskiWitness::Kind::K33);
    CHECK(validate_witness(complete_bipartite(3, 3), *k33.witness));

    // subdividing keeps K33 non-planar
    const auto sub = subdivide_edge(complete_bipartite(3, 3), 0);
    const auto vs = is_planar(sub);
    CHECK_FALSE(vs.planar);
    REQUIRE(vs.witness.has_value());
    CHECK(validate_witness(sub, *vs.witness));

    // empty and tiny graphs
    CHECK(is_planar(SimpleGraph{0, {}}).planar);
    CHECK(is_planar(SimpleGraph{1, {}}).planar);
    CHECK(is_planar(SimpleGraph{2, {{0, 1}}}).planar);
}

TEST_CASE("corrupted witnesses fail validation") {
    auto k5 = is_planar(complete(5));
    REQUIRE(k5.witness.has_value());
    auto w = *k5.witness;
    w.paths.pop_back();
    CHECK_FALSE(validate_witness(complete(5), w));
    auto w2 = *k5.witness;
    w2.branch[0] = w2.branch[1];
    CHECK_FALSE(validate_witness(complete(5), w2));
    // witness against a graph missing those edges
    CHECK_FALSE(validate_witness(complete_bipartite(2, 3), *k5.witness));
}

TEST_CASE("kuratowski oracle on classics") {
    CHECK_FALSE(kuratowski_oracle_nonplanar(complete(4)));
    CHECK(kuratowski_oracle_nonplanar(complete(5)));
    CHECK(kuratowski_oracle_nonplanar(complete_bipartite(3, 3)));
    CHECK(kuratowski_oracle_nonplanar(subdivide_edge(complete_bipartite(3, 3), 0)));
    CHECK_FALSE(kuratowski_oracle_nonplanar(complete_bipartite(2, 6)));

    // Petersen graph: non-planar, triangle-free, a classic stress case
    SimpleGraph petersen;
    petersen.n = 10;
    for (int i = 0; i < 5; ++i) {
        petersen.edges.emplace_back(i, (i + 1) % 5);        // outer cycle
        petersen.edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner star
        petersen.edges.emplace_back(i, 5 + i);              // spokes
    }
    CHECK(kuratowski_oracle_nonplanar(petersen));
    CHECK_FALSE(is_planar(petersen).planar);

    CHECK_THROWS_AS(kuratowski_oracle_nonplanar(complete(13)), BudgetError);
}

TEST_CASE("engine and oracle agree on random graphs") {
    std::mt19937 rng(4242);
    for (int rep = 0; rep < 2000; ++rep) {
        const auto g = random_graph(rng);
        const auto verdict = is_planar(g);
        INFO("rep " << rep << ": n=" << g.n << " e=" << g.edges.size());
        CHECK(verdict.planar == !kuratowski_oracle_nonplanar(g));
        if (verdict.witness) CHECK(validate_witness(g, *verdict.witness));
    }
}

TEST_CASE("generating graph of C5 is recognized as K5") {
    const auto graph = simple_graph_of(build_gamma(make_cyclic(5), 1, 1));
    const auto verdict = is_planar(graph);
    CHECK_FALSE(verdict.planar);
    REQUIRE(verdict.witness.has_value());
    CHECK(verdict.witness->kind == KuratowskiWitness::Kind::K5);
    CHECK(kuratowski_oracle_nonplanar(graph));
}

TEST_CASE("expected planarity classification table") {
    CHECK(expected_planarity(make_quaternion8(), 1, 1));
    CHECK(expected_planarity(make_cyclic(2), 1, 7));
    CHECK(expected_planarity(make_cyclic(2), 2, 2));
    CHECK_FALSE(expected_planarity(make_cyclic(2), 2, 3));
    CHECK_FALSE(expected_planarity(make_cyclic(5), 1, 1));
    CHECK(expected_planarity(make_cyclic(6), 1, 1));
    CHECK_FALSE(expected_planarity(make_cyclic(6), 1, 2));
    CHECK(expected_planarity(make_dihedral(6), 1, 1));
    CHECK_FALSE(expected_planarity(make_symmetric(4), 1, 1));
    CHECK_FALSE(expected_planarity(make_cyclic(7), 1, 1));
    CHECK_THROWS_AS(expected_planarity(make_cyclic(1), 1, 1), InvariantError);
    CHECK_THROWS_AS(expected_planarity(make_cyclic(6), 2, 1), InvariantError);
}

TEST_CASE("explicit K33 witnesses follow the constructions") {
    // cyclic, a = 2, |G| > 2: the exact six tuples
    const auto c4 = make_cyclic(4);
    const auto w = k33_witness(c4, 2, 2);
    REQUIRE(w.applicable);
    CHECK(w.alphas[0] == GroupTuple{0, 1});
    CHECK(w.alphas[1] == GroupTuple{1, 0});
    CHECK(w.alphas[2] == GroupTuple{1, 1});
    CHECK(w.betas[0] == GroupTuple{0, 2});
    CHECK(w.betas[1] == GroupTuple{2, 0});
    CHECK(w.betas[2] == GroupTuple{2, 2});
    CHECK(w.ok());

    // cyclic, a = 2, |G| = 2, b >= 3
    const auto c2 = make_cyclic(2);
    const auto w2 = k33_witness(c2, 2, 3);
    REQUIRE(w2.applicable);
    CHECK(w2.betas[0] == GroupTuple{0, 1, 1});
    CHECK(w2.betas[1] == GroupTuple{1, 0, 1});
    CHECK(w2.betas[2] == GroupTuple{1, 1, 1});
    CHECK(w2.ok());

    // non-cyclic, a >= 2 (C2xC2 at (2,2): a+b > d, constant-padded betas)
    const auto v4 = group_from_text("C2xC2");
    const auto w3 = k33_witness(v4, 2, 2);
    REQUIRE(w3.applicable);
    const auto gens = min_gen_tuple(v4);
    CHECK(w3.alphas[0] == GroupTuple{gens[0], gens[1]});
    CHECK(w3.alphas[1] == GroupTuple{gens[0], v4.mul(gens[0], gens[1])});
    CHECK(w3.alphas[2] == GroupTuple{v4.mul(gens[0], gens[1]), gens[1]});
    CHECK(w3.ok());

    // non-cyclic with a + b = d: C2^4 at (2,2)
    const auto g16 = group_from_text("C2xC2xC2xC2");
    const auto w4 = k33_witness(g16, 2, 2);
    REQUIRE(w4.applicable);
    CHECK(w4.ok());

    // cyclic a >= 3
    const auto w5 = k33_witness(make_cyclic(3), 3, 3);
    REQUIRE(w5.applicable);
    CHECK(w5.ok());

    // not applicable cases are signalled distinctly
    CHECK_FALSE(k33_witness(make_cyclic(6), 1, 2).applicable);
    CHECK_FALSE(k33_witness(c2, 2, 2).applicable);  // the planar K4 cell
}

TEST_CASE("bipartite edge-count arguments") {
    // cyclic with |G| > 2
    const auto r1 = bipartite_argument_check(make_cyclic(6), 2);
    CHECK(r1.applies);
    CHECK(r1.subgraph_v == 9);
    CHECK(r1.subgraph_e == 18);
    CHECK(r1.ok());

    // non-cyclic, a + b > d
    const auto r2 = bipartite_argument_check(group_from_text("C2xC2"), 3);
    CHECK(r2.applies);
    CHECK(r2.subgraph_e == 3 * (r2.subgraph_v - 3));
    CHECK(r2.ok());

    // non-cyclic, a + b = d: C2^3 with b = 2
    const auto r3 = bipartite_argument_check(group_from_text("C2xC2xC2"), 2);
    CHECK(r3.applies);
    CHECK(r3.subgraph_v == 3 + 6);  // phi_{C2xC2}(2) = 6
    CHECK(r3.ok());

    // C2 stays planar for a = 1: no argument
    CHECK_FALSE(bipartite_argument_check(make_cyclic(2), 4).applies);
}

TEST_CASE("triple witness lemma") {
    const auto r1 = lemma_tre_check(group_from_text("C2xC2"), 2);
    CHECK(r1.phi_b == 6);
    CHECK(r1.ok());
    CHECK(lemma_tre_check(make_symmetric(3), 2).phi_b == 18);
    CHECK(lemma_tre_check(make_symmetric(3), 2).ok());
    CHECK(lemma_tre_check(make_quaternion8(), 3).ok());
    CHECK_THROWS_AS(lemma_tre_check(make_cyclic(5), 1), InvariantError);
}

TEST_CASE("classification cells") {
    const auto cell1 = planarity_cell_check(make_cyclic(2), 2, 2);
    CHECK(cell1.expected);
    CHECK(cell1.verdict);
    CHECK(cell1.ok());

    const auto cell2 = planarity_cell_check(make_cyclic(6), 1, 1);
    CHECK(cell2.expected);
    CHECK(cell2.verdict);
    CHECK(cell2.ok());

    const auto cell3 = planarity_cell_check(make_cyclic(6), 1, 2);
    CHECK_FALSE(cell3.expected);
    CHECK_FALSE(cell3.verdict);
    CHECK(cell3.ok());

    const auto cell4 = planarity_cell_check(make_cyclic(5), 1, 1);
    CHECK_FALSE(cell4.expected);
    CHECK_FALSE(cell4.verdict);
    CHECK(cell4.ok());
}

TEST_CASE("classification suite smoke run") {
    VerifyConfig cfg;
    cfg.order_cap = 8;
    cfg.ab_cap = 4;
    const auto t = run_planarity_suite(cfg);
    CHECK(t.failures == 0);
    CHECK(t.rows.size() > 20);
}

TEST_CASE("loop stripping does not change the planar verdict") {
    // Gamma_{2,2}(C2) carries 3 loops; the simple part is K4 and planar
    const auto g = build_gamma(make_cyclic(2), 2, 2);
    CHECK(g.loop_count() == 3);
    CHECK(is_planar(simple_graph_of(g)).planar);
}
