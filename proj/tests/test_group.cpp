#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "gengraph/catalog.hpp"
#include "gengraph/expr.hpp"
#include "gengraph/group.hpp"

using namespace gengraph;

namespace {

// brute-force center, independent of FiniteGroup::center
std::vector<int> naive_center(const FiniteGroup& g) {
    std::vector<int> z;
    for (int i = 0; i < g.order(); ++i) {
        bool central = true;
        for (int j = 0; j < g.order(); ++j)
            if (g.mul(i, j) != g.mul(j, i)) central = false;
        if (central) z.push_back(i);
    }
    return z;
}

bool exists_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
    if (a.order() != b.order()) return false;
    std::vector<int> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (tables_isomorphic_under(a, b, perm)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

TEST_CASE("cyclic groups") {
    const auto c1 = make_cyclic(1);
    CHECK(c1.order() == 1);
    CHECK(c1.trivial());
    check_group_invariants(c1);

    const auto c6 = make_cyclic(6);
    CHECK(c6.order() == 6);
    CHECK(c6.element_order(1) == 6);
    CHECK(c6.is_abelian());
    check_group_invariants(c6);

    CHECK_THROWS_AS(make_cyclic(0), InvariantError);
    CHECK_THROWS_AS(make_cyclic(101, 100), BudgetError);
}

TEST_CASE("dihedral groups") {
    const auto d3 = make_dihedral(3);
    CHECK(d3.order() == 6);
    CHECK_FALSE(d3.is_abelian());
    check_group_invariants(d3);
    CHECK(exists_isomorphism(d3, make_symmetric(3)));

    const auto d4 = make_dihedral(4);
    CHECK(d4.order() == 8);
    CHECK(naive_center(d4).size() == 2);  // {1, r^2}
    check_group_invariants(d4);

    const auto d2 = make_dihedral(2);
    CHECK(d2.order() == 4);
    CHECK(d2.is_abelian());
    CHECK(exists_isomorphism(d2, direct_product(make_cyclic(2), make_cyclic(2))));

    CHECK_THROWS_AS(make_dihedral(1), InvariantError);
}

TEST_CASE("quaternion, symmetric, alternating, products") {
    const auto q8 = make_quaternion8();
    CHECK(q8.order() == 8);
    check_group_invariants(q8);
    int involutions = 0;
    for (int i = 1; i < 8; ++i)
        if (q8.element_order(i) == 2) ++involutions;
    CHECK(involutions == 1);  // only -1

    const auto s4 = make_symmetric(4);
    CHECK(s4.order() == 24);
    check_group_invariants(s4);
    CHECK(min_gen_size(s4) == 2);

    const auto a4 = make_alternating(4);
    CHECK(a4.order() == 12);
    check_group_invariants(a4);

    const auto c4xc2 = direct_product(make_cyclic(4), make_cyclic(2));
    CHECK(c4xc2.order() == 8);
    CHECK(c4xc2.is_abelian());
    check_group_invariants(c4xc2);
}

TEST_CASE("closure and generation") {
    const auto s3 = make_symmetric(3);
    CHECK(closure(s3, std::vector<int>{}).order == 1);
    CHECK(closure(s3, std::vector<int>{}).members.test(0));

    // a transposition and a 3-cycle generate S3
    int transposition = -1, three_cycle = -1;
    for (int i = 1; i < 6; ++i) {
        if (s3.element_order(i) == 2 && transposition < 0) transposition = i;
        if (s3.element_order(i) == 3 && three_cycle < 0) three_cycle = i;
    }
    CHECK(closure(s3, std::vector<int>{transposition, three_cycle}).order == 6);
    CHECK(generates(s3, GroupTuple{transposition, three_cycle}));

    // two different 3-cycles only reach A3
    std::vector<int> cycles;
    for (int i = 1; i < 6; ++i)
        if (s3.element_order(i) == 3) cycles.push_back(i);
    REQUIRE(cycles.size() == 2);
    CHECK(closure(s3, cycles).order == 3);
    CHECK_FALSE(generates(s3, GroupTuple{cycles[0], cycles[1]}));

    // <r^2> is the center of D4
    const auto d4 = make_dihedral(4);
    const auto z = closure(d4, std::vector<int>{2});
    CHECK(z.order == 2);
    CHECK(z.members.test(2));

    const auto c2 = make_cyclic(2);
    CHECK(generates(c2, GroupTuple{1}));
    CHECK_FALSE(generates(c2, GroupTuple{0}));
}

TEST_CASE("minimal generating size") {
    CHECK(min_gen_size(make_cyclic(1)) == 0);
    CHECK(min_gen_size(make_cyclic(6)) == 1);
    const auto c2 = make_cyclic(2);
    CHECK(min_gen_size(direct_product(c2, c2)) == 2);
    CHECK(min_gen_size(direct_product(direct_product(c2, c2), c2)) == 3);

    // a minimal tuple has distinct, non-identity entries
    const auto t = min_gen_tuple(direct_product(direct_product(c2, c2), c2));
    CHECK(t.size() == 3);
    for (int x : t) CHECK(x != 0);
    CHECK(generates(direct_product(direct_product(c2, c2), c2), t));
}

TEST_CASE("table file round trip") {
    const auto d4 = make_dihedral(4);
    std::stringstream buf;
    save_table(d4, buf);
    const auto back = load_table(buf, "roundtrip");
    CHECK(back.order() == d4.order());
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) CHECK(back.mul(i, j) == d4.mul(i, j));
    CHECK(back.label(3) == d4.label(3));
}

TEST_CASE("loader renumbers a displaced identity") {
    // C3 relabeled so the identity sits at index 2:
    //   new[i][j] = pi(old[pi(i)][pi(j)]) with old = (i+j) mod 3, pi = (0 2)
    std::stringstream in(
        "order 3\n"
        "name shifted\n"
        "1 2 0\n"
        "2 0 1\n"
        "0 1 2\n");
    const auto g = load_table(in, "shifted");
    CHECK(g.order() == 3);
    for (int j = 0; j < 3; ++j) {
        CHECK(g.mul(0, j) == j);
        CHECK(g.mul(j, 0) == j);
    }
    check_group_invariants(g);
}

TEST_CASE("loader rejects malformed tables") {
    std::stringstream missing("order 2\n0 1\n");
    CHECK_THROWS_AS(load_table(missing, "t"), ParseError);

    std::stringstream not_latin("order 2\n0 0\n1 0\n");
    CHECK_THROWS((load_table(not_latin, "t")));

    std::stringstream out_of_range("order 2\n0 5\n1 0\n");
    try {
        load_table(out_of_range, "t");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 2);
    }

    // a Latin square with two-sided identity that is not associative
    std::stringstream loop5(
        "order 5\n"
        "0 1 2 3 4\n"
        "1 0 3 4 2\n"
        "2 3 4 0 1\n"
        "3 4 1 2 0\n"
        "4 2 0 1 3\n");
    try {
        load_table(loop5, "loop5");
        FAIL("expected InvariantError");
    } catch (const InvariantError& e) {
        CHECK(std::string(e.what()).find("associativity") != std::string::npos);
    }
}

TEST_CASE("closure properties on random seeds") {
    std::mt19937 rng(1234);
    for (const char* expr : {"S3", "D4", "C12", "Q8", "A4"}) {
        const auto g = group_from_text(expr);
        std::uniform_int_distribution<int> pick(0, g.order() - 1);
        for (int rep = 0; rep < 50; ++rep) {
            std::vector<int> s, t;
            const int ks = rng() % 3, kt = ks + rng() % 3;
            for (int i = 0; i < kt; ++i) t.push_back(pick(rng));
            s.assign(t.begin(), t.begin() + ks);
            const auto cs = closure(g, s), ct = closure(g, t);
            CHECK(ct.members.contains_all(cs.members));       // monotone
            CHECK(g.order() % ct.order == 0);                 // Lagrange
            CHECK(closure(g, ct.members).members == ct.members);  // idempotent
        }
    }
}

TEST_CASE("fingerprints separate the small catalog") {
    // non-isomorphic groups of order 8 all get different fingerprints
    const auto c8 = fingerprint(make_cyclic(8));
    const auto c4c2 = fingerprint(direct_product(make_cyclic(4), make_cyclic(2)));
    const auto c2c2c2 = fingerprint(
        direct_product(direct_product(make_cyclic(2), make_cyclic(2)), make_cyclic(2)));
    const auto d4 = fingerprint(make_dihedral(4));
    const auto q8 = fingerprint(make_quaternion8());
    const std::vector<Fingerprint> fps{c8, c4c2, c2c2c2, d4, q8};
    for (std::size_t i = 0; i < fps.size(); ++i)
        for (std::size_t j = i + 1; j < fps.size(); ++j) CHECK(!(fps[i] == fps[j]));

    // and known isomorphic pairs collide
    CHECK(fingerprint(make_dihedral(3)) == fingerprint(make_symmetric(3)));
    CHECK(fingerprint(make_dihedral(6)) ==
          fingerprint(direct_product(make_symmetric(3), make_cyclic(2))));
    CHECK(fingerprint(make_dihedral(2)) ==
          fingerprint(direct_product(make_cyclic(2), make_cyclic(2))));

    // every distinct pair in the bundled catalog is separated by construction;
    // spot-check that the catalog carries the expected names
    const auto cat = build_catalog(16);
    auto has = [&](const std::string& name) {
        for (auto& e : cat)
            if (e.group.name() == name) return true;
        return false;
    };
    CHECK(has("C6"));
    CHECK(has("D3"));      // not "S3": atoms win the naming race
    CHECK(has("C2xC2"));
    CHECK(has("C4xC2"));
    CHECK(has("Q8"));
    CHECK(has("D6"));
    CHECK_FALSE(has("C2xC3"));  // deduplicated into C6
}

TEST_CASE("subgroup reindexing") {
    const auto s3 = make_symmetric(3);
    std::vector<int> cycles;
    for (int i = 1; i < 6; ++i)
        if (s3.element_order(i) == 3) cycles.push_back(i);
    const auto a3 = closure(s3, cycles);
    const auto h = subgroup_as_group(s3, a3, "A3");
    CHECK(h.order() == 3);
    check_group_invariants(h);
    CHECK(exists_isomorphism(h, make_cyclic(3)));
}

TEST_CASE("full invariant suite over the catalog") {
    for (auto& e : build_catalog(24)) check_group_invariants(e.group);
}
