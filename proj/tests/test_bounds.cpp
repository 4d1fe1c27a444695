#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gengraph/bounds.hpp"
#include "gengraph/expr.hpp"
#include "gengraph/intervals.hpp"

using namespace gengraph;

TEST_CASE("proposition bounds on classic graphs") {
    // K4: v=4, e=6
    CHECK(genus_lower(4, 6) == Rational(0));
    CHECK(thickness_lower(4, 6) == Rational(1));

    // K5: v=5, e=10 -> genus bound 1/6, ceiling 1: detects non-planarity
    const auto g5 = genus_lower(5, 10);
    CHECK(g5 == Rational(1, 6));
    CHECK(ceil_rational(g5) == 1);

    // sparse graph: crossing bound is negative, clamp to zero
    const auto cr = crossing_lower(10, 5);
    CHECK(cr < 0);
    CHECK(clamp0(cr) == Rational(0));
    CHECK(cr == Rational(125, 2900) - Rational(350, 29));

    CHECK_THROWS_AS(thickness_lower(2, 1), InvariantError);
}

TEST_CASE("radical sign determination") {
    // |G| = 2304 = 48^2 sits exactly at the genus zero-crossing
    const auto rhs = closed_form_rhs(2304, 1, 2);
    CHECK(rhs.genus.sign() == 0);

    const auto small = closed_form_rhs(2, 1, 2);
    CHECK(small.genus.sign() < 0);  // vacuous for tiny groups
    CHECK(small.thickness.sign() > 0);

    const auto th6 = closed_form_rhs(6, 1, 1).thickness;
    CHECK(th6.approx() == Catch::Approx(std::sqrt(6.0) / 48).epsilon(1e-12));
}

TEST_CASE("radical comparator agrees with high-precision evaluation") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 20), rad(0, 40);
    int checked = 0;
    for (int rep = 0; rep < 1000; ++rep) {
        const Rational q1(num(rng), den(rng));
        const Rational q2(num(rng), den(rng));
        const unsigned long n = (unsigned long)rad(rng);
        const Radical r{q1, q2, n};
        const Interval val = Interval::of_rational(q1) +
                             Interval::of_rational(q2) * Interval::of_long(long(n)).sqrt();
        if (val.contains_zero()) {
            // exact-zero or below interval resolution: only sanity-check
            if (r.sign() == 0) ++checked;
            continue;
        }
        CHECK(r.sign() == (val.certainly_positive() ? 1 : -1));
        ++checked;
    }
    CHECK(checked > 900);

    // constructed exact zeros
    CHECK(Radical{Rational(-6), Rational(2), 9}.sign() == 0);
    CHECK(Radical{Rational(6), Rational(-2), 9}.sign() == 0);
    CHECK(Radical{Rational(0), Rational(0), 7}.sign() == 0);
}

TEST_CASE("bound monotonicity in the edge count") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> vs(3, 60), es(0, 200);
    for (int rep = 0; rep < 300; ++rep) {
        const BigInt v = vs(rng);
        BigInt e1 = es(rng), e2 = es(rng);
        if (e1 > e2) std::swap(e1, e2);
        CHECK(genus_lower(v, e2) >= genus_lower(v, e1));
        CHECK(thickness_lower(v, e2) >= thickness_lower(v, e1));
        CHECK(crossing_lower(v, e2) >= crossing_lower(v, e1));
        // Euler consistency: within the planar edge budget the bound is vacuous
        if (e1 <= 3 * v - 6) CHECK(genus_lower(v, e1) <= 0);
    }
}

TEST_CASE("bound report for the generating graph of C5") {
    const auto r = bound_report(make_cyclic(5), 1, 1);
    CHECK(r.nu == 5);
    CHECK(r.eta == 10);
    CHECK(r.loop_count == 4);
    CHECK(r.genus_lb == Rational(1, 6));
    CHECK(r.genus_lb_ceiled == 1);
    CHECK(r.thickness_defined);
    CHECK(r.thickness_lb == Rational(10, 9));
    CHECK(r.crossing_lb == Rational(1000, 725) - Rational(175, 29));
    CHECK(r.crossing_lb_clamped == Rational(0));
}

TEST_CASE("full inequality chains") {
    // (S3, 1, 1): phi = 18, nu = 6, eta = 9
    const auto s3 = make_symmetric(3);
    const auto r1 = verify_bound_chain(s3, 1, 1);
    CHECK(r1.phi_d == 18);
    CHECK(r1.nu == 6);
    CHECK(r1.eta == 9);
    CHECK(r1.ok());

    // (C2, 1, 1): nu = 2 < 3, thickness proposition link not applicable
    const auto r2 = verify_bound_chain(make_cyclic(2), 1, 1);
    CHECK(r2.ok());
    bool skipped_thickness = false;
    for (auto& l : r2.links)
        if (!l.checked) skipped_thickness = true;
    CHECK(skipped_thickness);

    // (C2, 1, 2) is the tightest genus middle link
    CHECK(verify_bound_chain(make_cyclic(2), 1, 2).ok());

    // (C2xC2, 1, 2): bipartite case
    CHECK(verify_bound_chain(group_from_text("C2xC2"), 1, 2).ok());

    CHECK_THROWS_AS(verify_bound_chain(make_cyclic(1), 1, 1), InvariantError);
}

TEST_CASE("chain over a small catalog slice") {
    for (const char* expr : {"C2", "C3", "C4", "C2xC2", "S3", "D4", "Q8", "C6"}) {
        const auto g = group_from_text(expr);
        const int d = min_gen_size(g);
        for (int a = 1; a <= 2; ++a)
            for (int b = a; a + b <= 4; ++b) {
                if (a + b < d) continue;
                const auto r = verify_bound_chain(g, a, b);
                INFO(expr << " a=" << a << " b=" << b);
                CHECK(r.ok());
            }
    }
}
