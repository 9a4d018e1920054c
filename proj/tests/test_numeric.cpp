#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lur/numeric.hpp"

#include <random>

using namespace lur;

TEST_CASE("interval arithmetic endpoint cases") {
    IntervalQ a(make_rat(1), make_rat(2)), b(make_rat(3), make_rat(4));
    CHECK(iv_add(a, b) == IntervalQ(make_rat(4), make_rat(6)));
    IntervalQ c(make_rat(-1), make_rat(2));
    CHECK(iv_mul(c, b) == IntervalQ(make_rat(-4), make_rat(8)));
    CHECK(iv_scale(b, make_rat(-1)) == IntervalQ(make_rat(-4), make_rat(-3)));
    CHECK(iv_sub(a, b) == IntervalQ(make_rat(-3), make_rat(-1)));
}

TEST_CASE("interval arithmetic soundness on random samples") {
    std::mt19937_64 rng(42);
    auto rnd_rat = [&] {
        long n = static_cast<long>(rng() % 2001) - 1000;
        long d = 1 + static_cast<long>(rng() % 50);
        return make_rat(n, d);
    };
    for (int iter = 0; iter < 200; ++iter) {
        Rat a1 = rnd_rat(), a2 = rnd_rat(), b1 = rnd_rat(), b2 = rnd_rat();
        IntervalQ A(std::min(a1, a2), std::max(a1, a2));
        IntervalQ B(std::min(b1, b2), std::max(b1, b2));
        // sample points
        for (int k = 0; k < 5; ++k) {
            Rat t = make_rat(static_cast<long>(rng() % 101), 100);
            Rat x = A.lo + (A.hi - A.lo) * t;
            Rat y = B.lo + (B.hi - B.lo) * t;
            CHECK(iv_add(A, B).contains(x + y));
            CHECK(iv_sub(A, B).contains(x - y));
            CHECK(iv_mul(A, B).contains(x * y));
        }
        // point intervals degenerate to exact arithmetic
        IntervalQ pa = IntervalQ::point(a1), pb = IntervalQ::point(b1);
        CHECK(iv_mul(pa, pb) == IntervalQ::point(a1 * b1));
        CHECK(iv_add(pa, pb) == IntervalQ::point(a1 + b1));
    }
}

TEST_CASE("bitsize convention") {
    CHECK(bitsize(Int(0)) == 1);
    CHECK(bitsize(Int(1)) == 2);
    CHECK(bitsize(make_rat(-7, 3)) == 4);
    // monotone under integer magnitude
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        long m = static_cast<long>(rng() % 100000);
        long n = m + 1 + static_cast<long>(rng() % 1000);
        CHECK(bitsize(Int(m)) <= bitsize(Int(n)));
    }
}

TEST_CASE("rational string round trip") {
    CHECK(rat_to_string(make_rat(3, 1)) == "3");
    CHECK(rat_to_string(make_rat(-72905, 8388608)) == "-72905/8388608");
    CHECK(*rat_from_string("-72905/8388608") == make_rat(-72905, 8388608));
    CHECK(!rat_from_string("x").has_value());
}

TEST_CASE("interval set union and normalization") {
    IntervalSet a, b;
    a.insert(ExtInterval::closed(make_rat(0), make_rat(1)));
    b.insert(ExtInterval::closed(make_rat(1), make_rat(2)));
    IntervalSet u = intervalset_union(a, b);
    REQUIRE(u.members().size() == 1);
    CHECK(u.members()[0] == ExtInterval::closed(make_rat(0), make_rat(2)));

    IntervalSet c, d;
    c.insert(ExtInterval::lower_ray(make_rat(-5, 6), false));
    d.insert(ExtInterval::upper_ray(make_rat(-3, 8), false));
    IntervalSet u2 = intervalset_union(c, d);
    REQUIRE(u2.members().size() == 2);

    IntervalSet e;
    IntervalSet u3 = intervalset_union(e, b);
    CHECK(u3 == b);

    // open endpoints: (0,1) u (1,2) must not merge; (0,1] u (1,2) must
    ExtInterval o1 = ExtInterval::closed(make_rat(0), make_rat(1));
    o1.lo_open = o1.hi_open = true;
    ExtInterval o2 = ExtInterval::closed(make_rat(1), make_rat(2));
    o2.lo_open = o2.hi_open = true;
    IntervalSet s1;
    s1.insert(o1);
    s1.insert(o2);
    CHECK(s1.members().size() == 2);
    CHECK(!s1.contains(make_rat(1)));
    ExtInterval o3 = o1;
    o3.hi_open = false;
    IntervalSet s2;
    s2.insert(o3);
    s2.insert(o2);
    CHECK(s2.members().size() == 1);
    CHECK(s2.contains(make_rat(1)));
}

TEST_CASE("interval set membership matches union of parts (random probes)") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 50; ++iter) {
        IntervalSet A, B;
        std::vector<ExtInterval> parts;
        for (int i = 0; i < 4; ++i) {
            long lo = static_cast<long>(rng() % 200) - 100;
            long w = static_cast<long>(rng() % 40);
            auto iv = ExtInterval::closed(make_rat(lo, 7), make_rat(lo + w, 7));
            parts.push_back(iv);
            if (i % 2) A.insert(iv); else B.insert(iv);
        }
        IntervalSet U = intervalset_union(A, B);
        CHECK(U == intervalset_union(B, A));
        CHECK(intervalset_union(U, U) == U);
        for (int k = 0; k < 40; ++k) {
            Rat probe = make_rat(static_cast<long>(rng() % 3000) - 1500, 7 * 3);
            bool expect = A.contains(probe) || B.contains(probe);
            CHECK(U.contains(probe) == expect);
        }
    }
}
