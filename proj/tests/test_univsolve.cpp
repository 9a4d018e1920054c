#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lur/univsolve.hpp"

#include <random>

using namespace lur;

namespace {

UniPoly upoly(std::vector<long> cs) {
    std::vector<Int> v(cs.begin(), cs.end());
    return UniPoly(std::move(v));
}

// Sturm-chain root counter, independent oracle (rational arithmetic)
int sturm_count(const UniPoly& f, const Rat& a, const Rat& b) {
    auto dec = squarefree_decompose(f);
    UniPoly F = dec.squarefree_part();
    std::vector<QPoly> chain;
    chain.push_back(QPoly::from_int(F));
    chain.push_back(QPoly::from_int(F.derivative()));
    while (!chain.back().is_zero()) {
        const QPoly& s0 = chain[chain.size() - 2];
        const QPoly& s1 = chain.back();
        // remainder of s0 by s1
        QPoly r = s0;
        while (!r.is_zero() && r.degree() >= s1.degree()) {
            int k = r.degree() - s1.degree();
            Rat c = r.coeff(r.degree()) / s1.coeff(s1.degree());
            std::vector<Rat> t(k + s1.degree() + 1, Rat(0));
            for (int i = 0; i <= s1.degree(); ++i) t[i + k] = c * s1.coeff(i);
            r = r - QPoly(t);
        }
        chain.push_back(-r);
    }
    chain.pop_back();
    auto vars_at = [&](const Rat& x) {
        int v = 0, last = 0;
        for (const auto& p : chain) {
            int s = p.sign_at(x);
            if (s == 0) continue;
            if (last != 0 && s != last) ++v;
            last = s;
        }
        return v;
    };
    int count = vars_at(a) - vars_at(b);  // roots in (a, b]
    if (F.sign_at(a) == 0) ++count;       // closed on the left
    return count;
}

}  // namespace

TEST_CASE("golden: R1 isolating intervals at precision 2^-10") {
    UniPoly R1 = upoly({-7, 4, 4}) * upoly({-7, 4, 4}) * upoly({-2, 0, 1}) * upoly({-2, 0, 1});
    auto roots = isolate(R1, make_rat(1, 1024));
    REQUIRE(roots.size() == 4);
    CHECK(roots[0].interval == IntervalQ(make_rat(-1961, 1024), make_rat(-245, 128)));
    CHECK(roots[1].interval == IntervalQ(make_rat(-1449, 1024), make_rat(-181, 128)));
    CHECK(roots[2].interval == IntervalQ(make_rat(117, 128), make_rat(937, 1024)));
    CHECK(roots[3].interval == IntervalQ(make_rat(181, 128), make_rat(1449, 1024)));
    for (const auto& r : roots) CHECK(r.multiplicity == 2);
}

TEST_CASE("isolate basics") {
    auto roots = isolate(upoly({-2, 0, 1}), std::nullopt);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].interval.hi < 0);
    CHECK(roots[1].interval.lo > 0);
    for (const auto& r : roots) {
        CHECK(sign_at(r.defining_factor, r.interval.lo) * sign_at(r.defining_factor, r.interval.hi) < 0);
        CHECK(r.interval.width() <= make_rat(1, 1024));
    }
    CHECK(isolate(upoly({7})).empty());
    CHECK_THROWS_AS(isolate(UniPoly()), Error);

    // rational roots as point intervals
    auto rr = isolate(upoly({0, 1}));
    REQUIRE(rr.size() == 1);
    CHECK(rr[0].interval == IntervalQ::point(make_rat(0)));
    auto rr2 = isolate(upoly({-1, 2}) * upoly({-3, 1}));  // roots 1/2 and 3
    REQUIRE(rr2.size() == 2);
    CHECK(rr2[0].interval == IntervalQ::point(make_rat(1, 2)));
    CHECK(rr2[1].interval == IntervalQ::point(make_rat(3)));

    // no real roots
    CHECK(isolate(upoly({1, 0, 1})).empty());
}

TEST_CASE("isolate recovers constructed roots and powers") {
    std::mt19937_64 rng(1234);
    for (int iter = 0; iter < 100; ++iter) {
        int n = 2 + static_cast<int>(rng() % 4);  // 2..5 distinct linear factors
        std::vector<std::pair<Rat, int>> expect;
        UniPoly f = UniPoly::constant(1 + static_cast<long>(rng() % 3));
        for (int i = 0; i < n; ++i) {
            long num;
            long den = 1 + static_cast<long>(rng() % 4);
            bool fresh = true;
            Rat root;
            do {
                num = static_cast<long>(rng() % 39) - 19;
                root = make_rat(num, den);
                fresh = true;
                for (auto& [r, p] : expect)
                    if (r == root) fresh = false;
            } while (!fresh);
            int pw = 1 + static_cast<int>(rng() % 3);
            expect.push_back({root, pw});
            UniPoly lin = UniPoly({std::vector<Int>{Int(-num), Int(den)}});
            for (int k = 0; k < pw; ++k) f = f * lin;
        }
        std::sort(expect.begin(), expect.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        auto roots = isolate(f);
        REQUIRE(roots.size() == expect.size());
        for (size_t i = 0; i < roots.size(); ++i) {
            CHECK(roots[i].interval.contains(expect[i].first));
            CHECK(roots[i].multiplicity == expect[i].second);
        }
        for (size_t i = 0; i + 1 < roots.size(); ++i)
            CHECK(!roots[i].interval.intersects(roots[i + 1].interval));
    }
}

TEST_CASE("isolate agrees with Sturm on random polynomials") {
    std::mt19937_64 rng(555);
    for (int iter = 0; iter < 60; ++iter) {
        int deg = 2 + static_cast<int>(rng() % 6);
        std::vector<Int> c(deg + 1);
        for (auto& x : c) x = static_cast<long>(rng() % 41) - 20;
        c[deg] = 1 + static_cast<long>(rng() % 10);
        UniPoly f(std::move(c));
        auto roots = isolate(f);
        Rat B = root_bound(f);
        CHECK(static_cast<int>(roots.size()) == sturm_count(f, -B, B));
        for (const auto& r : roots) {
            CHECK(r.interval.lo >= -B);
            CHECK(r.interval.hi <= B);
        }
    }
}

TEST_CASE("refine") {
    auto roots = isolate(upoly({-2, 0, 1}));
    UniRoot r = roots[1];  // sqrt(2)
    UniRoot fine = refine(r, make_rat(1, 65536));
    CHECK(fine.interval.width() <= make_rat(1, 65536));
    CHECK(r.interval.contains(fine.interval));
    CHECK(sign_at(fine.defining_factor, fine.interval.lo) *
              sign_at(fine.defining_factor, fine.interval.hi) <
          0);
    // target wider than current: unchanged
    CHECK(refine(fine, make_rat(1)).interval == fine.interval);
    // point interval: unchanged
    UniRoot pt;
    pt.interval = IntervalQ::point(make_rat(5));
    pt.defining_factor = upoly({-5, 1});
    CHECK(refine(pt, make_rat(1, 1024)).interval == pt.interval);
}

TEST_CASE("sign_at") {
    UniPoly f = upoly({-2, 0, 1});
    CHECK(sign_at(f, make_rat(1)) == -1);
    CHECK(sign_at(f, make_rat(3, 2)) == 1);
    CHECK(sign_at(upoly({-1, 2}), make_rat(1, 2)) == 0);
}

TEST_CASE("count_roots_in") {
    UniPoly f = upoly({-2, 0, 1});
    CHECK(count_roots_in(f, IntervalQ(make_rat(0), make_rat(2))) == 1);
    CHECK(count_roots_in(f, IntervalQ(make_rat(-2), make_rat(2))) == 2);
    UniPoly g = upoly({-1, 1}) * upoly({-1, 1});
    CHECK(count_roots_in(g, IntervalQ(make_rat(0), make_rat(2))) == 1);
    // closed endpoints count
    CHECK(count_roots_in(upoly({-1, 1}), IntervalQ(make_rat(1), make_rat(5))) == 1);
    CHECK(count_roots_in(upoly({-1, 1}), IntervalQ(make_rat(0), make_rat(1))) == 1);
    CHECK(count_roots_in(upoly({-1, 1}), IntervalQ::point(make_rat(1))) == 1);
    CHECK(count_roots_in(upoly({-1, 1}), IntervalQ(make_rat(2), make_rat(5))) == 0);
}
