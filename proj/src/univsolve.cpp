#include "lur/univsolve.hpp"

#include <algorithm>

namespace lur {

namespace {

// p(x + a), synthetic Horner
std::vector<Int> taylor_shift(std::vector<Int> c, const Int& a) {
    int d = static_cast<int>(c.size()) - 1;
    for (int i = 0; i < d; ++i)
        for (int j = d - 1; j >= i; --j) c[j] += a * c[j + 1];
    return c;
}

// 2^deg * p(x/2)
std::vector<Int> half_scale(std::vector<Int> c) {
    int d = static_cast<int>(c.size()) - 1;
    for (int i = 0; i < static_cast<int>(c.size()); ++i) c[i] <<= static_cast<unsigned>(d - i);
    return c;
}

int sign_variations(const std::vector<Int>& c) {
    int v = 0, last = 0;
    for (const auto& x : c) {
        int s = sign(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// Descartes bound for the number of roots in the open unit interval:
// variations of (1+t)^d P(1/(1+t)) = shift1(reverse(P))
int descartes_01(const std::vector<Int>& p) {
    std::vector<Int> r(p.rbegin(), p.rend());
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (r.empty()) return 0;
    return sign_variations(taylor_shift(std::move(r), Int(1)));
}

struct Cell {
    Rat lo;
    Rat width;                // power of two
    std::vector<Int> poly;    // F(lo + width * t), integer
};

// roots of F in the open interval of `cell`, appended to out (cells or points)
void vca(const UniPoly& F, Cell cell, std::vector<IntervalQ>& out) {
    int v = descartes_01(cell.poly);
    if (v == 0) return;
    if (v == 1) {
        out.push_back(IntervalQ(cell.lo, cell.lo + cell.width));
        return;
    }
    Rat mid = cell.lo + cell.width / 2;
    if (F.sign_at(mid) == 0) out.push_back(IntervalQ::point(mid));
    Cell left{cell.lo, cell.width / 2, half_scale(cell.poly)};
    Cell right{mid, cell.width / 2, taylor_shift(left.poly, Int(1))};
    vca(F, std::move(left), out);
    vca(F, std::move(right), out);
}

Rat pow2_at_least(const Rat& v) {
    Rat b(1);
    while (b < v) b *= 2;
    return b;
}

// Shrink a cell holding exactly one root of squarefree F strictly inside to
// width <= target on the halving grid, detecting exact dyadic roots. An
// endpoint may itself be a (different) root of F; the sign anchor then comes
// from the derivative (the sign of F just inside a simple root at the left
// endpoint is sign(F')).
IntervalQ refine_cell(const UniPoly& F, IntervalQ iv, const Rat& target) {
    if (iv.is_point()) return iv;
    int sa = F.sign_at(iv.lo);
    if (sa == 0) sa = F.derivative().sign_at(iv.lo);
    while (iv.width() > target) {
        Rat m = iv.mid();
        int sm = F.sign_at(m);
        if (sm == 0) return IntervalQ::point(m);
        if (sm != sa)
            iv = IntervalQ(iv.lo, m);
        else {
            iv = IntervalQ(m, iv.hi);
            sa = sm;
        }
    }
    return iv;
}

}  // namespace

std::vector<IntervalQ> isolate_squarefree(const UniPoly& F, const Rat& max_width) {
    if (F.degree() < 1) return {};
    std::vector<IntervalQ> cells;
    Rat bound = pow2_at_least(root_bound(F));
    // root cell (-B, B): P(t) = F(-B + 2B t)
    Cell root;
    root.lo = -bound;
    root.width = 2 * bound;
    {
        std::vector<Int> c(F.coeffs());
        Int B = bound.get_num();  // bound is integral power of two
        c = taylor_shift(std::move(c), -B);
        Int twoB = 2 * B;
        Int pw = 1;
        for (auto& x : c) {
            x *= pw;
            pw *= twoB;
        }
        root.poly = std::move(c);
    }
    vca(F, std::move(root), cells);

    for (auto& iv : cells)
        if (!iv.is_point()) iv = refine_cell(F, iv, max_width);
    std::sort(cells.begin(), cells.end(), [](const IntervalQ& a, const IntervalQ& b) { return a.lo < b.lo; });
    return cells;
}

std::vector<UniRoot> isolate(const UniPoly& f, const std::optional<Rat>& max_width) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "isolate of the zero polynomial");
    Rat width = max_width.value_or(make_rat(1, 1024));
    if (sign(width) <= 0) throw Error(ErrorCode::InvalidArgument, "isolate: nonpositive width");
    if (f.degree() == 0) return {};

    auto dec = squarefree_decompose(f);
    std::vector<UniRoot> roots;
    for (const auto& [fac, pw] : dec.factors) {
        for (const auto& iv : isolate_squarefree(fac, width)) {
            UniRoot r;
            r.interval = iv;
            r.multiplicity = pw;
            r.defining_factor = fac;
            roots.push_back(std::move(r));
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const UniRoot& a, const UniRoot& b) { return a.interval.lo < b.interval.lo; });

    // mutual disjointness across factors (roots are distinct reals)
    bool changed = true;
    int guard = 0;
    while (changed) {
        changed = false;
        if (++guard > 10000) throw Error(ErrorCode::Internal, "isolate: disjointness loop stuck");
        std::sort(roots.begin(), roots.end(),
                  [](const UniRoot& a, const UniRoot& b) {
                      if (a.interval.lo != b.interval.lo) return a.interval.lo < b.interval.lo;
                      return a.interval.hi < b.interval.hi;
                  });
        for (size_t i = 0; i + 1 < roots.size(); ++i) {
            auto& a = roots[i];
            auto& b = roots[i + 1];
            if (!a.interval.intersects(b.interval)) continue;
            changed = true;
            auto halve = [](UniRoot& r) {
                if (r.interval.is_point()) return false;
                r.interval = refine_cell(r.defining_factor, r.interval, r.interval.width() / 2);
                return true;
            };
            bool progressed = halve(a);
            progressed = halve(b) || progressed;
            if (!progressed)
                throw Error(ErrorCode::Internal, "isolate: identical point roots across factors");
        }
    }
    return roots;
}

UniRoot refine(const UniRoot& root, const Rat& target_width) {
    if (root.interval.is_point() || root.interval.width() <= target_width) return root;
    UniRoot out = root;
    out.interval = refine_cell(root.defining_factor, root.interval, target_width);
    return out;
}

int sign_at(const UniPoly& f, const Rat& q) { return f.sign_at(q); }

std::vector<UniRoot> roots_in(const UniPoly& f, const IntervalQ& interval) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "roots_in of zero polynomial");
    std::vector<UniRoot> out;
    if (f.degree() == 0) return out;
    for (auto r : isolate(f)) {
        auto& iv = r.interval;
        if (iv.is_point()) {
            if (interval.contains(iv.lo)) out.push_back(std::move(r));
            continue;
        }
        // exact-endpoint roots
        if (r.defining_factor.sign_at(interval.lo) == 0 && iv.contains(interval.lo)) {
            r.interval = IntervalQ::point(interval.lo);
            out.push_back(std::move(r));
            continue;
        }
        if (!interval.is_point() && r.defining_factor.sign_at(interval.hi) == 0 &&
            iv.contains(interval.hi)) {
            r.interval = IntervalQ::point(interval.hi);
            out.push_back(std::move(r));
            continue;
        }
        // refine until decidable; terminates since the root is not an endpoint
        while (true) {
            if (iv.lo >= interval.lo && iv.hi <= interval.hi) {
                out.push_back(std::move(r));
                break;
            }
            if (iv.hi < interval.lo || iv.lo > interval.hi) break;
            iv = refine_cell(r.defining_factor, iv, iv.width() / 2);
            if (iv.is_point()) {
                if (interval.contains(iv.lo)) out.push_back(std::move(r));
                break;
            }
        }
    }
    return out;
}

int count_roots_in(const UniPoly& f, const IntervalQ& interval) {
    return static_cast<int>(roots_in(f, interval).size());
}

}  // namespace lur
