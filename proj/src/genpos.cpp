#include "lur/genpos.hpp"

#include <algorithm>

namespace lur {

IntervalQ project_sheared(const BoxQ& box2, const Rat& s) {
    if (box2.arity() != 2) throw Error(ErrorCode::InvalidArgument, "project_sheared: need a 2-box");
    const IntervalQ& J = box2.dims[0];
    const IntervalQ& K = box2.dims[1];
    if (sign(s) >= 0) return IntervalQ(J.lo + s * K.lo, J.hi + s * K.hi);
    return IntervalQ(J.lo + s * K.hi, J.hi + s * K.lo);
}

namespace {

// intersection of { s : alpha*s <= beta } over a domain, result as a
// possibly-empty interval; domains are [0, +inf) and (-inf, 0)
struct Piece {
    bool empty = true;
    bool lo_inf = false, hi_inf = false;
    Rat lo, hi;
    bool lo_open = false, hi_open = false;
};

void constrain(Piece& p, const Rat& alpha, const Rat& beta) {
    if (p.empty) return;
    if (sign(alpha) == 0) {
        if (sign(beta) < 0) p.empty = true;
        return;
    }
    Rat m = beta / alpha;
    if (sign(alpha) > 0) {
        // s <= m
        if (p.hi_inf || m < p.hi) {
            p.hi = m;
            p.hi_inf = false;
            p.hi_open = false;
        }
    } else {
        // s >= m
        if (p.lo_inf || m > p.lo) {
            p.lo = m;
            p.lo_inf = false;
            p.lo_open = false;
        }
    }
    if (!p.lo_inf && !p.hi_inf) {
        if (p.lo > p.hi || (p.lo == p.hi && (p.lo_open || p.hi_open))) p.empty = true;
    }
}

void push_piece(IntervalSet& out, const Piece& p) {
    if (p.empty) return;
    ExtInterval iv;
    iv.lo_inf = p.lo_inf;
    iv.hi_inf = p.hi_inf;
    iv.lo = p.lo;
    iv.hi = p.hi;
    iv.lo_open = p.lo_open;
    iv.hi_open = p.hi_open;
    out.insert(iv);
}

}  // namespace

IntervalSet nongeneric_pair(const BoxQ& L1, const BoxQ& L2) {
    if (L1.arity() != 2 || L2.arity() != 2)
        throw Error(ErrorCode::InvalidArgument, "nongeneric_pair: need 2-boxes");
    const Rat &a1 = L1.dims[0].lo, &b1 = L1.dims[0].hi, &c1 = L1.dims[1].lo, &d1 = L1.dims[1].hi;
    const Rat &a2 = L2.dims[0].lo, &b2 = L2.dims[0].hi, &c2 = L2.dims[1].lo, &d2 = L2.dims[1].hi;

    IntervalSet out;
    // s >= 0: T_i = [a_i + s c_i, b_i + s d_i]; overlap iff
    //   a2 + s c2 <= b1 + s d1  and  a1 + s c1 <= b2 + s d2
    {
        Piece p;
        p.empty = false;
        p.lo_inf = false;
        p.lo = 0;
        p.hi_inf = true;
        constrain(p, c2 - d1, b1 - a2);
        constrain(p, c1 - d2, b2 - a1);
        push_piece(out, p);
    }
    // s < 0: T_i = [a_i + s d_i, b_i + s c_i]; overlap iff
    //   a2 + s d2 <= b1 + s c1  and  a1 + s d1 <= b2 + s c2
    {
        Piece p;
        p.empty = false;
        p.lo_inf = true;
        p.hi_inf = false;
        p.hi = 0;
        p.hi_open = true;
        constrain(p, d2 - c1, b1 - a2);
        constrain(p, d1 - c2, b2 - a1);
        push_piece(out, p);
    }
    return out;
}

IntervalSet nongeneric_union(const std::vector<BoxQ>& boxes) {
    IntervalSet out;
    for (size_t i = 0; i < boxes.size(); ++i)
        for (size_t j = i + 1; j < boxes.size(); ++j)
            out = intervalset_union(out, nongeneric_pair(boxes[i], boxes[j]));
    return out;
}

ShearChoice choose_s(const IntervalSet& S, int cap) {
    ShearChoice choice;
    choice.nongeneric_set = S;
    for (long k = 1; k <= cap; ++k) {
        for (long sgn : {+1L, -1L}) {
            ++choice.attempts;
            Rat s = make_rat(sgn * k);
            if (!S.contains(s)) {
                choice.s = s;
                return choice;
            }
        }
    }
    throw Error(ErrorCode::RefineAndRetry, "choose_s: no integer outside the non-generic set");
}

std::optional<Rat> next_integer_outside(const IntervalSet& S, const Rat& prev, long cap) {
    // enumeration order +1, -1, +2, -2, ...
    auto rank = [](const Rat& v) {
        long k = std::abs(static_cast<long>(v.get_num().get_si()));
        return 2 * k - (sign(v) > 0 ? 1 : 0);
    };
    long start = sign(prev) == 0 ? 0 : rank(prev);
    for (long r = start + 1; r <= 2 * cap; ++r) {
        long k = (r + 1) / 2;
        long sg = (r % 2) ? +1 : -1;
        Rat s = make_rat(sg * k);
        if (!S.contains(s)) return s;
    }
    return std::nullopt;
}

bool shear_degree_safe(const MultiPoly& f, int i, const Rat& s0) {
    // coefficient of x_{i+1}^d in the sheared polynomial, d = deg in (x_i, x_{i+1});
    // equals sum over terms of top bidegree of c * s0^{e_i}
    int d = -1;
    for (const auto& [e, c] : f.terms()) d = std::max(d, static_cast<int>(e[i] + e[i + 1]));
    if (d < 0) return false;
    Rat acc(0);
    for (const auto& [e, c] : f.terms()) {
        if (static_cast<int>(e[i] + e[i + 1]) != d) continue;
        Rat t(c);
        for (unsigned k = 0; k < e[i]; ++k) t *= s0;
        acc += t;
    }
    return sign(acc) != 0;
}

bool corollary33_generic(const MultiPoly& f, const MultiPoly& g, const UniPoly& R1) {
    if (R1.degree() < 1) return false;
    if (gcd_uni(R1, R1.derivative()).degree() != 0) return false;
    auto fc = f.coeffs_in(1);
    auto gc = g.coeffs_in(1);
    UniPoly lf = fc.back().to_unipoly(0);
    UniPoly lg = gc.back().to_unipoly(0);
    if (lf.degree() < 1 || lg.degree() < 1) return true;  // a constant is coprime to anything
    return gcd_uni(lf, lg).degree() == 0;
}

GenericityChecker::GenericityChecker(const MultiPoly& f, const MultiPoly& g) {
    if (f.arity() != 2 || g.arity() != 2)
        throw Error(ErrorCode::InvalidArgument, "GenericityChecker: bivariate inputs required");
    MultiPoly fs = shear_symbolic(f, 0);
    MultiPoly gs = shear_symbolic(g, 0);
    rbar_ = resultant_with_parameter(fs, gs, 1, 2);
    if (rbar_.is_zero())
        throw Error(ErrorCode::NotZeroDimensional, "parametric resultant vanishes");
    // squarefree part w.r.t. x over Z[s]: strip the content in s first
    MultiPoly P = rbar_;
    {
        auto cs = P.coeffs_in(0);
        MultiPoly cont(P.arity());
        for (const auto& c : cs) {
            if (c.is_zero()) continue;
            cont = cont.is_zero() ? c.normalized() : gcd_multi(cont, c);
            if (cont.is_constant()) break;
        }
        if (!cont.is_constant()) P = divexact(P, cont);
    }
    P = P.normalized();
    MultiPoly dP = P.derivative(0);
    if (dP.is_zero()) {
        sqfree_ = P;
    } else {
        MultiPoly G = gcd_multi(P, dP);
        sqfree_ = (G.is_constant()) ? P : divexact(P, G);
    }
    sqfree_ = sqfree_.normalized();
    sqfree_deg_x_ = sqfree_.degree(0);
}

UniPoly GenericityChecker::squarefree_at(const Rat& s0) const {
    if (s0.get_den() != 1)
        throw Error(ErrorCode::InvalidArgument, "certify: integer shear values only");
    return sqfree_.subst_int(2, s0.get_num()).to_unipoly(0).primitive_part();
}

std::pair<bool, UniPoly> GenericityChecker::certify(const Rat& s0) const {
    if (s0.get_den() != 1)
        throw Error(ErrorCode::InvalidArgument, "certify: integer shear values only");
    UniPoly R2 = rbar_.subst_int(2, s0.get_num()).to_unipoly(0);
    UniPoly S0 = squarefree_at(s0);
    if (S0.degree() != sqfree_deg_x_) return {false, R2};  // degree dropped at s0
    bool certified = S0.degree() < 1 || gcd_uni(S0, S0.derivative()).degree() == 0;
    return {certified, R2};
}

std::pair<bool, UniPoly> certify_generic(const MultiPoly& f, const MultiPoly& g, const Rat& s0) {
    GenericityChecker checker(f, g);
    return checker.certify(s0);
}

}  // namespace lur
