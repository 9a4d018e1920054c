#include "lur/resultant.hpp"

#include <algorithm>

namespace lur {

namespace {

// ---------------------------------------------------------------------------
// Generic dense-in-one-variable PRS machinery over a coefficient ring C.
// C must provide: default ctor (unused), operator*, operator-, unary -,
// is_zero(), and free divexact(C, C).
// ---------------------------------------------------------------------------

template <class C>
struct PolyVec {
    std::vector<C> c;
    int deg() const { return static_cast<int>(c.size()) - 1; }
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool zero() const { return c.empty(); }
    const C& lead() const { return c.back(); }
};

template <class C>
C ring_pow(const C& base, int e, const C& one) {
    C r = one;
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
}

template <class C>
PolyVec<C> prem_vec(const PolyVec<C>& a, const PolyVec<C>& b) {
    int da = a.deg(), db = b.deg();
    PolyVec<C> r = a;
    const C& d = b.lead();
    int e = da - db + 1;
    while (!r.zero() && r.deg() >= db) {
        int k = r.deg() - db;
        C lr = r.lead();
        PolyVec<C> nr;
        nr.c.resize(r.deg());  // degree drops by at least one
        for (int i = 0; i < r.deg(); ++i) {
            C t = r.c[i] * d;
            if (i - k >= 0 && i - k <= db) t = t - lr * b.c[i - k];
            nr.c[i] = std::move(t);
        }
        nr.trim();
        r = std::move(nr);
        --e;
    }
    for (int i = 0; i < e; ++i)
        for (auto& cc : r.c) cc = cc * d;
    return r;
}

template <class C>
C resultant_vec(PolyVec<C> A, PolyVec<C> B, const C& one, const C& zero) {
    if (A.zero() || B.zero()) throw Error(ErrorCode::Internal, "resultant of zero polynomial");
    int sgn = 1;
    if (A.deg() < B.deg()) {
        if ((A.deg() % 2) && (B.deg() % 2)) sgn = -sgn;
        std::swap(A, B);
    }
    if (B.deg() == 0) {
        if (A.deg() == 0) return one;
        C r = ring_pow(B.c[0], A.deg(), one);
        return sgn < 0 ? -r : r;
    }
    C g = one, h = one;
    while (true) {
        int dA = A.deg(), dB = B.deg();
        int delta = dA - dB;
        if ((dA % 2) && (dB % 2)) sgn = -sgn;
        PolyVec<C> R = prem_vec(A, B);
        if (R.zero()) return zero;
        C divisor = g * ring_pow(h, delta, one);
        PolyVec<C> NB;
        NB.c.reserve(R.c.size());
        for (auto& cc : R.c) NB.c.push_back(divexact(cc, divisor));
        NB.trim();
        A = std::move(B);
        B = std::move(NB);
        g = A.lead();
        if (delta >= 1) {
            C gp = ring_pow(g, delta, one);
            h = (delta == 1) ? gp : divexact(gp, ring_pow(h, delta - 1, one));
        }
        if (B.deg() == 0) {
            int dA2 = A.deg();
            C num = ring_pow(B.c[0], dA2, one);
            C res = (dA2 <= 1) ? num : divexact(num, ring_pow(h, dA2 - 1, one));
            return sgn < 0 ? -res : res;
        }
    }
}

// adapter so UniPoly fits the C interface above (needs member is_zero: has it)
// both UniPoly and MultiPoly provide operator*, operator-, unary -, is_zero, divexact.

PolyVec<UniPoly> to_unipoly_vec(const MultiPoly& f, int var, int other) {
    PolyVec<UniPoly> out;
    for (const auto& c : f.coeffs_in(var)) out.c.push_back(c.to_unipoly(other));
    out.trim();
    return out;
}

PolyVec<MultiPoly> to_multipoly_vec(const MultiPoly& f, int var) {
    PolyVec<MultiPoly> out;
    out.c = f.coeffs_in(var);
    out.trim();
    return out;
}

// variables (other than var) occurring in f
std::vector<int> other_vars(const MultiPoly& f, const MultiPoly& g, int var) {
    std::vector<int> vs;
    for (int i = 0; i < f.arity(); ++i) {
        if (i == var) continue;
        if (f.degree(i) > 0 || g.degree(i) > 0) vs.push_back(i);
    }
    return vs;
}

MultiPoly resultant_impl(const MultiPoly& f, const MultiPoly& g, int var) {
    // strip integer content up front: res(cf*F, cg*G) = cf^degG cg^degF res(F,G)
    Int cf = f.int_content(), cg = g.int_content();
    MultiPoly F = f.int_primitive_part(), G = g.int_primitive_part();
    int df = F.degree(var), dg = G.degree(var);
    Int corr;
    {
        Int a, b;
        mpz_pow_ui(a.get_mpz_t(), cf.get_mpz_t(), static_cast<unsigned long>(dg));
        mpz_pow_ui(b.get_mpz_t(), cg.get_mpz_t(), static_cast<unsigned long>(df));
        corr = a * b;
    }
    auto vs = other_vars(F, G, var);
    MultiPoly out(f.arity());
    if (vs.empty()) {
        // univariate resultant: integer result
        PolyVec<UniPoly> A, B;
        for (const auto& c : F.coeffs_in(var)) A.c.push_back(c.to_unipoly(var));  // constants
        for (const auto& c : G.coeffs_in(var)) B.c.push_back(c.to_unipoly(var));
        A.trim();
        B.trim();
        UniPoly r = resultant_vec(A, B, UniPoly::constant(1), UniPoly());
        out = MultiPoly::from_unipoly(r, f.arity(), var);  // degree-0 value
        if (r.degree() > 0) throw Error(ErrorCode::Internal, "univariate resultant not constant");
    } else if (vs.size() == 1) {
        UniPoly r = resultant_vec(to_unipoly_vec(F, var, vs[0]), to_unipoly_vec(G, var, vs[0]),
                                  UniPoly::constant(1), UniPoly());
        out = MultiPoly::from_unipoly(r, f.arity(), vs[0]);
    } else {
        MultiPoly r = resultant_vec(to_multipoly_vec(F, var), to_multipoly_vec(G, var),
                                    MultiPoly::constant(f.arity(), 1), MultiPoly(f.arity()));
        out = r;
    }
    return out.mul_scalar(corr);
}

}  // namespace

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var) {
    if (f.arity() != g.arity()) throw Error(ErrorCode::InvalidArgument, "resultant arity mismatch");
    if (var < 0 || var >= f.arity())
        throw Error(ErrorCode::InvalidArgument, "resultant variable out of range");
    if (f.degree(var) <= 0 || g.degree(var) <= 0)
        throw Error(ErrorCode::VariableAbsent, "resultant: variable absent from an input");
    return resultant_impl(f, g, var);
}

MultiPoly resultant_ext(const MultiPoly& f, const MultiPoly& g, int var) {
    int df = std::max(f.degree(var), 0), dg = std::max(g.degree(var), 0);
    if (df > 0 && dg > 0) return resultant_impl(f, g, var);
    if (f.is_zero() || g.is_zero()) return MultiPoly(f.arity());
    if (df == 0 && dg == 0) return MultiPoly::constant(f.arity(), 1);
    if (df == 0) {
        // res(c, g) = c^deg(g)
        MultiPoly r = MultiPoly::constant(f.arity(), 1);
        for (int i = 0; i < dg; ++i) r = r * f;
        return r;
    }
    MultiPoly r = MultiPoly::constant(f.arity(), 1);
    for (int i = 0; i < df; ++i) r = r * g;
    return r;
}

MultiPoly resultant_with_parameter(const MultiPoly& f, const MultiPoly& g, int var, int param) {
    if (param == var) throw Error(ErrorCode::InvalidArgument, "parameter equals eliminated variable");
    if (param < 0 || param >= f.arity())
        throw Error(ErrorCode::InvalidArgument, "parameter index out of range");
    return resultant(f, g, var);
}

MultiPoly shear_symbolic(const MultiPoly& f, int i) {
    if (i < 0 || i + 1 >= f.arity())
        throw Error(ErrorCode::InvalidArgument, "shear_symbolic: variable index out of range");
    int n = f.arity();
    MultiPoly wide = f.widened(n + 1);  // parameter is variable n
    MultiPoly out(n + 1);
    for (const auto& [e, c] : wide.terms()) {
        unsigned a = e[i];
        Int binom = 1;
        for (unsigned k = 0; k <= a; ++k) {
            ExpVec r = e;
            r[i] = a - k;
            r[i + 1] += k;
            r[n] += k;  // parameter power
            out.add_term(r, c * binom);
            if (k < a) binom = binom * Int(static_cast<long>(a - k)) / Int(static_cast<long>(k + 1));
        }
    }
    return out;
}

MultiPoly resultant_sylvester(const MultiPoly& f, const MultiPoly& g, int var) {
    if (f.degree(var) <= 0 || g.degree(var) <= 0)
        throw Error(ErrorCode::VariableAbsent, "resultant_sylvester: variable absent");
    int m = f.degree(var), n = g.degree(var);
    int N = m + n;
    auto fc = f.coeffs_in(var);
    auto gc = g.coeffs_in(var);
    const int ar = f.arity();
    std::vector<std::vector<MultiPoly>> M(N, std::vector<MultiPoly>(N, MultiPoly(ar)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) M[i][i + j] = fc[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) M[n + i][i + j] = gc[n - j];

    // Bareiss fraction-free elimination
    int sgn = 1;
    MultiPoly prev = MultiPoly::constant(ar, 1);
    for (int k = 0; k + 1 < N; ++k) {
        if (M[k][k].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < N; ++i)
                if (!M[i][k].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return MultiPoly(ar);  // singular: resultant 0
            std::swap(M[k], M[swap_row]);
            sgn = -sgn;
        }
        for (int i = k + 1; i < N; ++i) {
            for (int j = k + 1; j < N; ++j) {
                MultiPoly t = M[k][k] * M[i][j] - M[i][k] * M[k][j];
                M[i][j] = divexact(t, prev);
            }
            M[i][k] = MultiPoly(ar);
        }
        prev = M[k][k];
    }
    MultiPoly det = M[N - 1][N - 1];
    return sgn < 0 ? -det : det;
}

}  // namespace lur
