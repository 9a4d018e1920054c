#include "lur/unipoly.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

namespace lur {

namespace {
const Int kZero = 0;
}

UniPoly UniPoly::monomial(Int coeff, int deg) {
    if (coeff == 0) return UniPoly();
    std::vector<Int> c(deg + 1, Int(0));
    c[deg] = std::move(coeff);
    return UniPoly(std::move(c));
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

const Int& UniPoly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

UniPoly UniPoly::operator-() const {
    std::vector<Int> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            r[i + j] += c_[i] * o.c_[j];
        }
    }
    return UniPoly(std::move(r));
}

UniPoly UniPoly::mul_scalar(const Int& k) const {
    if (k == 0) return UniPoly();
    std::vector<Int> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * k;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::mul_xk(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Int> r(c_.size() + k, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Int> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(static_cast<long>(i));
    return UniPoly(std::move(r));
}

Rat UniPoly::eval(const Rat& q) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + Rat(*it);
    return acc;
}

Int UniPoly::eval_int(const Int& v) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
    return acc;
}

int UniPoly::sign_at(const Rat& q) const {
    if (is_zero()) return 0;
    const Int& num = q.get_num();
    const Int& den = q.get_den();
    if (den == 1) return sign(eval_int(num));
    // sum c_i num^i den^(d-i): same sign as f(q) since den > 0
    Int acc = 0;
    Int numpow = 1;
    std::vector<Int> terms(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        terms[i] = c_[i] * numpow;
        numpow *= num;
    }
    Int denpow = 1;
    for (size_t i = c_.size(); i-- > 0;) {
        acc += terms[i] * denpow;
        denpow *= den;
    }
    return sign(acc);
}

Int UniPoly::content() const {
    Int g = 0;
    for (const auto& c : c_) {
        if (c == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Int UniPoly::signed_content() const {
    Int g = content();
    if (!is_zero() && leading() < 0) g = -g;
    return g;
}

UniPoly UniPoly::primitive_part() const {
    if (is_zero()) return UniPoly();
    Int g = signed_content();
    std::vector<Int> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] / g;
    return UniPoly(std::move(r));
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Int& c = coeff(i);
        if (c == 0) continue;
        Int a = abs(c);
        if (out.empty())
            out += (c < 0) ? "-" : "";
        else
            out += (c < 0) ? "-" : "+";
        if (i == 0) {
            out += a.get_str();
        } else {
            if (a != 1) out += a.get_str() + "*";
            out += var;
            if (i != 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

UniPoly divexact(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
    if (a.is_zero()) return UniPoly();
    int da = a.degree(), db = b.degree();
    if (da < db) throw Error(ErrorCode::Internal, "divexact: degree underflow");
    std::vector<Int> rem = a.coeffs();
    std::vector<Int> q(da - db + 1, Int(0));
    const Int& lb = b.leading();
    for (int k = da - db; k >= 0; --k) {
        if (rem[k + db] == 0) continue;
        Int qc, sr;
        mpz_tdiv_qr(qc.get_mpz_t(), sr.get_mpz_t(), rem[k + db].get_mpz_t(), lb.get_mpz_t());
        if (sr != 0) throw Error(ErrorCode::Internal, "divexact: inexact scalar step");
        q[k] = qc;
        for (int j = 0; j <= db; ++j) rem[k + j] -= qc * b.coeff(j);
    }
    for (const auto& r : rem)
        if (r != 0) throw Error(ErrorCode::Internal, "divexact: nonzero remainder");
    return UniPoly(std::move(q));
}

UniPoly prem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "prem by zero polynomial");
    int da = a.degree(), db = b.degree();
    if (da < db) return a;
    const Int& d = b.leading();
    UniPoly r = a;
    int e = da - db + 1;
    while (!r.is_zero() && r.degree() >= db) {
        int k = r.degree() - db;
        UniPoly t = b.mul_xk(k).mul_scalar(r.leading());
        r = r.mul_scalar(d) - t;
        --e;
    }
    if (e < 0) throw Error(ErrorCode::Internal, "prem: exponent underflow");
    Int pw;
    mpz_pow_ui(pw.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(e));
    return r.mul_scalar(pw);
}

// ---------------------------------------------------------------------------
// Modular degree bound: deg gcd_Z(f,g) <= deg gcd_p(f,g) when p divides
// neither leading coefficient. Degree 0 mod p therefore certifies
// coprimality over Q.
// ---------------------------------------------------------------------------

namespace {

constexpr uint64_t kPrimes[] = {4611686018427388039ULL, 4611686018427387847ULL,
                                2305843009213693951ULL, 1152921504606846883ULL};

uint64_t mod_reduce(const Int& v, uint64_t p) {
    Int r;
    Int pz(static_cast<unsigned long>(p));
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), pz.get_mpz_t());
    return r.get_ui();
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::vector<uint64_t> to_modp(const UniPoly& f, uint64_t p) {
    std::vector<uint64_t> r(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) r[i] = mod_reduce(f.coeff(i), p);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// deg of gcd over F_p; returns -2 if p is unusable (divides a leading coeff)
int gcd_degree_modp(const UniPoly& f, const UniPoly& g, uint64_t p) {
    std::vector<uint64_t> a = to_modp(f, p), b = to_modp(g, p);
    if (static_cast<int>(a.size()) - 1 != f.degree()) return -2;
    if (static_cast<int>(b.size()) - 1 != g.degree()) return -2;
    while (!b.empty()) {
        if (a.size() >= b.size()) {
            uint64_t inv = powmod(b.back(), p - 2, p);
            for (int k = static_cast<int>(a.size()) - static_cast<int>(b.size()); k >= 0; --k) {
                uint64_t top = a[b.size() - 1 + k];
                if (top == 0) continue;
                uint64_t q = mulmod(top, inv, p);
                for (size_t j = 0; j < b.size(); ++j) {
                    uint64_t sub = mulmod(q, b[j], p);
                    uint64_t& ref = a[j + k];
                    ref = (ref >= sub) ? ref - sub : ref + p - sub;
                }
            }
            while (!a.empty() && a.back() == 0) a.pop_back();
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

// upper bound on deg gcd(f,g) via one usable prime; -1 if no prime usable
int gcd_degree_bound(const UniPoly& f, const UniPoly& g) {
    for (uint64_t p : kPrimes) {
        int d = gcd_degree_modp(f, g, p);
        if (d >= -1) return d;
    }
    return std::min(f.degree(), g.degree());
}

}  // namespace

UniPoly gcd_uni(const UniPoly& f, const UniPoly& g) {
    if (f.is_zero() && g.is_zero())
        throw Error(ErrorCode::InvalidArgument, "gcd of two zero polynomials");
    if (f.is_zero()) return g.primitive_part();
    if (g.is_zero()) return f.primitive_part();
    UniPoly a = f.primitive_part();
    UniPoly b = g.primitive_part();
    if (a.degree() == 0 || b.degree() == 0) return UniPoly::constant(1);
    if (a.degree() < b.degree()) std::swap(a, b);

    if (gcd_degree_bound(a, b) <= 0) return UniPoly::constant(1);

    // subresultant PRS
    Int gg = 1, h = 1;
    while (true) {
        int delta = a.degree() - b.degree();
        UniPoly r = prem(a, b);
        if (r.is_zero()) return b.primitive_part();
        if (r.degree() == 0) return UniPoly::constant(1);
        Int hp;
        mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
        Int divisor = gg * hp;
        a = b;
        {
            std::vector<Int> rc = r.coeffs();
            for (auto& c : rc) {
                Int q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
                if (rem != 0) throw Error(ErrorCode::Internal, "subresultant PRS inexact division");
                c = q;
            }
            b = UniPoly(std::move(rc));
        }
        gg = a.leading();
        if (delta > 0) {
            Int gp;
            mpz_pow_ui(gp.get_mpz_t(), gg.get_mpz_t(), static_cast<unsigned long>(delta));
            if (delta == 1) {
                h = gp;
            } else {
                Int hm;
                mpz_pow_ui(hm.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
                Int q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), gp.get_mpz_t(), hm.get_mpz_t());
                if (rem != 0) throw Error(ErrorCode::Internal, "subresultant h-update inexact");
                h = q;
            }
        }
    }
}

UniPoly SquarefreeDecomposition::reconstruct() const {
    UniPoly acc = UniPoly::constant(content);
    for (const auto& [fac, pw] : factors)
        for (int i = 0; i < pw; ++i) acc = acc * fac;
    return acc;
}

UniPoly SquarefreeDecomposition::squarefree_part() const {
    UniPoly acc = UniPoly::constant(1);
    for (const auto& [fac, pw] : factors) acc = acc * fac;
    return acc;
}

SquarefreeDecomposition squarefree_decompose(const UniPoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree_decompose of zero");
    SquarefreeDecomposition out;
    out.content = f.signed_content();
    UniPoly P = f.primitive_part();
    if (P.degree() == 0) return out;

    UniPoly dP = P.derivative();
    UniPoly g = gcd_uni(P, dP);
    if (g.degree() == 0) {
        out.factors.emplace_back(P, 1);
        return out;
    }
    UniPoly w = divexact(P, g);
    UniPoly y = divexact(dP, g);
    int i = 1;
    while (true) {
        UniPoly z = y - w.derivative();
        if (z.is_zero()) {
            if (w.degree() >= 1) out.factors.emplace_back(w, i);
            break;
        }
        UniPoly a = gcd_uni(w, z);
        if (a.degree() >= 1) out.factors.emplace_back(a, i);
        w = divexact(w, a);
        y = divexact(z, a);
        ++i;
    }
    // absorb any residual unit into the content sign bookkeeping
    UniPoly recon = out.reconstruct();
    if (!(recon == f)) throw Error(ErrorCode::Internal, "squarefree reconstruction mismatch");
    return out;
}

Rat root_bound(const UniPoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root_bound of zero polynomial");
    if (f.degree() < 1) throw Error(ErrorCode::InvalidArgument, "root_bound of constant");
    Int mx = 0;
    for (int i = 0; i < f.degree(); ++i) {
        Int a = abs(f.coeff(i));
        if (a > mx) mx = a;
    }
    Int lead = abs(f.leading());
    return Rat(1) + make_rat(mx, lead);
}

namespace {

unsigned long coeff_tau(const UniPoly& f) {
    size_t mx = 1;
    for (const auto& c : f.coeffs()) {
        if (c == 0) continue;
        Int a = abs(c);
        mx = std::max(mx, mpz_sizeinbase(a.get_mpz_t(), 2));
    }
    return static_cast<unsigned long>(mx);
}

Int isqrt_plus1(long v) {
    Int n(v), r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r + 1;
}

}  // namespace

Rat separation_bound(const UniPoly& f) {
    if (f.degree() < 2) throw Error(ErrorCode::InvalidArgument, "separation_bound needs degree >= 2");
    long d = f.degree();
    unsigned long tau = coeff_tau(f);
    // denominator: d^ceil'((d+2)/2) * (d+1)^ceil'((d-1)/2) with half powers
    // over-approximated via isqrt+1, times 2^(tau(d-1))
    Int den = 1, t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>((d + 2) / 2));
    den *= t;
    if ((d + 2) % 2) den *= isqrt_plus1(d);
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d + 1), static_cast<unsigned long>((d - 1) / 2));
    den *= t;
    if ((d - 1) % 2) den *= isqrt_plus1(d + 1);
    Int two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, tau * static_cast<unsigned long>(d - 1));
    den *= two_pow;
    return make_rat(Int(1), den);
}

long separation_bound_log2(const UniPoly& f) {
    if (f.degree() < 2) throw Error(ErrorCode::InvalidArgument, "separation_bound needs degree >= 2");
    long d = f.degree();
    long tau = static_cast<long>(coeff_tau(f));
    // log2 den <= (d+2)/2 * log2(d) + (d+1)/2 * log2(d+1) + tau*(d-1), rounded up
    auto lg = [](long v) {
        long b = 0;
        while ((1L << b) < v) ++b;
        return b;
    };
    return (d + 3) / 2 * lg(d) + (d + 1) / 2 * lg(d + 1) + tau * (d - 1) + 2;
}

// ---------------------------------------------------------------------------
// QPoly
// ---------------------------------------------------------------------------

namespace {
const Rat kZeroQ = Rat(0);
}

QPoly QPoly::from_int(const UniPoly& p) {
    std::vector<Rat> c(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) c[i] = Rat(p.coeff(i));
    return QPoly(std::move(c));
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& QPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZeroQ;
    return c_[i];
}

QPoly QPoly::operator-() const {
    std::vector<Rat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return QPoly(std::move(r));
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return QPoly(std::move(r));
}

QPoly QPoly::derivative() const {
    if (c_.size() <= 1) return QPoly();
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return QPoly(std::move(r));
}

Rat QPoly::eval(const Rat& q) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + *it;
    return acc;
}

UniPoly QPoly::clear_denominators() const {
    if (is_zero()) return UniPoly();
    Int l = 1;
    for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Int> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        Rat v = c_[i] * Rat(l);
        r[i] = v.get_num();
    }
    return UniPoly(std::move(r));
}

}  // namespace lur
