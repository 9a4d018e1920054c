#include "lur/multipoly.hpp"

#include <algorithm>

namespace lur {

MultiPoly MultiPoly::constant(int arity, Int v) {
    MultiPoly p(arity);
    if (v != 0) p.terms_[ExpVec(arity, 0)] = std::move(v);
    return p;
}

MultiPoly MultiPoly::variable(int arity, int var) {
    MultiPoly p(arity);
    ExpVec e(arity, 0);
    e[var] = 1;
    p.terms_[e] = 1;
    return p;
}

MultiPoly MultiPoly::monomial(int arity, ExpVec e, Int coeff) {
    MultiPoly p(arity);
    if (coeff != 0) p.terms_[std::move(e)] = std::move(coeff);
    return p;
}

MultiPoly MultiPoly::from_unipoly(const UniPoly& p, int arity, int var) {
    MultiPoly out(arity);
    for (int i = 0; i <= p.degree(); ++i) {
        if (p.coeff(i) == 0) continue;
        ExpVec e(arity, 0);
        e[var] = static_cast<unsigned>(i);
        out.terms_[e] = p.coeff(i);
    }
    return out;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == ExpVec(arity_, 0);
}

void MultiPoly::add_term(const ExpVec& e, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p(arity_);
    for (const auto& [e, c] : terms_) p.terms_[e] = -c;
    return p;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (arity_ != o.arity_) throw Error(ErrorCode::InvalidArgument, "arity mismatch in +");
    MultiPoly p = *this;
    for (const auto& [e, c] : o.terms_) p.add_term(e, c);
    return p;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    if (arity_ != o.arity_) throw Error(ErrorCode::InvalidArgument, "arity mismatch in -");
    MultiPoly p = *this;
    for (const auto& [e, c] : o.terms_) p.add_term(e, -c);
    return p;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (arity_ != o.arity_) throw Error(ErrorCode::InvalidArgument, "arity mismatch in *");
    MultiPoly p(arity_);
    ExpVec e(arity_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            for (int i = 0; i < arity_; ++i) e[i] = e1[i] + e2[i];
            p.add_term(e, c1 * c2);
        }
    }
    return p;
}

MultiPoly MultiPoly::mul_scalar(const Int& k) const {
    MultiPoly p(arity_);
    if (k == 0) return p;
    for (const auto& [e, c] : terms_) p.terms_[e] = c * k;
    return p;
}

int MultiPoly::degree(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
    return d;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (unsigned x : e) t += static_cast<int>(x);
        d = std::max(d, t);
    }
    return d;
}

std::vector<MultiPoly> MultiPoly::coeffs_in(int var) const {
    int d = degree(var);
    std::vector<MultiPoly> cs(std::max(d + 1, 0), MultiPoly(arity_));
    for (const auto& [e, c] : terms_) {
        ExpVec r = e;
        unsigned k = r[var];
        r[var] = 0;
        cs[k].add_term(r, c);
    }
    return cs;
}

MultiPoly MultiPoly::from_coeffs_in(int var, int arity, const std::vector<MultiPoly>& cs) {
    MultiPoly p(arity);
    for (size_t k = 0; k < cs.size(); ++k) {
        for (const auto& [e, c] : cs[k].terms()) {
            ExpVec r = e;
            r[var] += static_cast<unsigned>(k);
            p.add_term(r, c);
        }
    }
    return p;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly p(arity_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        ExpVec r = e;
        r[var] -= 1;
        p.add_term(r, c * Int(static_cast<long>(e[var])));
    }
    return p;
}

MultiPoly MultiPoly::subst_int(int var, const Int& v) const {
    MultiPoly p(arity_);
    for (const auto& [e, c] : terms_) {
        ExpVec r = e;
        unsigned k = r[var];
        r[var] = 0;
        Int pw;
        mpz_pow_ui(pw.get_mpz_t(), v.get_mpz_t(), k);
        p.add_term(r, c * pw);
    }
    return p;
}

Rat MultiPoly::eval(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != arity_)
        throw Error(ErrorCode::InvalidArgument, "eval point arity mismatch");
    Rat acc = 0;
    for (const auto& [e, c] : terms_) {
        Rat t(c);
        for (int i = 0; i < arity_; ++i)
            for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

Int MultiPoly::int_content() const {
    Int g = 0;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

int MultiPoly::lex_leading_sign() const {
    if (terms_.empty()) return 0;
    return sign(terms_.rbegin()->second);
}

MultiPoly MultiPoly::int_primitive_part() const {
    if (is_zero()) return *this;
    Int g = int_content();
    MultiPoly p(arity_);
    for (const auto& [e, c] : terms_) p.terms_[e] = c / g;
    return p;
}

MultiPoly MultiPoly::normalized() const {
    if (is_zero()) return *this;
    MultiPoly p = int_primitive_part();
    if (p.lex_leading_sign() < 0) return -p;
    return p;
}

QPoly MultiPoly::specialize_to_qpoly(int var, const Rat& q, int free_var) const {
    std::vector<Rat> cs(std::max(degree(free_var) + 1, 0), Rat(0));
    for (const auto& [e, c] : terms_) {
        Rat t(c);
        for (int i = 0; i < arity_; ++i) {
            if (i == free_var) continue;
            if (e[i] == 0) continue;
            if (i != var)
                throw Error(ErrorCode::InvalidArgument, "specialize: unexpected extra variable");
            for (unsigned k = 0; k < e[i]; ++k) t *= q;
        }
        cs[e[free_var]] += t;
    }
    return QPoly(std::move(cs));
}

UniPoly MultiPoly::to_unipoly(int var) const {
    std::vector<Int> cs(std::max(degree(var) + 1, 0), Int(0));
    for (const auto& [e, c] : terms_) {
        for (int i = 0; i < arity_; ++i)
            if (i != var && e[i] != 0)
                throw Error(ErrorCode::InvalidArgument, "to_unipoly: polynomial not univariate");
        cs[e[var]] += c;
    }
    return UniPoly(std::move(cs));
}

MultiPoly MultiPoly::widened(int new_arity) const {
    if (new_arity < arity_) throw Error(ErrorCode::InvalidArgument, "widened: arity shrink");
    MultiPoly p(new_arity);
    for (const auto& [e, c] : terms_) {
        ExpVec r = e;
        r.resize(new_arity, 0);
        p.terms_[r] = c;
    }
    return p;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    if (is_zero()) return "0";
    if (static_cast<int>(names.size()) < arity_)
        throw Error(ErrorCode::InvalidArgument, "to_string: not enough variable names");
    std::string out;
    // reverse lex over exponent vectors: highest first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Int a = abs(c);
        if (out.empty())
            out += (c < 0) ? "-" : "";
        else
            out += (c < 0) ? "-" : "+";
        bool any_var = false;
        std::string mono;
        for (int i = 0; i < arity_; ++i) {
            if (e[i] == 0) continue;
            if (any_var) mono += "*";
            any_var = true;
            mono += names[i];
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (!any_var) {
            out += a.get_str();
        } else {
            if (a != 1) out += a.get_str() + "*";
            out += mono;
        }
    }
    return out;
}

MultiPoly shear(const MultiPoly& f, const Rat& s, int i) {
    if (i < 0 || i + 1 >= f.arity())
        throw Error(ErrorCode::InvalidArgument, "shear: variable index out of range");
    if (s.get_den() != 1)
        throw Error(ErrorCode::InvalidArgument, "shear: non-integer shear values unsupported");
    Int si = s.get_num();
    if (si == 0) return f;
    MultiPoly out(f.arity());
    for (const auto& [e, c] : f.terms()) {
        unsigned a = e[i];
        // (x_i + s x_{i+1})^a expanded by binomials
        Int binom = 1;  // C(a, k)
        Int spow = 1;   // s^k
        for (unsigned k = 0; k <= a; ++k) {
            ExpVec r = e;
            r[i] = a - k;
            r[i + 1] += k;
            out.add_term(r, c * binom * spow);
            if (k < a) {
                binom = binom * Int(static_cast<long>(a - k)) / Int(static_cast<long>(k + 1));
                spow *= si;
            }
        }
    }
    return out;
}

MultiPoly divexact(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "divexact by zero");
    MultiPoly rem = a;
    MultiPoly q(a.arity());
    const auto& bt = b.terms();
    auto blead = bt.rbegin();  // lex-leading term of b
    while (!rem.is_zero()) {
        auto rlead = rem.terms().rbegin();
        const ExpVec& re = rlead->first;
        const ExpVec& be = blead->first;
        ExpVec t(a.arity());
        for (int i = 0; i < a.arity(); ++i) {
            if (re[i] < be[i]) throw Error(ErrorCode::Internal, "divexact_multi: monomial underflow");
            t[i] = re[i] - be[i];
        }
        Int qc, sr;
        mpz_tdiv_qr(qc.get_mpz_t(), sr.get_mpz_t(), rlead->second.get_mpz_t(),
                    blead->second.get_mpz_t());
        if (sr != 0) throw Error(ErrorCode::Internal, "divexact_multi: inexact coefficient");
        MultiPoly term = MultiPoly::monomial(a.arity(), t, qc);
        q = q + term;
        rem = rem - term * b;
    }
    return q;
}

// ---------------------------------------------------------------------------
// gcd via recursive primitive PRS
// ---------------------------------------------------------------------------

namespace {

int highest_var(const MultiPoly& f) {
    int v = -1;
    for (const auto& [e, c] : f.terms())
        for (int i = 0; i < f.arity(); ++i)
            if (e[i] > 0) v = std::max(v, i);
    return v;
}

// content of f as polynomial in `var`: gcd of the coefficients
MultiPoly poly_content(const MultiPoly& f, int var) {
    auto cs = f.coeffs_in(var);
    MultiPoly g(f.arity());
    for (const auto& c : cs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : gcd_multi(g, c);
        if (g.is_constant() && !g.is_zero() && g.terms().begin()->second == 1) break;
    }
    return g;
}

MultiPoly prem_multi(const MultiPoly& a, const MultiPoly& b, int var) {
    int da = a.degree(var), db = b.degree(var);
    if (da < db) return a;
    auto bc = b.coeffs_in(var);
    MultiPoly d = bc[db];
    MultiPoly r = a;
    int e = da - db + 1;
    while (!r.is_zero() && r.degree(var) >= db) {
        int dr = r.degree(var);
        auto rc = r.coeffs_in(var);
        MultiPoly xk = MultiPoly::variable(a.arity(), var);
        // r = d*r - lc_var(r) * x^(dr-db) * b
        MultiPoly shift = MultiPoly::monomial(a.arity(), [&] {
            ExpVec t(a.arity(), 0);
            t[var] = static_cast<unsigned>(dr - db);
            return t;
        }(), Int(1));
        r = d * r - rc[dr] * shift * b;
        --e;
    }
    MultiPoly out = r;
    for (int k = 0; k < e; ++k) out = out * d;
    return out;
}

}  // namespace

MultiPoly gcd_multi(const MultiPoly& f, const MultiPoly& g) {
    if (f.arity() != g.arity()) throw Error(ErrorCode::InvalidArgument, "gcd arity mismatch");
    if (f.is_zero() && g.is_zero())
        throw Error(ErrorCode::InvalidArgument, "gcd of two zero polynomials");
    if (f.is_zero()) return g.normalized();
    if (g.is_zero()) return f.normalized();

    int vf = highest_var(f), vg = highest_var(g);
    if (vf < 0 && vg < 0) return MultiPoly::constant(f.arity(), 1);  // both constants: primitive gcd
    int var = std::max(vf, vg);
    if (f.degree(var) == 0 || g.degree(var) == 0) {
        // var occurs in only one: gcd divides the other's content w.r.t. var
        const MultiPoly& with = f.degree(var) > 0 ? f : g;
        const MultiPoly& without = f.degree(var) > 0 ? g : f;
        MultiPoly c = poly_content(with, var);
        if (c.is_constant()) return MultiPoly::constant(f.arity(), 1);
        return gcd_multi(c, without);
    }

    // univariate fast path
    bool uni = true;
    for (int i = 0; i < f.arity() && uni; ++i)
        if (i != var && (f.degree(i) > 0 || g.degree(i) > 0)) uni = false;
    if (uni) {
        UniPoly gu = gcd_uni(f.to_unipoly(var), g.to_unipoly(var));
        return MultiPoly::from_unipoly(gu, f.arity(), var);
    }

    MultiPoly cf = poly_content(f, var);
    MultiPoly cg = poly_content(g, var);
    MultiPoly gamma = gcd_multi(cf, cg);
    MultiPoly A = divexact(f, cf);
    MultiPoly B = divexact(g, cg);
    if (A.degree(var) < B.degree(var)) std::swap(A, B);
    while (true) {
        MultiPoly r = prem_multi(A, B, var);
        if (r.is_zero()) break;
        if (r.degree(var) == 0) {
            B = MultiPoly::constant(f.arity(), 1);
            break;
        }
        A = B;
        B = divexact(r, poly_content(r, var)).normalized();
    }
    MultiPoly pp = B.degree(var) > 0 ? divexact(B, poly_content(B, var)) : B;
    MultiPoly out = gamma * pp;
    return out.normalized();
}

// ---------------------------------------------------------------------------
// Horner forms
// ---------------------------------------------------------------------------

namespace {

// position of v in order (its rank); order maps rank -> variable
HornerForm horner_build(const MultiPoly& f, const std::vector<int>& order, int rank) {
    // find the highest-ranked variable actually occurring
    int use_rank = -1;
    for (int r = rank; r >= 0; --r) {
        if (f.degree(order[r]) > 0) {
            use_rank = r;
            break;
        }
    }
    if (use_rank < 0) {
        HornerForm leaf;
        leaf.var = -1;
        if (!f.is_zero()) {
            if (!f.is_constant()) throw Error(ErrorCode::Internal, "horner leaf not constant");
            leaf.constant = f.terms().begin()->second;
        } else {
            leaf.constant = 0;
        }
        return leaf;
    }
    int v = order[use_rank];
    HornerForm node;
    node.var = v;
    for (const auto& c : f.coeffs_in(v)) node.coeffs.push_back(horner_build(c, order, use_rank - 1));
    return node;
}

}  // namespace

HornerForm horner_rewrite(const MultiPoly& f) {
    std::vector<int> order(f.arity());
    for (int i = 0; i < f.arity(); ++i) order[i] = i;
    return horner_rewrite(f, order);
}

HornerForm horner_rewrite(const MultiPoly& f, const std::vector<int>& order) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "horner_rewrite of zero polynomial");
    if (static_cast<int>(order.size()) != f.arity())
        throw Error(ErrorCode::InvalidArgument, "horner order arity mismatch");
    return horner_build(f, order, f.arity() - 1);
}

Rat HornerForm::eval(const std::vector<Rat>& point) const {
    if (var < 0) return Rat(constant);
    Rat acc = coeffs.back().eval(point);
    for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it)
        acc = acc * point[var] + it->eval(point);
    return acc;
}

IntervalQ HornerForm::eval_box(const std::vector<IntervalQ>& box) const {
    if (var < 0) return IntervalQ::point(Rat(constant));
    IntervalQ acc = coeffs.back().eval_box(box);
    for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it)
        acc = iv_add(iv_mul(acc, box[var]), it->eval_box(box));
    return acc;
}

std::vector<IntervalQ> eval_interval(const MultiPoly& f, const BoxQ& box, int free_var) {
    if (static_cast<int>(box.arity()) != f.arity() - 1)
        throw Error(ErrorCode::InvalidArgument, "eval_interval: box arity mismatch");
    // box gives intervals for all variables except free_var, in variable order
    std::vector<IntervalQ> full(f.arity());
    {
        size_t j = 0;
        for (int i = 0; i < f.arity(); ++i) {
            if (i == free_var) continue;
            full[i] = box.dims[j++];
        }
    }
    auto cs = f.coeffs_in(free_var);
    std::vector<IntervalQ> out;
    out.reserve(cs.size());
    for (const auto& h : cs) {
        if (h.is_zero()) {
            out.push_back(IntervalQ::point(Rat(0)));
            continue;
        }
        out.push_back(horner_rewrite(h).eval_box(full));
    }
    return out;
}

}  // namespace lur
