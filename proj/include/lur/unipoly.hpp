#pragma once

#include "lur/numeric.hpp"

#include <utility>
#include <vector>

namespace lur {

/// Dense univariate polynomial over Z, coefficients ascending.
/// The zero polynomial has an empty coefficient vector and degree -1.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(Int v) { return UniPoly({std::move(v)}); }
    static UniPoly monomial(Int coeff, int deg);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Int& coeff(int i) const;
    const Int& leading() const;
    const std::vector<Int>& coeffs() const { return c_; }

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    UniPoly mul_scalar(const Int& k) const;
    UniPoly mul_xk(int k) const;  // multiply by x^k
    UniPoly derivative() const;

    Rat eval(const Rat& q) const;
    Int eval_int(const Int& v) const;
    /// Exact sign of f(q) without building the rational value.
    int sign_at(const Rat& q) const;

    /// gcd of |coefficients| (0 for the zero polynomial), always >= 0.
    Int content() const;
    /// f / content, normalized to positive leading coefficient.
    UniPoly primitive_part() const;
    /// content carrying the leading-coefficient sign (pp * signed_content == f).
    Int signed_content() const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<Int> c_;
};

/// Exact division: q with a == b*q; throws if the division is not exact.
UniPoly divexact(const UniPoly& a, const UniPoly& b);
/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed fraction-free.
UniPoly prem(const UniPoly& a, const UniPoly& b);

/// Primitive positive-leading-coefficient gcd (integer content of the inputs
/// is deliberately ignored; callers track content separately).
UniPoly gcd_uni(const UniPoly& f, const UniPoly& g);

struct SquarefreeDecomposition {
    Int content;  // signed; content * prod(factor^power) == input
    std::vector<std::pair<UniPoly, int>> factors;  // primitive, squarefree, pairwise coprime, positive lc

    UniPoly reconstruct() const;
    /// Product of the distinct factors (positive lc, primitive).
    UniPoly squarefree_part() const;
};

SquarefreeDecomposition squarefree_decompose(const UniPoly& f);

/// Cauchy bound 1 + max|a_i| / |a_d|: all real roots lie in [-B, B].
Rat root_bound(const UniPoly& f);

/// Positive rational lower bound on the minimal distance between distinct
/// real roots of a squarefree f, deg >= 2 (under-approximation of
/// d^(-(d+2)/2) (d+1)^((1-d)/2) 2^(tau(1-d)) with tau = max coefficient
/// bit length).
Rat separation_bound(const UniPoly& f);

/// Integer-magnitude bit length floor of the separation bound:
/// separation_bound(f) >= 2^-sep_bound_log2_den(f). Used for refinement caps
/// without materializing astronomically small rationals.
long separation_bound_log2(const UniPoly& f);

// ---------------------------------------------------------------------------
// Dense univariate polynomial over Q (bounding polynomials, Yun intermediates)
// ---------------------------------------------------------------------------

class QPoly {
  public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static QPoly from_int(const UniPoly& p);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rat& coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return c_; }

    QPoly operator-() const;
    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    QPoly derivative() const;
    Rat eval(const Rat& q) const;
    int sign_at(const Rat& q) const { return sign(eval(q)); }

    /// Positive common denominator clearing: returns integer polynomial with
    /// the same roots and the same sign everywhere.
    UniPoly clear_denominators() const;

  private:
    void trim();
    std::vector<Rat> c_;
};

}  // namespace lur
