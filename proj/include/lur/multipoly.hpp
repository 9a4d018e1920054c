#pragma once

#include "lur/numeric.hpp"
#include "lur/unipoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace lur {

using ExpVec = std::vector<unsigned>;

/// Sparse multivariate polynomial over Z with a fixed variable arity.
/// Variables are indices 0..arity-1 in the order x1 < x2 < ... < xn;
/// names live at the CLI boundary.
class MultiPoly {
  public:
    explicit MultiPoly(int arity = 1) : arity_(arity) {}
    static MultiPoly constant(int arity, Int v);
    static MultiPoly variable(int arity, int var);
    static MultiPoly monomial(int arity, ExpVec e, Int coeff);
    static MultiPoly from_unipoly(const UniPoly& p, int arity, int var);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const std::map<ExpVec, Int>& terms() const { return terms_; }

    void add_term(const ExpVec& e, const Int& c);

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    bool operator==(const MultiPoly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }

    MultiPoly mul_scalar(const Int& k) const;

    int degree(int var) const;        // -1 for the zero polynomial
    int total_degree() const;         // -1 for the zero polynomial
    bool depends_on(int var) const { return degree(var) > 0; }

    /// Dense coefficient list in `var`, ascending; entries keep the arity
    /// with exponent 0 in `var`.
    std::vector<MultiPoly> coeffs_in(int var) const;
    static MultiPoly from_coeffs_in(int var, int arity, const std::vector<MultiPoly>& cs);

    MultiPoly derivative(int var) const;
    /// Substitute an integer for `var` (arity preserved, var vanishes).
    MultiPoly subst_int(int var, const Int& v) const;
    Rat eval(const std::vector<Rat>& point) const;

    /// gcd of coefficient magnitudes (integer content), >= 0.
    Int int_content() const;
    MultiPoly int_primitive_part() const;
    /// sign of the lex-leading coefficient (0 for zero).
    int lex_leading_sign() const;
    /// integer-primitive with positive lex-leading coefficient
    MultiPoly normalized() const;

    /// Exact substitution of a rational for `var`: returns the univariate
    /// polynomial (over Q) in `free_var` obtained from f(...,v=q,...);
    /// all variables except free_var and var must be absent.
    QPoly specialize_to_qpoly(int var, const Rat& q, int free_var) const;

    UniPoly to_unipoly(int var) const;

    /// Extend the arity by appending fresh trailing variables.
    MultiPoly widened(int new_arity) const;

    std::string to_string(const std::vector<std::string>& names) const;

  private:
    int arity_;
    std::map<ExpVec, Int> terms_;
};

/// Shear substitution x_i <- x_i + s * x_{i+1} (0-based i, i+1 < arity).
/// s must be an integer rational; exact, bijective, inverse is shear(.,-s,i).
MultiPoly shear(const MultiPoly& f, const Rat& s, int i);

/// Exact multivariate division (throws if not exact).
MultiPoly divexact(const MultiPoly& a, const MultiPoly& b);

/// Primitive gcd via recursive subresultant PRS with content splitting;
/// result normalized (integer-primitive, positive lex-leading coefficient).
MultiPoly gcd_multi(const MultiPoly& f, const MultiPoly& g);

// ---------------------------------------------------------------------------
// Horner forms
// ---------------------------------------------------------------------------

/// Nested evaluation tree; the node variable is the highest variable of the
/// subtree, its coefficients are Horner forms over the lower variables.
struct HornerForm {
    int var = -1;                     // -1: constant leaf
    Int constant;                     // leaf payload
    std::vector<HornerForm> coeffs;   // coefficient of var^k at index k

    Rat eval(const std::vector<Rat>& point) const;
    IntervalQ eval_box(const std::vector<IntervalQ>& box) const;
};

/// order[i] gives the i-th variable in the Horner order (innermost first);
/// defaults to 0,1,...,arity-1. Errors on the zero polynomial.
HornerForm horner_rewrite(const MultiPoly& f);
HornerForm horner_rewrite(const MultiPoly& f, const std::vector<int>& order);

/// Coefficient intervals of f viewed as a polynomial in free_var over the
/// box (one interval per remaining variable, in variable order): entry i
/// encloses h_i(x0) for every x0 in the box.
std::vector<IntervalQ> eval_interval(const MultiPoly& f, const BoxQ& box, int free_var);

}  // namespace lur
