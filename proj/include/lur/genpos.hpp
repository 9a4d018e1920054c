#pragma once

#include "lur/resultant.hpp"
#include "lur/univsolve.hpp"

namespace lur {

struct ShearChoice {
    Rat s;
    bool certified = false;
    int attempts = 0;
    IntervalSet nongeneric_set;
};

/// pi_1(phi_{s,2}(J x K)): [a+sc, b+sd] for s >= 0, [a+sd, b+sc] for s < 0.
IntervalQ project_sheared(const BoxQ& box2, const Rat& s);

/// The exact set of shear values s for which the projected intervals of the
/// two boxes overlap (piecewise-linear inequalities solved on s>=0 / s<0).
IntervalSet nongeneric_pair(const BoxQ& L1, const BoxQ& L2);

/// Union of nongeneric_pair over all unordered pairs.
IntervalSet nongeneric_union(const std::vector<BoxQ>& boxes);

/// Nonzero integer of minimal absolute value outside S, ties broken toward
/// the positive value; tries |s| = 1..cap and signals RefineAndRetry when
/// none qualifies.
ShearChoice choose_s(const IntervalSet& S, int cap);

/// Next integer outside S after `prev` in the +1,-1,+2,-2,... order,
/// up to |s| <= cap.
std::optional<Rat> next_integer_outside(const IntervalSet& S, const Rat& prev, long cap);

/// True when the degree of f in the sheared variable pair is preserved by
/// x_i <- x_i + s0 x_{i+1}: the top-degree form does not vanish at (s0, 1).
bool shear_degree_safe(const MultiPoly& f, int i, const Rat& s0);

/// Corollary 3.3 fast path: {f,g} already in generic position when
/// res_y(f,g) is squarefree and the leading coefficients w.r.t. y are
/// coprime. R1 is the precomputed resultant.
bool corollary33_generic(const MultiPoly& f, const MultiPoly& g, const UniPoly& R1);

/// Caches the parametric sheared resultant Rbar_s and its squarefree part
/// (w.r.t. x over Z[s]) for a bivariate pair; certification specializes per
/// attempted s.
class GenericityChecker {
  public:
    /// Throws NotZeroDimensional when the parametric resultant vanishes.
    GenericityChecker(const MultiPoly& f, const MultiPoly& g);

    /// Lemma 3.2 test at integer s0; returns {certified, working R2} where
    /// R2 is the specialization of Rbar_s at s0 (multiplicities intact).
    std::pair<bool, UniPoly> certify(const Rat& s0) const;

    /// Specialization of the squarefree part at s0 (content-free).
    UniPoly squarefree_at(const Rat& s0) const;

  private:
    MultiPoly rbar_;      // in (x, y, s); y unused
    MultiPoly sqfree_;    // squarefree part w.r.t. x over Z[s]
    int sqfree_deg_x_ = 0;
};

/// One-shot form of the Lemma 3.2 test.
std::pair<bool, UniPoly> certify_generic(const MultiPoly& f, const MultiPoly& g, const Rat& s0);

}  // namespace lur
