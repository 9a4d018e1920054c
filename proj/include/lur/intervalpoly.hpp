#pragma once

#include "lur/multipoly.hpp"
#include "lur/univsolve.hpp"

#include <optional>

namespace lur {

/// Univariate polynomial with interval coefficients over a box, together
/// with its bounding polynomials: lower(x) <= f(x0,x) <= upper(x) for all
/// x >= 0 and x0 in the box.
struct IntervalPoly {
    std::vector<IntervalQ> coeffs;  // A_i, ascending
    QPoly lower;                    // f_I^d = sum lo(A_i) x^i
    QPoly upper;                    // f_I^u = sum hi(A_i) x^i
    MultiPoly source;
    BoxQ box;
    int free_var = -1;

    bool degenerate() const;  // all coefficient intervals are points
};

IntervalPoly build_interval_poly(const MultiPoly& f, const BoxQ& box, int free_var);

struct EffectiveRoot {
    IntervalQ interval;
    bool monotonous = false;
    int orientation = 0;  // +1 increasing, -1 decreasing, 0 none
};

/// Effective real roots over the full real line (the negative axis handled
/// by the x -> -x mirror). Closed rational intervals covering every real
/// root of f(x0, .) for every x0 in the box; requires the leading
/// coefficient interval to exclude zero unless the box is a point.
std::vector<EffectiveRoot> effective_real_roots(const IntervalPoly& ip);

/// Def 2.2 test on an effective root of ip: returns (true, +1) when the
/// lower bounding polynomial is strictly monotone increasing between the
/// anchor roots ((*) holds), (true, -1) for the mirrored condition (**),
/// (false, 0) otherwise. Intervals touching or crossing zero and intervals
/// anchored at the origin or the injected bound are reported non-monotonous.
std::pair<bool, int> is_monotonous(const IntervalPoly& ip, const IntervalQ& interval);

struct CandidateSet {
    BoxQ box;                                      // possibly refined input box
    std::vector<IntervalQ> intervals;              // candidate intervals for free_var
    std::vector<std::vector<EffectiveRoot>> per_poly;
    int refinement_rounds = 0;
    int dropped_leading_terms = 0;
};

/// Real root candidates of the system over one projected-root box.
/// fiber_factor, when given (one-dimensional boxes only), enables the exact
/// leading-coefficient vanishing test and internal box refinement; without
/// it a straddling leading coefficient raises RefineAndRetry for the caller.
CandidateSet candidates_over(const std::vector<MultiPoly>& system, const BoxQ& box, int free_var,
                             const UniPoly* fiber_factor = nullptr);

/// Spec-shaped wrapper: the candidate boxes box x J_j.
std::vector<BoxQ> candidates(const std::vector<MultiPoly>& system, const BoxQ& box, int free_var,
                             const UniPoly* fiber_factor = nullptr);

}  // namespace lur
