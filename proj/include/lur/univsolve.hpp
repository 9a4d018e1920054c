#pragma once

#include "lur/unipoly.hpp"

#include <optional>
#include <vector>

namespace lur {

struct UniRoot {
    IntervalQ interval;       // aligned dyadic cell with the root interior, or a point
    int multiplicity = 1;
    UniPoly defining_factor;  // squarefree primitive factor owning the root
};

/// Isolate all real roots of f with multiplicities, sorted ascending.
/// Non-point intervals are aligned dyadic cells of width <= max_width
/// (default 2^-10) with the root strictly inside and sign changes at the
/// endpoints; rational roots come back as point intervals. Intervals of
/// distinct roots are pairwise disjoint.
std::vector<UniRoot> isolate(const UniPoly& f, const std::optional<Rat>& max_width = std::nullopt);

/// Bisection refinement; never loses the root, returns a sub-interval of
/// width <= target_width (point intervals and already-tight roots pass
/// through unchanged).
UniRoot refine(const UniRoot& root, const Rat& target_width);

int sign_at(const UniPoly& f, const Rat& q);

/// Number of distinct real roots of f in the closed interval.
int count_roots_in(const UniPoly& f, const IntervalQ& interval);

/// The distinct real roots of f lying in the closed interval, sorted, with
/// isolating intervals refined enough to decide membership exactly.
std::vector<UniRoot> roots_in(const UniPoly& f, const IntervalQ& interval);

/// Isolating cells of a primitive squarefree polynomial (internal engine,
/// exposed for the interval-polynomial machinery and tests).
std::vector<IntervalQ> isolate_squarefree(const UniPoly& F, const Rat& max_width);

}  // namespace lur
