#pragma once

#include "lur/multipoly.hpp"

namespace lur {

/// Resultant of f and g w.r.t. `var`, exact (content not stripped).
/// Subresultant PRS; recursive dense in the eliminated variable, with a
/// dense Z[x] coefficient fast path for bivariate inputs.
/// Throws VariableAbsent unless both inputs have positive degree in var.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var);

/// Reference implementation: Sylvester-matrix determinant by fraction-free
/// (Bareiss) elimination. Used as an independent cross-check oracle.
MultiPoly resultant_sylvester(const MultiPoly& f, const MultiPoly& g, int var);

/// Resultant with a symbolic parameter treated as an extra variable.
/// f, g are expected to be already sheared with the parameter (see
/// shear_symbolic); param must occur in neither input's eliminated variable
/// structure, i.e. it is just carried through the coefficient ring.
MultiPoly resultant_with_parameter(const MultiPoly& f, const MultiPoly& g, int var, int param);

/// Append a fresh parameter variable (new last index) and substitute
/// x_i <- x_i + param * x_{i+1}. Returns the widened sheared polynomial;
/// the parameter index is arity(f) in the result.
MultiPoly shear_symbolic(const MultiPoly& f, int i);

/// res helper tolerating degree-0 inputs in `var` by the convention
/// res(c, g) = c^deg_var(g): used by projection cascades.
MultiPoly resultant_ext(const MultiPoly& f, const MultiPoly& g, int var);

}  // namespace lur
