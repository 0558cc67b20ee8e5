#pragma once

#include "lorentz/core.hpp"

namespace lorentz {

/// The fixed clockwise rotation by pi/4 that carries the Lorentz cone onto
/// the nonnegative orthant: R = (1/sqrt 2) [[1, 1], [-1, 1]]. It maps the
/// boundary rays [1 1]^T and [-1 1]^T to the positive x- and y-axes.
Mat2 rotation_r();

/// Conjugates A into Pareto coordinates: returns R A R^T.
Mat2 lorentz_to_pareto(const Mat2& A);

/// Pareto eigenvalues of B (cone = nonnegative orthant) by support
/// enumeration. Support {i}: candidate B_ii with eigenvector e_i, accepted
/// iff the off-diagonal entry B_ji is nonnegative. Support {1,2}: real
/// characteristic roots whose eigenvector has both components positive after
/// sign normalization. Sorted ascending, deduplicated at eq_tol.
std::vector<double> pareto_spectrum_2x2(const Mat2& B, const Tolerance& tol);

}  // namespace lorentz
