#pragma once

#include "lorentz/core.hpp"

namespace lorentz {

/// Interior Lorentz eigenvalues of A in closed form, sorted ascending.
///
/// The entry a is interior iff b = 0 and (a = d or |a - d| < |c|). Any other
/// interior value is a real characteristic root lambda != a satisfying
/// |b| < |a - lambda|; the two cases are dispatched on |lambda - a| <= eq_tol.
std::vector<double> interior_spectrum(const Mat2& A, const Tolerance& tol);

/// Boundary Lorentz eigenvalues of A, sorted ascending and merged at eq_tol.
///
/// Type +: lambda = (a+d+b+c)/2, admitted iff a-d <= c-b (with eq_tol slack),
/// strict iff a-d < c-b by more than eq_tol. Type -: lambda = (a+d-b-c)/2
/// with the mirrored condition a-d <= b-c. A value carrying both types is
/// strict iff at least one of the two inequalities is strict.
std::vector<LEigenvalue> boundary_spectrum(const Mat2& A, const Tolerance& tol);

/// Full Lorentz spectrum: union of interior and boundary values with nature
/// flags, sorted and deduplicated. Throws std::logic_error if the union is
/// empty; every 2x2 matrix has at least one Lorentz eigenvalue, so an empty
/// union indicates an implementation bug.
LSpectrum l_spectrum(const Mat2& A, const Tolerance& tol);

/// Conjugation by T = diag(-1, 1): flips the signs of both off-diagonal
/// entries. Preserves the Lorentz spectrum and eigenvalue nature while
/// exchanging boundary types + and -.
Mat2 t_conjugate(const Mat2& A);

/// True iff lambda is a root of the characteristic polynomial, tested as
/// |det(A - lambda I)| <= set_tol * max(1, ||A||_F^2).
bool is_standard_eigenvalue(const Mat2& A, double lambda, const Tolerance& tol);

}  // namespace lorentz
