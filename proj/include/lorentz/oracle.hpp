#pragma once

#include <optional>

#include "lorentz/core.hpp"

namespace lorentz {

/// Settings for the definitional spectrum search.
struct OracleConfig {
  int grid_points = 2001;    // odd and >= 101 so 0 and +-1 are on-grid
  double lambda_pad = 1.0;   // padding added to the Gershgorin bounds
  double residual_tol = 1e-9;

  OracleConfig() = default;
  OracleConfig(int grid, double pad, double residual);
};

/// Checks the defining conditions of a Lorentz eigenpair directly:
/// x in K, (A - lambda I) x in K, and x^T (A - lambda I) x = 0, each within
/// cone_tol resp. set_tol * (1 + ||A||_F) * ||x||^2. Throws on x = 0.
bool verify_eigenpair(const Mat2& A, double lambda, const Vec2& x,
                      const Tolerance& tol);

/// Searches for a boundary witness (x, s) with x in {-1, +1} satisfying
/// (A - lambda I)[x 1]^T = s [-x 1]^T. For x = +1 the two components force
/// s = lambda-a-b and s = c+d-lambda; for x = -1 they force s = lambda-a+b
/// and s = d-c-lambda. The first x (taken in order +1, -1) whose two slack
/// values agree within set_tol and satisfy s >= -cone_tol yields the
/// certificate, with s clamped to 0 when |s| <= cone_tol.
std::optional<BoundaryCertificate> boundary_certificate(const Mat2& A,
                                                        double lambda,
                                                        const Tolerance& tol);

/// Ground-truth spectrum finder that never consults the closed-form
/// classification. Interior candidates come from the characteristic roots via
/// the quadratic formula on trace and determinant, each accepted only when an
/// eigenvector [x1 1]^T with |x1| < 1 - eq_tol exists and verify_eigenpair
/// passes; the degenerate family at lambda = a (possible only when b = 0) is
/// located by scanning x1 over the grid for a zero crossing of the second
/// eigen-equation. Boundary candidates are the two values forced by the
/// certificate equations themselves, accepted iff a certificate exists, and
/// every accepted value is re-verified with its recovered eigenvector.
LSpectrum oracle_spectrum(const Mat2& A, const OracleConfig& cfg,
                          const Tolerance& tol);

}  // namespace lorentz
