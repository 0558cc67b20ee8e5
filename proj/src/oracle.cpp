#include "lorentz/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lorentz {

OracleConfig::OracleConfig(int grid, double pad, double residual)
    : grid_points(grid), lambda_pad(pad), residual_tol(residual) {
  if (grid < 101 || grid % 2 == 0) {
    throw std::invalid_argument("grid_points must be odd and >= 101");
  }
  if (!(std::isfinite(pad) && pad >= 0.0)) {
    throw std::invalid_argument("lambda_pad must be nonnegative");
  }
  if (!(std::isfinite(residual) && residual > 0.0)) {
    throw std::invalid_argument("residual_tol must be positive");
  }
}

bool verify_eigenpair(const Mat2& A, double lambda, const Vec2& x,
                      const Tolerance& tol) {
  if (x[0] == 0.0 && x[1] == 0.0) {
    throw std::invalid_argument("eigenvector must be nonzero");
  }
  if (std::abs(x[0]) > x[1] + tol.cone_tol) return false;
  const Mat2 shifted{A.a - lambda, A.b, A.c, A.d - lambda};
  const Vec2 y = shifted * x;
  if (std::abs(y[0]) > y[1] + tol.cone_tol) return false;
  const double bound = tol.set_tol * (1.0 + frobenius_norm(A)) * norm_sq(x);
  return std::abs(dot(x, y)) <= bound;
}

namespace {

struct SlackPair {
  double s1 = 0.0;
  double s2 = 0.0;
};

// The two components of (A - lambda I)[x 1]^T = s [-x 1]^T solved for s.
SlackPair certificate_slacks(const Mat2& A, double lambda, double x) {
  if (x > 0.0) {
    return {lambda - A.a - A.b, A.c + A.d - lambda};
  }
  return {lambda - A.a + A.b, A.d - A.c - lambda};
}

std::optional<BoundaryCertificate> certificate_at(const Mat2& A, double lambda,
                                                  double x,
                                                  const Tolerance& tol) {
  const SlackPair sp = certificate_slacks(A, lambda, x);
  if (std::abs(sp.s1 - sp.s2) > tol.set_tol) return std::nullopt;
  double s = 0.5 * (sp.s1 + sp.s2);
  if (s < -tol.cone_tol) return std::nullopt;
  if (std::abs(s) <= tol.cone_tol) s = 0.0;
  return BoundaryCertificate{x, s};
}

}  // namespace

std::optional<BoundaryCertificate> boundary_certificate(const Mat2& A,
                                                        double lambda,
                                                        const Tolerance& tol) {
  if (!std::isfinite(lambda)) {
    throw std::invalid_argument("lambda must be finite");
  }
  for (double x : {1.0, -1.0}) {
    if (auto cert = certificate_at(A, lambda, x, tol)) return cert;
  }
  return std::nullopt;
}

LSpectrum oracle_spectrum(const Mat2& A, const OracleConfig& cfg,
                          const Tolerance& tol) {
  const double a = A.a, b = A.b, c = A.c, d = A.d;
  const double scale = 1.0 + frobenius_norm(A);
  std::vector<LEigenvalue> found;

  // Search bounds: every Lorentz eigenvalue of a 2x2 matrix lies inside the
  // Gershgorin hull, padded for slack.
  const double lo =
      std::min(a - std::abs(b), d - std::abs(c)) - cfg.lambda_pad;
  const double hi =
      std::max(a + std::abs(b), d + std::abs(c)) + cfg.lambda_pad;
  auto in_bounds = [&](double lam) { return lam >= lo && lam <= hi; };

  auto residual_ok = [&](double lam, const Vec2& x) {
    const Mat2 shifted{a - lam, b, c, d - lam};
    const Vec2 y = shifted * x;
    const double r = std::max(std::abs(y[0]), std::abs(y[1]));
    return r <= cfg.residual_tol * scale;
  };

  auto push_interior = [&](double lam) {
    LEigenvalue e;
    e.value = lam;
    e.interior = true;
    found.push_back(e);
  };

  // Interior candidates: characteristic roots via the quadratic formula.
  const double tr = a + d;
  const double dt = a * d - b * c;
  double disc = tr * tr - 4.0 * dt;
  if (disc >= -tol.eq_tol && disc < 0.0) disc = 0.0;
  if (disc >= 0.0) {
    const double sq = std::sqrt(disc);
    const double roots[2] = {0.5 * (tr - sq), 0.5 * (tr + sq)};
    for (int i = 0; i < 2; ++i) {
      const double lam = roots[i];
      if (i == 1 && std::abs(roots[1] - roots[0]) <= tol.eq_tol) break;
      if (std::abs(lam - a) <= tol.eq_tol) continue;  // degenerate family below
      const double x1 = b / (lam - a);  // from (a - lambda) x1 + b = 0
      if (std::abs(x1) >= 1.0 - tol.eq_tol) continue;
      const Vec2 x{x1, 1.0};
      if (in_bounds(lam) && residual_ok(lam, x) &&
          verify_eigenpair(A, lam, x, tol)) {
        push_interior(lam);
      }
    }
  }

  // Degenerate family lambda = a, which requires b = 0: the remaining
  // eigen-equation is g(x1) = c x1 + (d - a) = 0. Scan the grid for a zero
  // crossing inside (-1, 1), then solve the bracketed linear equation.
  if (std::abs(b) <= tol.eq_tol) {
    const int n = cfg.grid_points;
    auto grid_x = [&](int i) {
      return -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(n - 1);
    };
    auto g = [&](double x1) { return c * x1 + (d - a); };
    bool have_candidate = false;
    double x_star = 0.0;
    if (std::abs(c) <= tol.eq_tol) {
      // g is constant on the grid; the family exists iff it vanishes.
      if (std::abs(d - a) <= tol.eq_tol) {
        have_candidate = true;
        x_star = 0.0;
      }
    } else {
      for (int i = 0; i + 1 < n; ++i) {
        const double g0 = g(grid_x(i));
        const double g1 = g(grid_x(i + 1));
        if (g0 == 0.0 || g0 * g1 < 0.0 || g1 == 0.0) {
          x_star = (a - d) / c;  // exact root of the bracketed linear g
          have_candidate = true;
          break;
        }
      }
    }
    if (have_candidate && std::abs(x_star) < 1.0 - tol.eq_tol) {
      const Vec2 x{x_star, 1.0};
      if (in_bounds(a) && residual_ok(a, x) && verify_eigenpair(A, a, x, tol)) {
        push_interior(a);
      }
    }
  }

  // Boundary candidates: the certificate equations for x = +-1 each pin
  // lambda to the value where both slack expressions coincide.
  for (double xsign : {1.0, -1.0}) {
    const double lam =
        xsign > 0.0 ? 0.5 * (a + b + c + d) : 0.5 * ((a + d) - (b + c));
    const auto cert = certificate_at(A, lam, xsign, tol);
    if (!cert) continue;
    const Vec2 x{cert->x, 1.0};
    if (!in_bounds(lam) || !verify_eigenpair(A, lam, x, tol)) continue;
    LEigenvalue e;
    e.value = lam;
    e.boundary_plus = xsign > 0.0;
    e.boundary_minus = xsign < 0.0;
    // Slack s equals half the classification margin, so strictness needs
    // clearance eq_tol / 2.
    e.strict_boundary = cert->s > 0.5 * tol.eq_tol;
    found.push_back(e);
  }

  return make_spectrum(std::move(found), tol.eq_tol);
}

}  // namespace lorentz
