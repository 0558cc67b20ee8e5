#include "lorentz/pareto.hpp"

#include <algorithm>
#include <cmath>

namespace lorentz {

Mat2 rotation_r() {
  const double s = 1.0 / std::sqrt(2.0);
  return {s, s, -s, s};
}

Mat2 lorentz_to_pareto(const Mat2& A) {
  const Mat2 r = rotation_r();
  return r * A * transpose(r);
}

namespace {

// Kernel direction of (B - lambda I), taken from the row with the larger
// norm. When both rows vanish (B close to lambda I) every direction works
// and [1 1]^T is the positive representative.
Vec2 kernel_direction(const Mat2& B, double lambda, double tiny) {
  const Mat2 m{B.a - lambda, B.b, B.c, B.d - lambda};
  const double r1 = std::hypot(m.a, m.b);
  const double r2 = std::hypot(m.c, m.d);
  if (std::max(r1, r2) <= tiny) return {1.0, 1.0};
  if (r1 >= r2) return {m.b, -m.a};
  return {m.d, -m.c};
}

}  // namespace

std::vector<double> pareto_spectrum_2x2(const Mat2& B, const Tolerance& tol) {
  std::vector<double> out;

  // Singleton supports: eigenvector e_i, complementarity forces
  // lambda = B_ii, and (B - lambda I) e_i >= 0 reduces to B_ji >= 0.
  if (B.c >= -tol.cone_tol) out.push_back(B.a);  // support {1}
  if (B.b >= -tol.cone_tol) out.push_back(B.d);  // support {2}

  // Full support: a standard eigenvalue with a strictly positive eigenvector.
  const double tr = B.a + B.d;
  const double dt = det(B);
  double disc = tr * tr - 4.0 * dt;
  if (disc >= -tol.eq_tol && disc < 0.0) disc = 0.0;
  if (disc >= 0.0) {
    const double sq = std::sqrt(disc);
    const double roots[2] = {0.5 * (tr - sq), 0.5 * (tr + sq)};
    const double tiny = tol.eq_tol * (1.0 + frobenius_norm(B));
    for (int i = 0; i < 2; ++i) {
      const double lam = roots[i];
      if (i == 1 && std::abs(roots[1] - roots[0]) <= tol.eq_tol) break;
      Vec2 v = kernel_direction(B, lam, tiny + std::abs(lam) * tol.eq_tol);
      const double n = std::hypot(v[0], v[1]);
      if (n == 0.0) continue;
      const double sign =
          (std::abs(v[0]) >= std::abs(v[1]) ? v[0] : v[1]) >= 0.0 ? 1.0 : -1.0;
      v = {sign * v[0] / n, sign * v[1] / n};
      if (v[0] > tol.eq_tol && v[1] > tol.eq_tol) out.push_back(lam);
    }
  }

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [&](double x, double y) {
                          return std::abs(x - y) <= tol.eq_tol;
                        }),
            out.end());
  return out;
}

}  // namespace lorentz
