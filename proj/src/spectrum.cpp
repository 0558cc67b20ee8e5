#include "lorentz/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lorentz {

std::vector<double> interior_spectrum(const Mat2& A, const Tolerance& tol) {
  const double a = A.a, b = A.b, c = A.c, d = A.d;
  std::vector<double> out;

  // lambda = a: eigenvector family [x 1]^T with b = 0 and c*x = a - d.
  if (std::abs(b) <= tol.eq_tol &&
      (std::abs(a - d) <= tol.eq_tol || std::abs(a - d) < std::abs(c))) {
    out.push_back(a);
  }

  // lambda != a: real characteristic roots with |b| < |a - lambda|.
  double disc = (a - d) * (a - d) + 4.0 * b * c;
  if (disc >= -tol.eq_tol && disc < 0.0) disc = 0.0;  // repeated real root
  if (disc >= 0.0) {
    const double sq = std::sqrt(disc);
    const double roots[2] = {0.5 * ((a + d) - sq), 0.5 * ((a + d) + sq)};
    for (int i = 0; i < 2; ++i) {
      const double lam = roots[i];
      if (i == 1 && std::abs(roots[1] - roots[0]) <= tol.eq_tol) break;
      if (std::abs(lam - a) <= tol.eq_tol) continue;  // handled above
      if (std::abs(b) < std::abs(a - lam) - tol.eq_tol) out.push_back(lam);
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

std::vector<LEigenvalue> boundary_spectrum(const Mat2& A, const Tolerance& tol) {
  const double a = A.a, b = A.b, c = A.c, d = A.d;
  std::vector<LEigenvalue> out;

  const double margin_plus = (c - b) - (a - d);
  if (margin_plus >= -tol.eq_tol) {
    LEigenvalue e;
    e.value = 0.5 * ((a + d) + (b + c));
    e.boundary_plus = true;
    e.strict_boundary = margin_plus > tol.eq_tol;
    out.push_back(e);
  }

  const double margin_minus = (b - c) - (a - d);
  if (margin_minus >= -tol.eq_tol) {
    LEigenvalue e;
    e.value = 0.5 * ((a + d) - (b + c));
    e.boundary_minus = true;
    e.strict_boundary = margin_minus > tol.eq_tol;
    out.push_back(e);
  }

  return make_spectrum(std::move(out), tol.eq_tol).eigenvalues;
}

LSpectrum l_spectrum(const Mat2& A, const Tolerance& tol) {
  std::vector<LEigenvalue> eigs = boundary_spectrum(A, tol);
  for (double v : interior_spectrum(A, tol)) {
    LEigenvalue e;
    e.value = v;
    e.interior = true;
    eigs.push_back(e);
  }
  LSpectrum spec = make_spectrum(std::move(eigs), tol.eq_tol);
  if (spec.eigenvalues.empty()) {
    throw std::logic_error("empty Lorentz spectrum: classification bug");
  }
  return spec;
}

Mat2 t_conjugate(const Mat2& A) { return {A.a, -A.b, -A.c, A.d}; }

bool is_standard_eigenvalue(const Mat2& A, double lambda, const Tolerance& tol) {
  const Mat2 shifted{A.a - lambda, A.b, A.c, A.d - lambda};
  const double f = frobenius_norm(A);
  return std::abs(det(shifted)) <= tol.set_tol * std::max(1.0, f * f);
}

}  // namespace lorentz
