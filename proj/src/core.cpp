#include "lorentz/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lorentz {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + " must be finite");
  }
}

}  // namespace

Mat2::Mat2(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {
  require_finite(a, "Mat2 entry a");
  require_finite(b, "Mat2 entry b");
  require_finite(c, "Mat2 entry c");
  require_finite(d, "Mat2 entry d");
}

Mat2 operator+(const Mat2& x, const Mat2& y) {
  return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
}

Mat2 operator-(const Mat2& x, const Mat2& y) {
  return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
}

Mat2 operator-(const Mat2& x) { return {-x.a, -x.b, -x.c, -x.d}; }

Mat2 operator*(double s, const Mat2& x) {
  return {s * x.a, s * x.b, s * x.c, s * x.d};
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Vec2 operator*(const Mat2& m, const Vec2& v) {
  return {m.a * v[0] + m.b * v[1], m.c * v[0] + m.d * v[1]};
}

bool operator==(const Mat2& x, const Mat2& y) {
  return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}

double trace(const Mat2& m) { return m.a + m.d; }

double antitrace(const Mat2& m) { return m.b + m.c; }

double det(const Mat2& m) { return m.a * m.d - m.b * m.c; }

Mat2 transpose(const Mat2& m) { return {m.a, m.c, m.b, m.d}; }

double frobenius_norm(const Mat2& m) {
  return std::sqrt(m.a * m.a + m.b * m.b + m.c * m.c + m.d * m.d);
}

double dot(const Vec2& x, const Vec2& y) { return x[0] * y[0] + x[1] * y[1]; }

double norm_sq(const Vec2& x) { return x[0] * x[0] + x[1] * x[1]; }

Tolerance::Tolerance(double eq, double set, double cone)
    : eq_tol(eq), set_tol(set), cone_tol(cone) {
  if (!(std::isfinite(eq) && eq > 0.0)) {
    throw std::invalid_argument("eq_tol must be positive");
  }
  if (!(std::isfinite(set) && set > 0.0)) {
    throw std::invalid_argument("set_tol must be positive");
  }
  if (!(std::isfinite(cone) && cone >= 0.0)) {
    throw std::invalid_argument("cone_tol must be nonnegative");
  }
  if (eq > set) {
    throw std::invalid_argument("eq_tol must not exceed set_tol");
  }
}

bool is_boundary(const LEigenvalue& e) {
  return e.boundary_plus || e.boundary_minus;
}

std::vector<double> LSpectrum::values() const {
  std::vector<double> out;
  out.reserve(eigenvalues.size());
  for (const auto& e : eigenvalues) out.push_back(e.value);
  return out;
}

std::vector<double> LSpectrum::interior_values() const {
  std::vector<double> out;
  for (const auto& e : eigenvalues) {
    if (e.interior) out.push_back(e.value);
  }
  return out;
}

std::vector<double> LSpectrum::boundary_values() const {
  std::vector<double> out;
  for (const auto& e : eigenvalues) {
    if (is_boundary(e)) out.push_back(e.value);
  }
  return out;
}

LSpectrum make_spectrum(std::vector<LEigenvalue> eigs, double eq_tol) {
  auto tie_rank = [](const LEigenvalue& e) {
    return (e.boundary_minus && !e.boundary_plus) ? 0 : 1;
  };
  std::stable_sort(eigs.begin(), eigs.end(),
                   [&](const LEigenvalue& x, const LEigenvalue& y) {
                     if (x.value != y.value) return x.value < y.value;
                     return tie_rank(x) < tie_rank(y);
                   });
  LSpectrum out;
  for (const auto& e : eigs) {
    if (!out.eigenvalues.empty() &&
        e.value - out.eigenvalues.back().value <= eq_tol) {
      auto& last = out.eigenvalues.back();
      last.interior = last.interior || e.interior;
      last.boundary_plus = last.boundary_plus || e.boundary_plus;
      last.boundary_minus = last.boundary_minus || e.boundary_minus;
      last.strict_boundary = last.strict_boundary || e.strict_boundary;
    } else {
      out.eigenvalues.push_back(e);
    }
  }
  return out;
}

bool values_match(const std::vector<double>& xs, const std::vector<double>& ys,
                  double tol) {
  auto covered = [tol](const std::vector<double>& from,
                       const std::vector<double>& in) {
    for (double v : from) {
      bool hit = false;
      for (double w : in) {
        if (std::abs(v - w) <= tol) {
          hit = true;
          break;
        }
      }
      if (!hit) return false;
    }
    return true;
  };
  return covered(xs, ys) && covered(ys, xs);
}

bool spectra_match(const LSpectrum& x, const LSpectrum& y, double tol) {
  if (x.eigenvalues.size() != y.eigenvalues.size()) return false;
  for (std::size_t i = 0; i < x.eigenvalues.size(); ++i) {
    const auto& p = x.eigenvalues[i];
    const auto& q = y.eigenvalues[i];
    if (std::abs(p.value - q.value) > tol) return false;
    if (p.interior != q.interior || p.boundary_plus != q.boundary_plus ||
        p.boundary_minus != q.boundary_minus ||
        p.strict_boundary != q.strict_boundary) {
      return false;
    }
  }
  return true;
}

double UniformRng::uniform(double lo, double hi) {
  const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

Mat2 UniformRng::mat2(double lo, double hi) {
  const double a = uniform(lo, hi);
  const double b = uniform(lo, hi);
  const double c = uniform(lo, hi);
  const double d = uniform(lo, hi);
  return {a, b, c, d};
}

Mat2 UniformRng::symmetric_mat2(double lo, double hi) {
  const double a = uniform(lo, hi);
  const double b = uniform(lo, hi);
  const double d = uniform(lo, hi);
  return {a, b, b, d};
}

}  // namespace lorentz
