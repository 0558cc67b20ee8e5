#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace lorentz {

using Vec2 = std::array<double, 2>;

/// Dense 2x2 real matrix, row-major entries [[a, b], [c, d]].
/// Construction rejects non-finite entries.
struct Mat2 {
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;

  Mat2() = default;
  Mat2(double a_, double b_, double c_, double d_);

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
};

Mat2 operator+(const Mat2& x, const Mat2& y);
Mat2 operator-(const Mat2& x, const Mat2& y);
Mat2 operator-(const Mat2& x);
Mat2 operator*(double s, const Mat2& x);
Mat2 operator*(const Mat2& x, const Mat2& y);
Vec2 operator*(const Mat2& m, const Vec2& v);
bool operator==(const Mat2& x, const Mat2& y);

double trace(const Mat2& m);      ///< a + d
double antitrace(const Mat2& m);  ///< b + c
double det(const Mat2& m);
Mat2 transpose(const Mat2& m);
double frobenius_norm(const Mat2& m);

double dot(const Vec2& x, const Vec2& y);
double norm_sq(const Vec2& x);

/// Comparison thresholds shared by every classification routine: eq_tol for
/// scalar equality and inequality slack, set_tol for spectrum matching,
/// cone_tol for cone-membership slack. Requires 0 < eq_tol <= set_tol and
/// cone_tol >= 0.
struct Tolerance {
  double eq_tol = 1e-9;
  double set_tol = 1e-6;
  double cone_tol = 1e-9;

  Tolerance() = default;
  Tolerance(double eq, double set, double cone);
};

/// A Lorentz eigenvalue together with its nature. `interior` marks values
/// carried by an eigenvector strictly inside the cone; boundary_plus and
/// boundary_minus mark the two boundary families with eigenvector [+1 1]^T
/// resp. [-1 1]^T. A strict boundary value is one whose defining inequality
/// holds with positive clearance.
struct LEigenvalue {
  double value = 0.0;
  bool interior = false;
  bool boundary_plus = false;
  bool boundary_minus = false;
  bool strict_boundary = false;
};

bool is_boundary(const LEigenvalue& e);

/// Finite set of Lorentz eigenvalues, sorted ascending, deduplicated at
/// eq_tol with nature flags merged by logical OR. Nonempty for every Mat2.
struct LSpectrum {
  std::vector<LEigenvalue> eigenvalues;

  std::vector<double> values() const;
  std::vector<double> interior_values() const;
  std::vector<double> boundary_values() const;
  std::size_t size() const { return eigenvalues.size(); }
};

/// Sorts candidates ascending (boundary type - ahead of type + on value
/// ties), then merges values closer than eq_tol left to right, OR-ing flags.
LSpectrum make_spectrum(std::vector<LEigenvalue> eigs, double eq_tol);

/// Witness for a boundary eigenvalue: eigenvector [x 1]^T with x in {-1, +1}
/// and slack s >= 0 in (A - lambda I)[x 1]^T = s [-x 1]^T. s is clamped to 0
/// when |s| <= cone_tol.
struct BoundaryCertificate {
  double x = 1.0;
  double s = 0.0;
};

/// True iff every element of xs has a partner in ys within tol and vice
/// versa (set equality up to tol; duplicates are not counted).
bool values_match(const std::vector<double>& xs, const std::vector<double>& ys,
                  double tol);

/// True iff the spectra have equal size and, pairwise in sorted order, values
/// within tol and identical nature flags.
bool spectra_match(const LSpectrum& x, const LSpectrum& y, double tol);

/// Deterministic uniform sampler. Draws use 53 mantissa bits of mt19937_64
/// output so streams are reproducible across platforms. Matrix entries are
/// drawn in order a, b, c, d.
class UniformRng {
 public:
  explicit UniformRng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi);
  Mat2 mat2(double lo, double hi);
  Mat2 symmetric_mat2(double lo, double hi);  // draws a, b, d and sets c = b

 private:
  std::mt19937_64 gen_;
};

}  // namespace lorentz
