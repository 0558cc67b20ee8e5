#include "doctest.h"

#include <cmath>
#include <vector>

#include "lorentz/spectrum.hpp"

using namespace lorentz;

namespace {

const Tolerance kTol;

const Mat2 kE11{1, 0, 0, 0};
const Mat2 kE12{0, 1, 0, 0};
const Mat2 kE21{0, 0, 1, 0};
const Mat2 kE22{0, 0, 0, 1};
const Mat2 kH{0, 1, 1, 0};  // E12 + E21

bool close(double x, double y, double tol = 1e-9) {
  return std::abs(x - y) <= tol;
}

}  // namespace

TEST_CASE("interior spectrum of the basis matrices") {
  CHECK(interior_spectrum(kE11, kTol) == std::vector<double>{0.0});
  CHECK(interior_spectrum(kE21, kTol) == std::vector<double>{0.0});
  CHECK(interior_spectrum(kE22, kTol) == std::vector<double>{1.0});
  CHECK(interior_spectrum(kH, kTol).empty());
  CHECK(interior_spectrum(Mat2::identity(), kTol) == std::vector<double>{1.0});
}

TEST_CASE("interior values from characteristic roots") {
  // roots of lambda^2 - 1 with |b| = 1/2 < |0 -+ 1| = 1
  const auto vals = interior_spectrum(Mat2(0, 0.5, 2, 0), kTol);
  REQUIRE(vals.size() == 2);
  CHECK(close(vals[0], -1.0));
  CHECK(close(vals[1], 1.0));
}

TEST_CASE("boundary spectrum cases") {
  SUBCASE("E21: single strict type + value") {
    const auto bs = boundary_spectrum(kE21, kTol);
    REQUIRE(bs.size() == 1);
    CHECK(close(bs[0].value, 0.5));
    CHECK(bs[0].boundary_plus);
    CHECK_FALSE(bs[0].boundary_minus);
    CHECK(bs[0].strict_boundary);
  }
  SUBCASE("E11: no boundary values") {
    CHECK(boundary_spectrum(kE11, kTol).empty());
  }
  SUBCASE("identity: one value of both types, non-strict") {
    const auto bs = boundary_spectrum(Mat2::identity(), kTol);
    REQUIRE(bs.size() == 1);
    CHECK(close(bs[0].value, 1.0));
    CHECK(bs[0].boundary_plus);
    CHECK(bs[0].boundary_minus);
    CHECK_FALSE(bs[0].strict_boundary);
  }
  SUBCASE("E22 + (E12+E21): two strict values of opposite type") {
    const auto bs = boundary_spectrum(kE22 + kH, kTol);
    REQUIRE(bs.size() == 2);
    CHECK(close(bs[0].value, -0.5));
    CHECK(bs[0].boundary_minus);
    CHECK(bs[0].strict_boundary);
    CHECK(close(bs[1].value, 1.5));
    CHECK(bs[1].boundary_plus);
    CHECK(bs[1].strict_boundary);
  }
}

TEST_CASE("full spectra of the basis matrices") {
  SUBCASE("E11") {
    const LSpectrum s = l_spectrum(kE11, kTol);
    REQUIRE(s.size() == 1);
    CHECK(close(s.eigenvalues[0].value, 0.0));
    CHECK(s.eigenvalues[0].interior);
    CHECK_FALSE(is_boundary(s.eigenvalues[0]));
  }
  SUBCASE("E21") {
    const LSpectrum s = l_spectrum(kE21, kTol);
    REQUIRE(s.size() == 2);
    CHECK(close(s.eigenvalues[0].value, 0.0));
    CHECK(s.eigenvalues[0].interior);
    CHECK(close(s.eigenvalues[1].value, 0.5));
    CHECK(s.eigenvalues[1].boundary_plus);
    CHECK(s.eigenvalues[1].strict_boundary);
  }
  SUBCASE("E22") {
    const LSpectrum s = l_spectrum(kE22, kTol);
    REQUIRE(s.size() == 2);
    CHECK(close(s.eigenvalues[0].value, 0.5));
    CHECK(is_boundary(s.eigenvalues[0]));
    CHECK(s.eigenvalues[0].strict_boundary);
    CHECK(close(s.eigenvalues[1].value, 1.0));
    CHECK(s.eigenvalues[1].interior);
  }
  SUBCASE("E12 + E21") {
    const LSpectrum s = l_spectrum(kH, kTol);
    REQUIRE(s.size() == 2);
    CHECK(close(s.eigenvalues[0].value, -1.0));
    CHECK(s.eigenvalues[0].boundary_minus);
    CHECK_FALSE(s.eigenvalues[0].interior);
    CHECK_FALSE(s.eigenvalues[0].strict_boundary);
    CHECK(close(s.eigenvalues[1].value, 1.0));
    CHECK(s.eigenvalues[1].boundary_plus);
    CHECK_FALSE(s.eigenvalues[1].strict_boundary);
  }
  SUBCASE("zero matrix: single value carrying every nature") {
    const LSpectrum s = l_spectrum(Mat2(), kTol);
    REQUIRE(s.size() == 1);
    const auto& e = s.eigenvalues[0];
    CHECK(e.value == 0.0);
    CHECK(e.interior);
    CHECK(e.boundary_plus);
    CHECK(e.boundary_minus);
    CHECK_FALSE(e.strict_boundary);
  }
  SUBCASE("E12: single strict type - value") {
    // No eigenvector of the form [x 1]^T exists for the root 0, so the
    // spectrum is pure boundary.
    const LSpectrum s = l_spectrum(kE12, kTol);
    REQUIRE(s.size() == 1);
    CHECK(close(s.eigenvalues[0].value, -0.5));
    CHECK(s.eigenvalues[0].boundary_minus);
    CHECK(s.eigenvalues[0].strict_boundary);
    CHECK_FALSE(s.eigenvalues[0].interior);
  }
}

TEST_CASE("t_conjugate flips the off-diagonal signs") {
  CHECK(t_conjugate(kH) == -kH);
  CHECK(t_conjugate(Mat2::identity()) == Mat2::identity());
  CHECK(t_conjugate(Mat2(1, 2, 3, 4)) == Mat2(1, -2, -3, 4));
}

TEST_CASE("standard eigenvalue test") {
  CHECK(is_standard_eigenvalue(Mat2::identity(), 1.0, kTol));
  CHECK_FALSE(is_standard_eigenvalue(kE21, 0.5, kTol));
  CHECK(is_standard_eigenvalue(kH, 1.0, kTol));
  CHECK(is_standard_eigenvalue(kH, -1.0, kTol));
}

TEST_CASE("interior spectrum reflects under negation") {
  UniformRng rng(46116859);
  for (int i = 0; i < 10000; ++i) {
    const Mat2 A = rng.mat2(-10, 10);
    auto pos = l_spectrum(A, kTol).interior_values();
    auto neg = l_spectrum(-A, kTol).interior_values();
    REQUIRE(pos.size() == neg.size());
    const std::size_t n = pos.size();
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(close(pos[k], -neg[n - 1 - k], 1e-9));
    }
  }
}

TEST_CASE("paired boundary values recover trace and antitrace") {
  UniformRng rng(22801763489ULL);
  int seen = 0;
  for (int i = 0; i < 10000; ++i) {
    const Mat2 A = rng.mat2(-10, 10);
    const LSpectrum s = l_spectrum(A, kTol);
    double plus = 0, minus = 0;
    bool has_plus = false, has_minus = false;
    for (const auto& e : s.eigenvalues) {
      if (e.boundary_plus) {
        plus = e.value;
        has_plus = true;
      }
      if (e.boundary_minus) {
        minus = e.value;
        has_minus = true;
      }
    }
    if (!has_plus || !has_minus) continue;
    ++seen;
    CHECK(close(plus + minus, trace(A), 1e-9));
    CHECK(close(std::abs(plus - minus), std::abs(antitrace(A)), 1e-9));
  }
  CHECK(seen > 1000);  // the sweep must actually exercise the identity
}

TEST_CASE("determinant identity at boundary values") {
  UniformRng rng(87178291199ULL);
  for (int i = 0; i < 10000; ++i) {
    const Mat2 A = rng.mat2(-10, 10);
    const double rhs =
        0.25 * ((A.b - A.c) * (A.b - A.c) - (A.a - A.d) * (A.a - A.d));
    for (const auto& e : l_spectrum(A, kTol).eigenvalues) {
      if (!is_boundary(e)) continue;
      const Mat2 shifted{A.a - e.value, A.b, A.c, A.d - e.value};
      CHECK(close(det(shifted), rhs, 1e-6));
    }
  }
}

TEST_CASE("boundary values are standard eigenvalues exactly when non-strict") {
  struct Case {
    Mat2 m;
    double lambda;
    bool strict;
  };
  const Case cases[] = {
      {kE21, 0.5, true},              // det(A - I/2) = 1/4
      {kE22, 0.5, true},              // det(A - I/2) = -1/4
      {Mat2::identity(), 1.0, false},
      {kH, 1.0, false},
      {kH, -1.0, false},
      {kE22 + kH, 1.5, true},
      {kE22 + kH, -0.5, true},
  };
  for (const auto& cs : cases) {
    CAPTURE(cs.lambda);
    bool found = false;
    for (const auto& e : l_spectrum(cs.m, kTol).eigenvalues) {
      if (!is_boundary(e) || !close(e.value, cs.lambda)) continue;
      found = true;
      CHECK(e.strict_boundary == cs.strict);
      CHECK(is_standard_eigenvalue(cs.m, e.value, kTol) == !cs.strict);
    }
    CHECK(found);
  }
}

TEST_CASE("conjugation by T preserves the spectrum and swaps boundary types") {
  UniformRng rng(2305843009ULL);
  for (int i = 0; i < 10000; ++i) {
    const Mat2 A = rng.mat2(-10, 10);
    const LSpectrum sa = l_spectrum(A, kTol);
    const LSpectrum sb = l_spectrum(t_conjugate(A), kTol);
    REQUIRE(sa.size() == sb.size());
    for (std::size_t k = 0; k < sa.size(); ++k) {
      const auto& p = sa.eigenvalues[k];
      const auto& q = sb.eigenvalues[k];
      CHECK(close(p.value, q.value, 1e-9));
      CHECK(p.interior == q.interior);
      CHECK(p.boundary_plus == q.boundary_minus);
      CHECK(p.boundary_minus == q.boundary_plus);
      CHECK(p.strict_boundary == q.strict_boundary);
    }
  }
}

TEST_CASE("interior values are standard eigenvalues") {
  UniformRng rng(15485863);
  for (int i = 0; i < 10000; ++i) {
    const Mat2 A = rng.mat2(-10, 10);
    for (double v : l_spectrum(A, kTol).interior_values()) {
      CHECK(is_standard_eigenvalue(A, v, kTol));
    }
  }
}

TEST_CASE("the spectrum is never empty and never overfull") {
  UniformRng rng(32452843);
  for (int i = 0; i < 100000; ++i) {
    const Mat2 A = rng.mat2(-10, 10);
    const LSpectrum s = l_spectrum(A, kTol);
    CHECK(s.size() >= 1);
    CHECK(s.interior_values().size() <= 2);
    CHECK(s.boundary_values().size() <= 2);
    for (const auto& e : s.eigenvalues) {
      CHECK((e.interior || is_boundary(e)));
      if (e.strict_boundary) CHECK(is_boundary(e));
    }
  }
}
