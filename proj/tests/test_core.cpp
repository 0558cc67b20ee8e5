#include "doctest.h"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "json.hpp"
#include "lorentz/core.hpp"
#include "lorentz/json_io.hpp"

using namespace lorentz;
using nlohmann::json;

TEST_CASE("Mat2 construction validates entries") {
  const Mat2 z;
  CHECK(z == Mat2(0, 0, 0, 0));
  CHECK(Mat2::identity() == Mat2(1, 0, 0, 1));
  CHECK(Mat2(0, 1, 1, 0) == Mat2(0, 1, 1, 0));  // E12 + E21

  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(Mat2(nan, 0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Mat2(0, inf, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Mat2(0, 0, -inf, 0), std::invalid_argument);
}

TEST_CASE("trace and antitrace") {
  CHECK(trace(Mat2::identity()) == 2.0);
  CHECK(trace(Mat2(1, 2, 3, 4)) == 5.0);
  CHECK(trace(Mat2(0, 0, 1, 0)) == 0.0);

  CHECK(antitrace(Mat2::identity()) == 0.0);
  CHECK(antitrace(Mat2(0, 1, 1, 0)) == 2.0);
  CHECK(antitrace(Mat2(1, 2, 3, 4)) == 5.0);
}

TEST_CASE("trace and antitrace are linear") {
  UniformRng rng(961748927);
  for (int i = 0; i < 2000; ++i) {
    const Mat2 x = rng.mat2(-10, 10);
    const Mat2 y = rng.mat2(-10, 10);
    const double s = rng.uniform(-3, 3);
    const double t = rng.uniform(-3, 3);
    const Mat2 combo = s * x + t * y;
    CHECK(trace(combo) ==
          doctest::Approx(s * trace(x) + t * trace(y)).epsilon(1e-12));
    CHECK(antitrace(combo) ==
          doctest::Approx(s * antitrace(x) + t * antitrace(y)).epsilon(1e-12));
  }
}

TEST_CASE("Tolerance invariants") {
  CHECK_NOTHROW(Tolerance(1e-9, 1e-6, 1e-9));
  CHECK_NOTHROW(Tolerance(1e-6, 1e-6, 0.0));
  CHECK_THROWS_AS(Tolerance(1e-3, 1e-6, 1e-9), std::invalid_argument);
  CHECK_THROWS_AS(Tolerance(0.0, 1e-6, 1e-9), std::invalid_argument);
  CHECK_THROWS_AS(Tolerance(1e-9, 1e-6, -1.0), std::invalid_argument);

  const Tolerance def;
  CHECK(def.eq_tol == 1e-9);
  CHECK(def.set_tol == 1e-6);
  CHECK(def.cone_tol == 1e-9);
}

TEST_CASE("Mat2 JSON round-trips bit-exactly") {
  UniformRng rng(8675309);
  for (int i = 0; i < 500; ++i) {
    const Mat2 m = rng.mat2(-1e6, 1e6);
    const json j = json::parse(json(m).dump());
    const Mat2 back = j.get<Mat2>();
    CHECK(back == m);
  }
  // awkward but representable values survive as well
  const Mat2 tricky(0.1, -1.0 / 3.0, 1e-300, 12345.6789e101);
  CHECK(json::parse(json(tricky).dump()).get<Mat2>() == tricky);
}

TEST_CASE("Mat2 JSON parse rejects bad input") {
  CHECK_THROWS(json::parse(R"({"a":1,"b":2,"c":3})").get<Mat2>());
  CHECK_THROWS(json::parse(R"({"a":"x","b":0,"c":0,"d":0})").get<Mat2>());
}

TEST_CASE("spectrum assembly sorts, merges, and ORs flags") {
  LEigenvalue lo;
  lo.value = 1.0;
  lo.interior = true;
  LEigenvalue hi;
  hi.value = 1.0 + 1e-12;
  hi.boundary_plus = true;
  hi.strict_boundary = true;
  LEigenvalue other;
  other.value = -2.0;
  other.boundary_minus = true;

  const LSpectrum s = make_spectrum({hi, other, lo}, 1e-9);
  REQUIRE(s.size() == 2);
  CHECK(s.eigenvalues[0].value == -2.0);
  CHECK(s.eigenvalues[0].boundary_minus);
  CHECK(s.eigenvalues[1].value == 1.0);
  CHECK(s.eigenvalues[1].interior);
  CHECK(s.eigenvalues[1].boundary_plus);
  CHECK(s.eigenvalues[1].strict_boundary);
  CHECK_FALSE(s.eigenvalues[1].boundary_minus);

  CHECK(s.values() == std::vector<double>{-2.0, 1.0});
  CHECK(s.interior_values() == std::vector<double>{1.0});
  CHECK(s.boundary_values() == std::vector<double>{-2.0, 1.0});
}

TEST_CASE("values_match is a tolerant set comparison") {
  CHECK(values_match({}, {}, 1e-9));
  CHECK(values_match({1.0, 2.0}, {2.0 + 1e-8, 1.0 - 1e-8}, 1e-6));
  CHECK_FALSE(values_match({1.0, 2.0}, {1.0}, 1e-6));
  CHECK_FALSE(values_match({1.0}, {1.0, 5.0}, 1e-6));
  CHECK_FALSE(values_match({1.0}, {1.1}, 1e-6));
}

TEST_CASE("UniformRng is deterministic and in range") {
  UniformRng one(1234);
  UniformRng two(1234);
  for (int i = 0; i < 100; ++i) {
    const double a = one.uniform(-5, 5);
    const double b = two.uniform(-5, 5);
    CHECK(a == b);
    CHECK(a >= -5.0);
    CHECK(a < 5.0);
  }
  const Mat2 m = one.symmetric_mat2(-5, 5);
  CHECK(m.b == m.c);
}
