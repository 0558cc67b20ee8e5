#include "lorentz/preserver.hpp"

#include <cmath>
#include <stdexcept>

#include "lorentz/spectrum.hpp"

namespace lorentz {

namespace {

std::array<double, 4> m2_coords(const Mat2& A) { return {A.a, A.b, A.c, A.d}; }

constexpr double kS2Identity[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
constexpr double kS2TConj[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, -1}};

}  // namespace

PreserverForm make_preserver(PreserverKind kind, double beta) {
  if (!std::isfinite(beta)) {
    throw std::invalid_argument("beta must be finite");
  }
  PreserverForm f;
  f.kind = kind;
  f.beta = beta;
  f.alpha = std::sqrt(1.0 + beta * beta);
  return f;
}

Mat2 conjugation_matrix(const PreserverForm& f) {
  if (f.kind == PreserverKind::P) {
    return {f.alpha, f.beta, f.beta, f.alpha};
  }
  return {-f.alpha, -f.beta, f.beta, f.alpha};
}

LinMapM2 preserver_to_linmap(const PreserverForm& f) {
  // det P = 1, so P^{-1} = [[alpha, -beta], [-beta, alpha]] and the entries
  // of A -> P A P^{-1} depend only on alpha^2 = 1 + beta^2, beta^2, and
  // alpha*beta. Using 1 + beta^2 directly keeps trace identities exact.
  const double b2 = f.beta * f.beta;
  const double a2 = 1.0 + b2;
  const double ab = f.alpha * f.beta;
  LinMapM2 m;
  m.coeffs = {{{{a2, -ab, ab, -b2}},
               {{-ab, a2, -b2, ab}},
               {{ab, -b2, a2, -ab}},
               {{-b2, ab, -ab, a2}}}};
  if (f.kind == PreserverKind::Q) {
    // Q = T P, so the Q map is the P map followed by conjugation with
    // T = diag(-1, 1), which flips the signs of the b and c coordinates.
    for (int j = 0; j < 4; ++j) {
      m.coeffs[1][j] = -m.coeffs[1][j];
      m.coeffs[2][j] = -m.coeffs[2][j];
    }
  }
  return m;
}

LinMapS2 preserver_to_linmap_s2(const PreserverForm& f) {
  if (f.beta != 0.0) {
    throw std::invalid_argument(
        "conjugation with beta != 0 does not map S2 into itself");
  }
  LinMapS2 m;
  const auto& src = f.kind == PreserverKind::P ? kS2Identity : kS2TConj;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m.coeffs[i][j] = src[i][j];
  }
  return m;
}

Mat2 apply_map(const LinMapM2& m, const Mat2& A) {
  const auto x = m2_coords(A);
  std::array<double, 4> y{};
  for (int i = 0; i < 4; ++i) {
    double acc = 0.0;
    for (int j = 0; j < 4; ++j) acc += m.coeffs[i][j] * x[j];
    y[i] = acc;
  }
  return {y[0], y[1], y[2], y[3]};
}

Mat2 apply_map(const LinMapS2& m, const Mat2& A, const Tolerance& tol) {
  if (std::abs(A.b - A.c) > tol.eq_tol) {
    throw std::invalid_argument("S2 map applied to a non-symmetric matrix");
  }
  const std::array<double, 3> x{A.a, A.d, A.b};
  std::array<double, 3> y{};
  for (int i = 0; i < 3; ++i) {
    double acc = 0.0;
    for (int j = 0; j < 3; ++j) acc += m.coeffs[i][j] * x[j];
    y[i] = acc;
  }
  return {y[0], y[2], y[2], y[1]};
}

Mat2 apply_form(const PreserverForm& f, const Mat2& A) {
  return apply_map(preserver_to_linmap(f), A);
}

LinMapM2 compose(const LinMapM2& f, const LinMapM2& g) {
  LinMapM2 out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      double acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += f.coeffs[i][k] * g.coeffs[k][j];
      out.coeffs[i][j] = acc;
    }
  }
  return out;
}

namespace {

template <typename MapT, typename DrawFn, typename ApplyFn>
SampleVerdict run_sample_test(const MapT& m, int trials, const Tolerance& tol,
                              std::uint64_t seed, DrawFn draw, ApplyFn apply) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  UniformRng rng(seed);
  SampleVerdict verdict;
  verdict.seed = seed;
  for (int t = 0; t < trials; ++t) {
    const Mat2 A = draw(rng);
    const Mat2 B = apply(m, A);
    verdict.trials = t + 1;
    if (!values_match(l_spectrum(A, tol).values(), l_spectrum(B, tol).values(),
                      tol.set_tol)) {
      verdict.consistent = false;
      verdict.witness = A;
      return verdict;
    }
  }
  verdict.consistent = true;
  return verdict;
}

}  // namespace

SampleVerdict sample_test_preserver(const LinMapM2& m, int trials,
                                    const Tolerance& tol, std::uint64_t seed) {
  return run_sample_test(
      m, trials, tol, seed,
      [](UniformRng& rng) { return rng.mat2(-5.0, 5.0); },
      [](const LinMapM2& mm, const Mat2& A) { return apply_map(mm, A); });
}

SampleVerdict sample_test_preserver(const LinMapS2& m, int trials,
                                    const Tolerance& tol, std::uint64_t seed) {
  return run_sample_test(
      m, trials, tol, seed,
      [](UniformRng& rng) { return rng.symmetric_mat2(-5.0, 5.0); },
      [&](const LinMapS2& mm, const Mat2& A) { return apply_map(mm, A, tol); });
}

std::optional<PreserverForm> classify_preserver(const LinMapM2& m,
                                                const Tolerance& tol) {
  const double tc = tol.set_tol;
  auto near = [tc](double x, double y) { return std::abs(x - y) <= tc; };

  const Mat2 e11{1, 0, 0, 0}, e12{0, 1, 0, 0}, e21{0, 0, 1, 0}, e22{0, 0, 0, 1};
  const Mat2 f_id = apply_map(m, Mat2::identity());
  if (!(near(f_id.a, 1) && near(f_id.b, 0) && near(f_id.c, 0) &&
        near(f_id.d, 1))) {
    return std::nullopt;
  }

  const Mat2 f11 = apply_map(m, e11);
  const Mat2 f12 = apply_map(m, e12);
  const Mat2 f21 = apply_map(m, e21);
  const Mat2 f22 = apply_map(m, e22);

  if (!near(trace(f11), 1) || !near(trace(f12), 0) || !near(trace(f21), 0) ||
      !near(trace(f22), 1)) {
    return std::nullopt;
  }

  if (!near(antitrace(f11), 0) || !near(antitrace(f22), 0)) return std::nullopt;
  const double at12 = antitrace(f12);
  const double at21 = antitrace(f21);
  double eps = 0.0;
  if (near(at12, 1) && near(at21, 1)) {
    eps = 1.0;
  } else if (near(at12, -1) && near(at21, -1)) {
    eps = -1.0;
  } else {
    return std::nullopt;
  }

  const Mat2 f_h = f12 + f21;
  if (!(near(f_h.a, 0) && near(f_h.b, eps) && near(f_h.c, eps) &&
        near(f_h.d, 0))) {
    return std::nullopt;
  }

  // When the map reverses antitraces, conjugating its images by T yields an
  // antitrace-preserving map with the same spectra, so the image of E11 can
  // be read in the P shape [[alpha^2, -alpha beta], [alpha beta, -beta^2]].
  const Mat2 g11 = eps > 0.0 ? f11 : t_conjugate(f11);
  const double alpha_sq = g11.a;
  const double alpha_beta = g11.c;
  if (alpha_sq < 1.0 - tc) return std::nullopt;
  if (!near(g11.b, -alpha_beta)) return std::nullopt;
  if (!near(g11.d, 1.0 - alpha_sq)) return std::nullopt;

  const double alpha_read = std::sqrt(std::max(alpha_sq, 1.0));
  const double beta = alpha_beta / alpha_read;

  PreserverForm f =
      make_preserver(eps > 0.0 ? PreserverKind::P : PreserverKind::Q, beta);
  const LinMapM2 rebuilt = preserver_to_linmap(f);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (std::abs(m.coeffs[i][j] - rebuilt.coeffs[i][j]) > tc) {
        return std::nullopt;
      }
    }
  }
  return f;
}

std::optional<PreserverForm> classify_preserver(const LinMapS2& m,
                                                const Tolerance& tol) {
  auto matches = [&](const double (&ref)[3][3]) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (std::abs(m.coeffs[i][j] - ref[i][j]) > tol.set_tol) return false;
      }
    }
    return true;
  };
  if (matches(kS2Identity)) return make_preserver(PreserverKind::P, 0.0);
  if (matches(kS2TConj)) return make_preserver(PreserverKind::Q, 0.0);
  return std::nullopt;
}

bool nature_check(const PreserverForm& f, const Mat2& A, const Tolerance& tol) {
  const LSpectrum sa = l_spectrum(A, tol);
  const LSpectrum sb = l_spectrum(apply_form(f, A), tol);
  return values_match(sa.interior_values(), sb.interior_values(), tol.set_tol) &&
         values_match(sa.boundary_values(), sb.boundary_values(), tol.set_tol);
}

Vec2 cone_image(const PreserverForm& f, const Vec2& x) {
  return conjugation_matrix(f) * x;
}

}  // namespace lorentz
