#pragma once

#include <cstdint>
#include <optional>

#include "lorentz/core.hpp"

namespace lorentz {

/// Linear map on M2 as a 4x4 coordinate matrix acting on (a, b, c, d) in the
/// ordered basis (E11, E12, E21, E22), row-major.
struct LinMapM2 {
  std::array<std::array<double, 4>, 4> coeffs{};
};

/// Linear map on S2 as a 3x3 coordinate matrix acting on (a, d, b) in the
/// ordered basis (E11, E22, E12+E21).
struct LinMapS2 {
  std::array<std::array<double, 3>, 3> coeffs{};
};

enum class PreserverKind { P, Q };

/// A spectrum-preserving conjugation A -> P A P^{-1} with
/// P = [[alpha, beta], [beta, alpha]] (kind P) or A -> Q A Q^{-1} with
/// Q = [[-alpha, -beta], [beta, alpha]] = T P (kind Q), where
/// alpha = sqrt(1 + beta^2) >= 1 so that alpha^2 - beta^2 = 1.
struct PreserverForm {
  PreserverKind kind = PreserverKind::P;
  double beta = 0.0;
  double alpha = 1.0;
};

PreserverForm make_preserver(PreserverKind kind, double beta);

/// The conjugating matrix P or Q of the form.
Mat2 conjugation_matrix(const PreserverForm& f);

/// Coordinate matrix of A -> P A P^{-1} (resp. Q A Q^{-1}) on M2.
LinMapM2 preserver_to_linmap(const PreserverForm& f);

/// S2 analog; only beta = 0 conjugations map S2 into itself, so any other
/// beta is rejected.
LinMapS2 preserver_to_linmap_s2(const PreserverForm& f);

Mat2 apply_map(const LinMapM2& m, const Mat2& A);

/// S2 analog; rejects input that is not symmetric within eq_tol.
Mat2 apply_map(const LinMapS2& m, const Mat2& A, const Tolerance& tol);

Mat2 apply_form(const PreserverForm& f, const Mat2& A);

/// Composition f after g in coordinates.
LinMapM2 compose(const LinMapM2& f, const LinMapM2& g);

/// Outcome of the randomized falsification test. `witness` holds the first
/// sampled matrix whose spectrum the map fails to preserve.
struct SampleVerdict {
  bool consistent = true;
  std::optional<Mat2> witness;
  int trials = 0;
  std::uint64_t seed = 0;
};

/// Draws `trials` matrices with entries uniform in [-5, 5] from the seeded
/// generator and compares the Lorentz spectra of A and m(A) as value sets
/// within set_tol. Stops at the first counterexample.
SampleVerdict sample_test_preserver(const LinMapM2& m, int trials,
                                    const Tolerance& tol, std::uint64_t seed);

/// Symmetric-matrix variant for maps on S2.
SampleVerdict sample_test_preserver(const LinMapS2& m, int trials,
                                    const Tolerance& tol, std::uint64_t seed);

/// Structural recognition of spectrum preservers on M2. Checks, in order:
/// the image of I is I; traces of all four basis images are preserved;
/// antitraces are preserved up to one global sign; the image of E12+E21 is
/// its signed self; the image of E11 has the conjugation shape
/// [[alpha^2, -alpha beta], [alpha beta, -beta^2]] (after reduction by T
/// when the sign is negative), from which beta is read off; finally the full
/// coordinate matrix must equal the rebuilt form within set_tol.
std::optional<PreserverForm> classify_preserver(const LinMapM2& m,
                                                const Tolerance& tol);

/// S2 variant: only the identity and diag(1, 1, -1) coordinate matrices are
/// preservers (the beta = 0 forms).
std::optional<PreserverForm> classify_preserver(const LinMapS2& m,
                                                const Tolerance& tol);

/// True iff the interior value sets and the boundary value sets of A and
/// f(A) each agree within set_tol.
bool nature_check(const PreserverForm& f, const Mat2& A, const Tolerance& tol);

/// Image of x under the conjugating matrix P or Q.
Vec2 cone_image(const PreserverForm& f, const Vec2& x);

}  // namespace lorentz
