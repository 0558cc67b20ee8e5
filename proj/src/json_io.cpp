#include "lorentz/json_io.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lorentz {

using nlohmann::json;

void to_json(json& j, const Mat2& m) {
  j = json{{"a", m.a}, {"b", m.b}, {"c", m.c}, {"d", m.d}};
}

void from_json(const json& j, Mat2& m) {
  m = Mat2(j.at("a").get<double>(), j.at("b").get<double>(),
           j.at("c").get<double>(), j.at("d").get<double>());
}

void to_json(json& j, const LEigenvalue& e) {
  j = json{{"value", e.value},
           {"interior", e.interior},
           {"boundary_plus", e.boundary_plus},
           {"boundary_minus", e.boundary_minus},
           {"strict_boundary", e.strict_boundary}};
}

void to_json(json& j, const LSpectrum& s) { j = s.eigenvalues; }

namespace {

template <typename MapT, std::size_t N>
void coeffs_from_json(const json& j, const char* basis, MapT& m) {
  if (j.at("basis").get<std::string>() != basis) {
    throw std::invalid_argument(std::string("linear map basis must be \"") +
                                basis + "\"");
  }
  const auto& rows = j.at("coeffs");
  if (!rows.is_array() || rows.size() != N) {
    throw std::invalid_argument("coeffs must be a square array of rows");
  }
  for (std::size_t i = 0; i < N; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != N) {
      throw std::invalid_argument("coeffs must be a square array of rows");
    }
    for (std::size_t k = 0; k < N; ++k) {
      const double v = row[k].get<double>();
      if (!std::isfinite(v)) {
        throw std::invalid_argument("coeffs entries must be finite");
      }
      m.coeffs[i][k] = v;
    }
  }
}

}  // namespace

void to_json(json& j, const LinMapM2& m) {
  j = json{{"basis", kBasisM2}, {"coeffs", m.coeffs}};
}

void from_json(const json& j, LinMapM2& m) {
  coeffs_from_json<LinMapM2, 4>(j, kBasisM2, m);
}

void to_json(json& j, const LinMapS2& m) {
  j = json{{"basis", kBasisS2}, {"coeffs", m.coeffs}};
}

void from_json(const json& j, LinMapS2& m) {
  coeffs_from_json<LinMapS2, 3>(j, kBasisS2, m);
}

void to_json(json& j, const Tolerance& t) {
  j = json{{"eq_tol", t.eq_tol}, {"set_tol", t.set_tol}, {"cone_tol", t.cone_tol}};
}

}  // namespace lorentz
