#pragma once

#include "json.hpp"
#include "lorentz/core.hpp"
#include "lorentz/preserver.hpp"

namespace lorentz {

// Wire formats:
//   Mat2        {"a": x, "b": x, "c": x, "d": x}
//   LEigenvalue {"value": x, "interior": bool, "boundary_plus": bool,
//                "boundary_minus": bool, "strict_boundary": bool}
//   LinMapM2    {"basis": "E11,E12,E21,E22", "coeffs": 4x4 array}
//   LinMapS2    {"basis": "E11,E22,E12+E21", "coeffs": 3x3 array}

inline constexpr const char* kBasisM2 = "E11,E12,E21,E22";
inline constexpr const char* kBasisS2 = "E11,E22,E12+E21";

void to_json(nlohmann::json& j, const Mat2& m);
void from_json(const nlohmann::json& j, Mat2& m);

void to_json(nlohmann::json& j, const LEigenvalue& e);
void to_json(nlohmann::json& j, const LSpectrum& s);

void to_json(nlohmann::json& j, const LinMapM2& m);
void from_json(const nlohmann::json& j, LinMapM2& m);

void to_json(nlohmann::json& j, const LinMapS2& m);
void from_json(const nlohmann::json& j, LinMapS2& m);

void to_json(nlohmann::json& j, const Tolerance& t);

}  // namespace lorentz
