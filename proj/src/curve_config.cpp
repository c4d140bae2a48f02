#include <json.hpp>

#include "lmm/spectral_curve.hpp"

namespace lmm {

CurveConfig parse_curve_config(const std::string& json_text) {
  CurveConfig cfg;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("curve config: ") + e.what());
  }
  if (!j.contains("t") || !j["t"].is_array()) throw ParseError("curve config: missing array \"t\"");
  for (const auto& v : j["t"]) cfg.potential.t.push_back(v.get<double>());
  cfg.s = j.value("s", 1);
  if (cfg.s != 1) throw ParseError("curve config: the numeric backend supports s = 1 only");
  if (j.contains("quadrature")) {
    const auto& q = j["quadrature"];
    cfg.quadrature.radius = q.value("radius", 0.0);
    cfg.quadrature.points = q.value("points", 256);
    cfg.quadrature.max_points = q.value("max_points", 4096);
  }
  return cfg;
}

}  // namespace lmm
