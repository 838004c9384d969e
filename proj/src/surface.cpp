#include "slant/surface.hpp"

#include "slant/errors.hpp"

namespace slant {

Params::Params(std::initializer_list<std::pair<const std::string, double>> scalars) {
  for (const auto& [key, value] : scalars) set(key, value);
}

double Params::scalar(const std::string& key, double fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  if (it->second.size() != 1) throw BadParams("parameter '" + key + "' must be a scalar");
  return it->second.front();
}

double Params::scalar(const std::string& key) const {
  if (!has(key)) throw BadParams("missing parameter '" + key + "'");
  return scalar(key, 0.0);
}

const std::vector<double>& Params::array(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw BadParams("missing parameter '" + key + "'");
  return it->second;
}

RuledSurfaceSpec rotated(const RuledSurfaceSpec& surface, const Mat3& r) {
  RuledSurfaceSpec out = surface;
  out.base_curve = [base = surface.base_curve, r](double u) { return transformed(base(u), r); };
  out.director = [dir = surface.director, r](double u) { return transformed(dir(u), r); };
  if (out.expected.darboux) out.expected.darboux = r * *out.expected.darboux;
  return out;
}

}  // namespace slant
