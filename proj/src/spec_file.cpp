#include "slant/io/spec_file.hpp"

#include <cmath>
#include <fstream>
#include <memory>

#include "slant/catalog.hpp"
#include "slant/generators.hpp"
#include "slant/interpolation.hpp"

namespace slant::io {

namespace {

using nlohmann::ordered_json;

double number(const ordered_json& j, const std::string& what) {
  if (!j.is_number()) throw SchemaError("'" + what + "' must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw SchemaError("'" + what + "' must be finite");
  return v;
}

const ordered_json& member(const ordered_json& j, const std::string& key) {
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError("missing key '" + key + "'");
  return *it;
}

double optional_number(const ordered_json& j, const std::string& key, double fallback) {
  auto it = j.find(key);
  return it == j.end() ? fallback : number(*it, key);
}

std::vector<double> numbers(const ordered_json& j, const std::string& what) {
  if (!j.is_array()) throw SchemaError("'" + what + "' must be an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(number(v, what));
  return out;
}

Vec3 vec3(const ordered_json& j, const std::string& what) {
  const auto v = numbers(j, what);
  if (v.size() != 3) throw SchemaError("'" + what + "' rows must have three components");
  return {v[0], v[1], v[2]};
}

std::vector<Vec3> rows(const ordered_json& j, const std::string& what) {
  if (!j.is_array()) throw SchemaError("'" + what + "' must be an array of [x,y,z] rows");
  std::vector<Vec3> out;
  out.reserve(j.size());
  for (const auto& r : j) out.push_back(vec3(r, what));
  return out;
}

Interval range(const ordered_json& j, const std::string& what) {
  const auto v = numbers(j, what);
  if (v.size() != 2 || !(v[1] > v[0])) throw SchemaError("'" + what + "' must be [lo, hi] with lo < hi");
  return {v[0], v[1]};
}

Params params_from(const ordered_json& j) {
  if (!j.is_object()) throw SchemaError("'params' must be an object");
  Params p;
  for (const auto& [key, value] : j.items()) {
    if (value.is_array()) {
      p.set(key, numbers(value, key));
    } else {
      p.set(key, number(value, key));
    }
  }
  return p;
}

KappaProfile profile_from(const ordered_json& doc) {
  const ordered_json& profile = member(doc, "profile");
  if (!profile.is_object()) throw SchemaError("'profile' must be an object");
  const ordered_json& type = member(profile, "type");
  if (!type.is_string()) throw SchemaError("'profile.type' must be a string");
  const std::string t = type.get<std::string>();
  const auto range_it = doc.find("s1_range");
  std::optional<Interval> domain;
  if (range_it != doc.end()) domain = range(*range_it, "s1_range");

  if (t == "constant") {
    if (!domain) throw SchemaError("constant profile requires 's1_range'");
    return KappaProfile::constant(number(member(profile, "kappa"), "kappa"), *domain);
  }
  if (t == "constant_sigma") {
    return KappaProfile::constant_sigma(number(member(profile, "d"), "d"), domain);
  }
  if (t == "tabulated") {
    auto knots = numbers(member(profile, "s1"), "s1");
    auto values = numbers(member(profile, "kappa"), "kappa");
    if (knots.size() != values.size() || knots.size() < 2) {
      throw SchemaError("tabulated profile needs matching 's1' and 'kappa' arrays of length >= 2");
    }
    if (domain && (std::fabs(domain->lo - knots.front()) > 1e-12 || std::fabs(domain->hi - knots.back()) > 1e-12)) {
      throw SchemaError("tabulated profile: 's1_range' must match the knot range");
    }
    return KappaProfile::tabulated(std::move(knots), std::move(values));
  }
  throw SchemaError("unknown profile type '" + t + "'");
}

ExpectedInvariants expected_from(const ordered_json& j) {
  if (!j.is_object()) throw SchemaError("'expected' must be an object");
  ExpectedInvariants e;
  if (auto it = j.find("kappa"); it != j.end()) e.kappa = number(*it, "expected.kappa");
  if (auto it = j.find("sigma"); it != j.end()) e.sigma = number(*it, "expected.sigma");
  if (auto it = j.find("darboux"); it != j.end()) e.darboux = vec3(*it, "expected.darboux");
  if (auto it = j.find("verdicts"); it != j.end()) {
    if (!it->is_object()) throw SchemaError("'expected.verdicts' must be an object");
    for (const auto& [k, v] : it->items()) {
      if (!v.is_boolean()) throw SchemaError("'expected.verdicts' values must be booleans");
      e.verdicts[k] = v.get<bool>();
    }
  }
  return e;
}

ordered_json vec_json(const Vec3& v) { return ordered_json::array({v.x, v.y, v.z}); }

}  // namespace

RuledSurfaceSpec sampled_surface(std::vector<double> u, std::vector<Vec3> f, std::vector<Vec3> q) {
  if (u.size() < kMinSampledRows) throw SchemaError("sampled spec needs at least 16 rows");
  if (f.size() != u.size() || q.size() != u.size()) throw SchemaError("sampled spec arrays differ in length");
  for (std::size_t i = 1; i < u.size(); ++i) {
    if (!(u[i] > u[i - 1])) throw SchemaError("sampled 'u' must be strictly increasing");
  }
  for (const auto& row : q) {
    if (std::fabs(norm(row) - 1.0) > 1e-6) throw SchemaError("sampled 'q' rows must be unit vectors");
  }

  RuledSurfaceSpec spec;
  spec.range = {u.front(), u.back()};
  spec.provenance.kind = Provenance::Kind::sampled;
  spec.provenance.name = "sampled";

  const double step = 1e-3 * spec.range.length();
  auto base = std::make_shared<const QuinticHermiteCurve>(u, std::move(f));
  auto dir = std::make_shared<const QuinticHermiteCurve>(std::move(u), std::move(q));
  spec.base_curve = [base, step](double t) { return fd_jet([&](double x) { return (*base)(x); }, t, step); };
  spec.director = [dir, step](double t) {
    return fd_jet([&](double x) { return normalized((*dir)(x)); }, t, step);
  };
  return spec;
}

LoadedSurface surface_from_json(const ordered_json& doc) {
  if (!doc.is_object()) throw SchemaError("surface spec must be a JSON object");
  const ordered_json& kind_j = member(doc, "kind");
  if (!kind_j.is_string()) throw SchemaError("'kind' must be a string");
  const std::string kind = kind_j.get<std::string>();

  LoadedSurface out;
  out.source = doc;
  if (kind == "catalog") {
    const ordered_json& name = member(doc, "name");
    if (!name.is_string()) throw SchemaError("'name' must be a string");
    Params params;
    if (auto it = doc.find("params"); it != doc.end()) params = params_from(*it);
    out.surface = catalog(name.get<std::string>(), params);
  } else if (kind == "prescribed_kappa") {
    GeneratorConfig config;
    config.profile = profile_from(doc);
    config.alpha = optional_number(doc, "alpha", 0.0);
    config.step = optional_number(doc, "step", 0.005);
    out.surface = generate_surface(config);
  } else if (kind == "sampled") {
    out.sampled = true;
    out.surface = sampled_surface(numbers(member(doc, "u"), "u"), rows(member(doc, "f"), "f"),
                                  rows(member(doc, "q"), "q"));
  } else {
    throw SchemaError("unknown surface kind '" + kind + "'");
  }
  if (auto it = doc.find("expected"); it != doc.end()) out.surface.expected = expected_from(*it);
  return out;
}

LoadedSurface read_surface_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
  return surface_from_json(doc);
}

ordered_json expected_json(const ExpectedInvariants& e) {
  ordered_json j = ordered_json::object();
  if (e.kappa) j["kappa"] = *e.kappa;
  if (e.sigma) j["sigma"] = *e.sigma;
  if (e.darboux) j["darboux"] = vec_json(*e.darboux);
  ordered_json verdicts = ordered_json::object();
  for (const auto& [k, v] : e.verdicts) verdicts[k] = v;
  j["verdicts"] = verdicts;
  return j;
}

ordered_json sampled_spec_json(const RuledSurfaceSpec& surface, const SampleGrid& grid) {
  ordered_json u = ordered_json::array();
  ordered_json f = ordered_json::array();
  ordered_json q = ordered_json::array();
  for (double t : grid.u) {
    u.push_back(t);
    f.push_back(vec_json(surface.base_curve(t).d0));
    q.push_back(vec_json(surface.director(t).d0));
  }
  ordered_json doc;
  doc["kind"] = "sampled";
  doc["u"] = std::move(u);
  doc["f"] = std::move(f);
  doc["q"] = std::move(q);
  doc["expected"] = expected_json(surface.expected);
  return doc;
}

}  // namespace slant::io
