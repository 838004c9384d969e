#include "slant/catalog.hpp"

#include <cmath>
#include <numbers>

#include "slant/errors.hpp"
#include "slant/generators.hpp"

namespace slant {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Jet of u ↦ (radius cos(u + phase), radius sin(u + phase), z).
Jet3 circle_jet(double u, double radius, double z, double phase = 0.0) {
  const double c = std::cos(u + phase);
  const double s = std::sin(u + phase);
  return {{radius * c, radius * s, z},
          {-radius * s, radius * c, 0.0},
          {-radius * c, -radius * s, 0.0},
          {radius * s, -radius * c, 0.0},
          Param::u};
}

Interval u_range(const Params& p) {
  const Interval r{p.scalar("u_min", 0.0), p.scalar("u_max", kTwoPi)};
  if (!(r.hi > r.lo)) throw BadParams("u_min must be below u_max");
  return r;
}

double finite(const Params& p, const std::string& key, double fallback) {
  const double v = p.scalar(key, fallback);
  if (!std::isfinite(v)) throw BadParams("parameter '" + key + "' must be finite");
  return v;
}

RuledSurfaceSpec closed_form(const std::string& name, const Params& params) {
  RuledSurfaceSpec spec;
  spec.provenance = {Provenance::Kind::catalog, name, params};
  spec.range = u_range(params);
  const std::map<std::string, bool> planar_director{
      {"q", false}, {"h", false}, {"a", true}, {"darboux_strict", true}, {"darboux_angular", true}};
  const std::map<std::string, bool> circle_director{
      {"q", true}, {"h", false}, {"a", true}, {"darboux_strict", true}, {"darboux_angular", true}};

  if (name == "helicoid") {
    const double pitch = finite(params, "pitch", 1.0);
    spec.base_curve = [pitch](double u) {
      return Jet3{{0.0, 0.0, pitch * u}, {0.0, 0.0, pitch}, {}, {}, Param::u};
    };
    spec.director = [](double u) { return circle_jet(u, 1.0, 0.0); };
    spec.expected = {0.0, 0.0, Vec3{0, 0, 1}, planar_director};
  } else if (name == "latitude_cone") {
    const double beta = finite(params, "beta", std::numbers::pi / 4.0);
    if (!(beta > 0.0 && beta < std::numbers::pi / 2.0)) throw BadParams("latitude_cone: beta must lie in (0, pi/2)");
    const double cb = std::cos(beta);
    const double sb = std::sin(beta);
    spec.base_curve = [](double) { return Jet3{}; };
    spec.director = [cb, sb](double u) { return circle_jet(u, cb, sb); };
    spec.expected = {std::tan(beta), 0.0, Vec3{0, 0, 1.0 / cb}, circle_director};
  } else if (name == "hyperboloid") {
    const double r = finite(params, "r", 1.0);
    const double pitch = finite(params, "pitch", 1.0);
    if (!(r > 0.0)) throw BadParams("hyperboloid: r must be positive");
    const double n = std::sqrt(1.0 + pitch * pitch);
    spec.base_curve = [r](double u) { return circle_jet(u, r, 0.0); };
    // (-sin u, cos u, pitch)/n is the circle of radius 1/n shifted by a quarter turn.
    spec.director = [n, pitch](double u) { return circle_jet(u, 1.0 / n, pitch / n, std::numbers::pi / 2.0); };
    auto verdicts = pitch == 0.0 ? planar_director : circle_director;
    spec.expected = {pitch, 0.0, Vec3{0, 0, n}, verdicts};
  } else if (name == "radial_plane") {
    spec.base_curve = [](double u) { return circle_jet(u, 1.0, 0.0); };
    spec.director = [](double u) { return circle_jet(u, 1.0, 0.0); };
    spec.expected = {0.0, 0.0, Vec3{0, 0, 1}, planar_director};
  } else {
    throw UnknownCatalogName(name);
  }
  return spec;
}

GeneratorConfig generator_config(const Params& params, KappaProfile profile) {
  GeneratorConfig config;
  config.profile = std::move(profile);
  config.alpha = finite(params, "alpha", 0.0);
  config.step = finite(params, "step", 0.005);
  return config;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"helicoid",     "latitude_cone",  "hyperboloid",
                                              "radial_plane", "constant_sigma", "tabulated_kappa"};
  return names;
}

RuledSurfaceSpec catalog(const std::string& name, const Params& params) {
  if (name == "constant_sigma") {
    const double d = finite(params, "d", 0.5);
    std::optional<Interval> domain;
    if (params.has("s1_min") || params.has("s1_max") || d != 0.0) {
      const double half = d != 0.0 ? 0.9 / std::fabs(d) : 1.0;
      domain = Interval{finite(params, "s1_min", -half), finite(params, "s1_max", half)};
    }
    RuledSurfaceSpec spec = generate_surface(generator_config(params, KappaProfile::constant_sigma(d, domain)));
    spec.provenance = {Provenance::Kind::catalog, name, params};
    return spec;
  }
  if (name == "tabulated_kappa") {
    std::vector<double> knots{-2.0, -1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0};
    std::vector<double> values = knots;
    if (params.has("knots") || params.has("values")) {
      knots = params.array("knots");
      values = params.array("values");
    }
    RuledSurfaceSpec spec =
        generate_surface(generator_config(params, KappaProfile::tabulated(std::move(knots), std::move(values))));
    spec.provenance = {Provenance::Kind::catalog, name, params};
    return spec;
  }
  return closed_form(name, params);
}

}  // namespace slant
