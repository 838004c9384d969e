#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <vector>

#include "slant/catalog.hpp"
#include "slant/frame.hpp"
#include "slant/generators.hpp"
#include "slant/vec3.hpp"

namespace slant::testing {

inline double dist(const Vec3& a, const Vec3& b) { return norm(a - b); }

inline double max_dist(std::span<const Vec3> vs, const Vec3& ref) {
  double m = 0.0;
  for (const Vec3& v : vs) m = std::max(m, dist(v, ref));
  return m;
}

/// Every catalog entry with its default parameters.
inline std::vector<RuledSurfaceSpec> default_catalog() {
  std::vector<RuledSurfaceSpec> out;
  for (const auto& nm : catalog_names()) out.push_back(catalog(nm));
  return out;
}

/// Uniformly random rotation from a normalized quaternion.
inline Mat3 random_rotation(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  double w = g(rng), x = g(rng), y = g(rng), z = g(rng);
  const double n = std::sqrt(w * w + x * x + y * y + z * z);
  w /= n, x /= n, y /= n, z /= n;
  return Mat3{{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
              {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
              {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}};
}

/// Smooth random κ profile: a few knots on [-1.5, 1.5] with values in [-1, 1].
inline RuledSurfaceSpec random_tabulated_surface(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> val(-1.0, 1.0);
  std::uniform_int_distribution<int> count(4, 8);
  const int n = count(rng);
  std::vector<double> s(n), k(n);
  for (int i = 0; i < n; ++i) {
    s[i] = -1.5 + 3.0 * i / (n - 1);
    k[i] = val(rng);
  }
  Params p;
  p.set("knots", s);
  p.set("values", k);
  return catalog("tabulated_kappa", p);
}

/// Three-point derivative over the (non-uniform) s1 spacing at interior index i.
inline Vec3 ds1(std::span<const FrameSample> s, std::span<const Vec3> v, std::size_t i) {
  const double h0 = s[i].s1 - s[i - 1].s1;
  const double h1 = s[i + 1].s1 - s[i].s1;
  return (-h1 / (h0 * (h0 + h1))) * v[i - 1] + ((h1 - h0) / (h0 * h1)) * v[i] +
         (h0 / (h1 * (h0 + h1))) * v[i + 1];
}

template <class F>
std::vector<Vec3> column(std::span<const FrameSample> s, F f) {
  std::vector<Vec3> out;
  out.reserve(s.size());
  for (const auto& x : s) out.push_back(f(x));
  return out;
}

}  // namespace slant::testing
