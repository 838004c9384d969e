#include "slant/frame.hpp"

#include <cmath>

#include "slant/errors.hpp"

namespace slant {

namespace {

constexpr double kOrthoTol = 1e-9;

void require_u(const Jet3& jet, const char* what) {
  if (jet.param != Param::u) throw TagError(std::string(what) + " expects a u-parametrized jet");
}

void require_s1(const Jet3& jet, const char* what) {
  if (jet.param != Param::s1) throw TagError(std::string(what) + " expects an s1-parametrized jet");
}

bool finite_jet(const Jet3& j) { return is_finite(j.d0) && is_finite(j.d1) && is_finite(j.d2) && is_finite(j.d3); }

double director_speed(const RuledSurfaceSpec& surface, double u) {
  const Jet3 q = surface.director(u);
  if (!is_finite(q.d1)) throw NonFiniteSample(u);
  return norm(q.d1);
}

}  // namespace

SampleGrid SampleGrid::uniform(const Interval& range, std::size_t count) {
  if (count < 2) throw BadParams("sample grid needs at least 2 points");
  if (!(range.hi > range.lo)) throw BadParams("sample grid needs a non-degenerate range");
  SampleGrid grid;
  grid.u.resize(count);
  const double step = range.length() / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) grid.u[i] = range.lo + step * static_cast<double>(i);
  grid.u.back() = range.hi;
  return grid;
}

Vec3 striction_point(const Jet3& f, const Jet3& q) {
  require_u(f, "striction_point");
  require_u(q, "striction_point");
  const double qq = dot(q.d1, q.d1);
  if (!(qq > kEpsCyl * kEpsCyl)) throw CylindricalDirector();
  return f.d0 - (dot(q.d1, f.d1) / qq) * q.d0;
}

Vec3 asymptotic_normal(const Jet3& q) {
  const double speed = norm(q.d1);
  if (!(speed > kEpsCyl)) throw CylindricalDirector();
  return cross(q.d0, q.d1) / speed;
}

Vec3 central_normal(const Vec3& q, const Vec3& a) {
  if (std::fabs(norm(q) - 1.0) > kOrthoTol || std::fabs(norm(a) - 1.0) > kOrthoTol ||
      std::fabs(dot(q, a)) > kOrthoTol) {
    throw NonOrthogonalInput("central_normal requires orthonormal q and a");
  }
  return cross(a, q);
}

double conical_curvature(const Jet3& q) {
  require_s1(q, "conical_curvature");
  return det(q.d0, q.d1, q.d2);
}

double kappa_prime(const Jet3& q) {
  require_s1(q, "kappa_prime");
  return det(q.d0, q.d1, q.d3);
}

Vec3 darboux_vector(double kappa, const Vec3& q, const Vec3& a) { return kappa * q + a; }

double sigma(double kappa, double kappa_prime) {
  const double w2 = 1.0 + kappa * kappa;
  return kappa_prime / (w2 * std::sqrt(w2));
}

FrameSample frame_at(const RuledSurfaceSpec& surface, double u) {
  const Jet3 f = surface.base_curve(u);
  const Jet3 q = surface.director(u);
  if (!finite_jet(f) || !finite_jet(q)) throw NonFiniteSample(u);

  S1Derivatives s1d;
  try {
    s1d = s1_derivatives(q);
  } catch (const CylindricalDirector&) {
    throw CylindricalDirector(u);
  }
  const Jet3 q_s1 = reparam_to_s1(q, s1d);

  FrameSample s;
  s.u = u;
  s.s1p = s1d.s1p;
  s.q = q.d0;
  s.a = asymptotic_normal(q);
  s.h = central_normal(s.q, s.a);
  s.kappa = conical_curvature(q_s1);
  s.kappa_prime = kappa_prime(q_s1);
  s.sigma = sigma(s.kappa, s.kappa_prime);
  s.W = darboux_vector(s.kappa, s.q, s.a);
  s.striction_point = striction_point(f, q);
  return s;
}

std::vector<FrameSample> frame_samples(const RuledSurfaceSpec& surface, const SampleGrid& grid) {
  if (grid.count() == 0) throw EmptyInput("frame_samples: empty grid");
  std::vector<FrameSample> out;
  out.reserve(grid.count());
  for (std::size_t i = 0; i < grid.count(); ++i) {
    FrameSample s = frame_at(surface, grid.u[i]);
    if (i > 0) {
      const FrameSample& prev = out.back();
      const double lo = grid.u[i - 1];
      const double hi = grid.u[i];
      const double mid_speed = director_speed(surface, 0.5 * (lo + hi));
      s.s1 = prev.s1 + (hi - lo) / 6.0 * (prev.s1p + 4.0 * mid_speed + s.s1p);
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace slant
