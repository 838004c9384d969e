#include "slant/jet.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "slant/errors.hpp"

namespace slant {

namespace {

std::string describe_parameter(const char* prefix, double u) {
  std::ostringstream out;
  out.precision(17);
  out << prefix << u;
  return out.str();
}

}  // namespace

CylindricalDirector::CylindricalDirector(std::optional<double> parameter)
    : Error(parameter ? describe_parameter(
                            "cylindrical ruled surface: director derivative vanishes at u = ", *parameter)
                      : std::string("cylindrical ruled surface: director derivative vanishes")),
      parameter_(parameter) {}

NonFiniteSample::NonFiniteSample(double parameter)
    : Error(describe_parameter("non-finite curve sample at parameter ", parameter)), parameter_(parameter) {}

OutOfDomain::OutOfDomain(double s1)
    : Error(describe_parameter("parameter outside the profile domain: s1 = ", s1)), parameter_(s1) {}

UnknownCatalogName::UnknownCatalogName(const std::string& name)
    : Error("unknown catalog surface '" + name + "'") {}

Jet3 fd_jet(const CurveSampler& curve, double u0, double step) {
  std::array<Vec3, 5> f;
  for (int k = -2; k <= 2; ++k) {
    const double u = u0 + k * step;
    f[k + 2] = curve(u);
    if (!is_finite(f[k + 2])) throw NonFiniteSample(u);
  }
  const double h = step;
  Jet3 jet;
  jet.param = Param::u;
  jet.d0 = f[2];
  jet.d1 = (f[0] - 8.0 * f[1] + 8.0 * f[3] - f[4]) / (12.0 * h);
  jet.d2 = (-1.0 * f[0] + 16.0 * f[1] - 30.0 * f[2] + 16.0 * f[3] - f[4]) / (12.0 * h * h);
  jet.d3 = (-1.0 * f[0] + 2.0 * f[1] - 2.0 * f[3] + f[4]) / (2.0 * h * h * h);
  return jet;
}

S1Derivatives s1_derivatives(const Jet3& q) {
  if (q.param != Param::u) throw TagError("s1_derivatives expects a u-parametrized jet");
  const double speed = norm(q.d1);
  if (!(speed > kEpsCyl)) throw CylindricalDirector();
  const double d12 = dot(q.d1, q.d2);
  S1Derivatives s;
  s.s1p = speed;
  s.s1pp = d12 / speed;
  s.s1ppp = (dot(q.d2, q.d2) + dot(q.d1, q.d3)) / speed - d12 * d12 / (speed * speed * speed);
  return s;
}

Jet3 reparam_to_s1(const Jet3& jet_u, const S1Derivatives& s) {
  if (jet_u.param != Param::u) throw TagError("reparam_to_s1 expects a u-parametrized jet");
  const double p = s.s1p;
  const double p2 = p * p;
  const double p3 = p2 * p;
  const double p4 = p3 * p;
  const double p5 = p4 * p;
  Jet3 out;
  out.param = Param::s1;
  out.d0 = jet_u.d0;
  out.d1 = jet_u.d1 / p;
  out.d2 = (jet_u.d2 * p - jet_u.d1 * s.s1pp) / p3;
  out.d3 = jet_u.d3 / p3 - jet_u.d2 * (3.0 * s.s1pp / p4) +
           jet_u.d1 * (3.0 * s.s1pp * s.s1pp / p5 - s.s1ppp / p4);
  return out;
}

Jet3 transformed(const Jet3& jet, const Mat3& r) {
  return {r * jet.d0, r * jet.d1, r * jet.d2, r * jet.d3, jet.param};
}

}  // namespace slant
