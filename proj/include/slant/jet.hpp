#pragma once

#include <functional>

#include "slant/vec3.hpp"

namespace slant {

/// Parameter with respect to which a jet's derivatives are taken.
enum class Param { u, s1 };

/// Value of a space curve and its first three derivatives at one parameter.
struct Jet3 {
  Vec3 d0;
  Vec3 d1;
  Vec3 d2;
  Vec3 d3;
  Param param = Param::u;
};

/// ds1/du, d²s1/du², d³s1/du³ where s1 is the spherical-image arc length.
struct S1Derivatives {
  double s1p = 0.0;
  double s1pp = 0.0;
  double s1ppp = 0.0;
};

/// Absolute threshold on ‖dq/du‖ below which a director is treated as constant.
inline constexpr double kEpsCyl = 1e-9;

using CurveSampler = std::function<Vec3(double)>;

/// Central finite-difference jet of `curve` at `u0`.
///
/// d1 and d2 use five-point fourth-order stencils, d3 the five-point
/// second-order stencil, so the truncation errors are O(step⁴), O(step⁴)
/// and O(step²). Throws NonFiniteSample if any stencil value is not finite.
Jet3 fd_jet(const CurveSampler& curve, double u0, double step);

/// Derivatives of s1 along a u-tagged director jet. Throws CylindricalDirector
/// when ‖d1‖ ≤ kEpsCyl and TagError for an s1-tagged input.
S1Derivatives s1_derivatives(const Jet3& q_jet_u);

/// Chain rule from u to s1 up to third order.
Jet3 reparam_to_s1(const Jet3& jet_u, const S1Derivatives& s1d);

Jet3 transformed(const Jet3& jet, const Mat3& rotation);

}  // namespace slant
