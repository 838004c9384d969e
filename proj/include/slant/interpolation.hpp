#pragma once

#include <span>
#include <vector>

#include "slant/vec3.hpp"

namespace slant {

/// Natural cubic spline through (x, y); x strictly increasing, at least 2 knots.
/// Outside the knot range the end cubic pieces are continued.
class CubicSpline {
 public:
  CubicSpline() = default;
  CubicSpline(std::vector<double> x, std::vector<double> y);

  double value(double t) const;
  double derivative(double t) const;
  double second_derivative(double t) const;

  const std::vector<double>& knots() const { return x_; }
  const std::vector<double>& values() const { return y_; }

 private:
  std::size_t segment(double t) const;

  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> m_;  // second derivatives at the knots
};

/// Finite-difference weights for derivatives 0..max_order at `x0` on arbitrary nodes
/// (Fornberg's recursion). Result is indexed [order][node].
std::vector<std::vector<double>> fd_weights(double x0, std::span<const double> nodes, int max_order);

/// C² piecewise-quintic Hermite interpolant of sampled 3-vectors.
///
/// Node first and second derivatives are estimated from the seven nearest
/// samples, so the interpolant reproduces polynomials of degree ≤ 5 exactly.
class QuinticHermiteCurve {
 public:
  QuinticHermiteCurve() = default;
  QuinticHermiteCurve(std::vector<double> u, std::vector<Vec3> values);

  Vec3 operator()(double u) const;

  const std::vector<double>& nodes() const { return u_; }

 private:
  std::vector<double> u_;
  std::vector<Vec3> p_;
  std::vector<Vec3> d1_;
  std::vector<Vec3> d2_;
};

}  // namespace slant
