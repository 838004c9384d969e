#pragma once

#include <cstddef>
#include <vector>

#include "slant/surface.hpp"

namespace slant {

/// Frame, curvature and Darboux data of a ruled surface at one parameter.
struct FrameSample {
  double u = 0.0;
  double s1 = 0.0;  // spherical-image arc length accumulated from the first grid point
  Vec3 q;           // ruling
  Vec3 h;           // central normal
  Vec3 a;           // central tangent (asymptotic normal)
  double kappa = 0.0;
  double kappa_prime = 0.0;  // dκ/ds1
  double sigma = 0.0;
  Vec3 W;
  Vec3 striction_point;
  double s1p = 0.0;  // ds1/du
};

/// Strictly increasing parameter values.
struct SampleGrid {
  std::vector<double> u;

  std::size_t count() const { return u.size(); }

  /// `count` equally spaced values spanning `range` including both ends.
  static SampleGrid uniform(const Interval& range, std::size_t count);
};

/// Minimum grid size for classification.
inline constexpr std::size_t kMinClassifySamples = 16;

/// c = f - (⟨q̇, ḟ⟩ / ⟨q̇, q̇⟩) q for u-parametrized jets at a common u.
Vec3 striction_point(const Jet3& f_jet, const Jet3& q_jet);

/// a = (q × q̇) / ‖q̇‖.
Vec3 asymptotic_normal(const Jet3& q_jet);

/// h = a × q. Throws NonOrthogonalInput unless q and a are unit and orthogonal within 1e-9.
Vec3 central_normal(const Vec3& q, const Vec3& a);

/// κ = det(q, q', q'') for an s1-parametrized unit director jet.
double conical_curvature(const Jet3& q_s1);

/// κ' = det(q, q', q''') for an s1-parametrized unit director jet.
double kappa_prime(const Jet3& q_s1);

/// W = κ q + a.
Vec3 darboux_vector(double kappa, const Vec3& q, const Vec3& a);

/// σ = κ' / (1 + κ²)^{3/2}.
double sigma(double kappa, double kappa_prime);

/// Full frame record at one parameter. `s1` is left at zero.
FrameSample frame_at(const RuledSurfaceSpec& surface, double u);

/// Frame records on every grid point, in grid order, with s1 accumulated by
/// composite Simpson quadrature of ‖q̇‖ between consecutive grid points.
std::vector<FrameSample> frame_samples(const RuledSurfaceSpec& surface, const SampleGrid& grid);

}  // namespace slant
