#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "slant/frame.hpp"

namespace slant {

struct Tolerances {
  double tol = 1e-6;        // constancy / fit tolerance
  double angle_tol = 1e-3;  // |cos θ| must exceed this (θ ≠ π/2)
};

/// Default tolerance for surfaces differentiated by finite differences of samples.
inline constexpr double kSampledTol = 1e-3;

struct ConstancyResult {
  double mean = 0.0;
  double spread = 0.0;           // max - min
  double relative_spread = 0.0;  // spread / (1 + |mean|)
  bool is_constant = false;      // relative_spread < tol
};

ConstancyResult constancy(std::span<const double> values, double tol);

/// Least-squares fixed axis of a sampled unit-vector path.
struct AxisFit {
  Vec3 axis;
  double residual = 0.0;    // λ_min / trace of the difference Gram matrix, in [0, 1/3]
  bool degenerate = false;  // the samples do not move; axis is their mean direction
  bool tied = false;        // two smallest eigenvalues coincide; axis not determined
};

/// Axis u minimizing Σ⟨v_{i+1} - v_i, u⟩². A fixed u with ⟨v, u⟩ constant makes
/// every difference orthogonal to u, so u is the least eigenvector of the
/// difference Gram matrix. The sign makes the mean of ⟨v, axis⟩ non-negative.
/// Throws BadParams for fewer than kMinClassifySamples vectors.
AxisFit detect_axis(std::span<const Vec3> vectors);

/// Frame coordinates (q, h, a) of an axis.
struct FrameCoefficients {
  double q = 0.0;
  double h = 0.0;
  double a = 0.0;
};

/// Axis of an h-slant surface with σ = d: (κ/√(1+κ²), d, 1/√(1+κ²)).
FrameCoefficients h_slant_axis(double kappa, double d);

/// Coefficients of a fixed axis in the moving frame at every sample.
struct AxisDecomposition {
  std::vector<double> coeff_q;
  std::vector<double> coeff_h;
  std::vector<double> coeff_a;

  std::size_t size() const { return coeff_q.size(); }
  FrameCoefficients at(std::size_t i) const { return {coeff_q[i], coeff_h[i], coeff_a[i]}; }
  /// coeff_a · √(1+κ²) at every sample (the constant n, up to sign, of an h-slant axis).
  std::vector<double> n_values(std::span<const FrameSample> samples) const;
};

AxisDecomposition decompose(std::span<const FrameSample> samples, const Vec3& axis);

/// World-space vector with frame coordinates `c` at `sample`.
Vec3 from_frame(const FrameSample& sample, const FrameCoefficients& c);

enum class SlantKind { q, h, a, darboux_strict, darboux_angular };

inline constexpr std::array<SlantKind, 5> kSlantKinds{SlantKind::q, SlantKind::h, SlantKind::a,
                                                      SlantKind::darboux_strict, SlantKind::darboux_angular};

std::string_view name(SlantKind kind);

struct SlantVerdict {
  bool verdict = false;
  Vec3 axis;                   // unit
  double value = 0.0;          // mean of ⟨v, axis⟩ (cos of the angle, or ⟨W, axis⟩ for darboux_strict)
  double fit_residual = 0.0;   // AxisFit::residual
  ConstancyResult constancy;   // of ⟨v, axis⟩ over the samples
  bool tied = false;
  bool degenerate = false;
};

struct SlantReport {
  std::array<SlantVerdict, 5> kinds;
  ConstancyResult kappa;
  ConstancyResult sigma;

  const SlantVerdict& operator[](SlantKind k) const { return kinds[static_cast<std::size_t>(k)]; }
  SlantVerdict& operator[](SlantKind k) { return kinds[static_cast<std::size_t>(k)]; }
};

SlantReport classify(std::span<const FrameSample> samples, const Tolerances& tol);
SlantReport classify(const RuledSurfaceSpec& surface, const SampleGrid& grid, const Tolerances& tol);

/// Derivative of `values` with respect to s1 at every sample (five-point
/// weights on the possibly non-uniform s1 spacing).
std::vector<double> derivative_over_s1(std::span<const FrameSample> samples, std::span<const double> values);

}  // namespace slant
