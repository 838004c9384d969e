#include "slant/analysis.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "slant/errors.hpp"
#include "slant/interpolation.hpp"

namespace slant {

namespace {

constexpr double kDegenerateTrace = 1e-18;
constexpr double kTieGap = 1e-12;

SlantVerdict judge(std::span<const FrameSample> samples, SlantKind kind, const Tolerances& tol) {
  std::vector<Vec3> path;
  path.reserve(samples.size());
  for (const auto& s : samples) {
    switch (kind) {
      case SlantKind::q: path.push_back(s.q); break;
      case SlantKind::h: path.push_back(s.h); break;
      case SlantKind::a: path.push_back(s.a); break;
      case SlantKind::darboux_strict: path.push_back(s.W); break;
      case SlantKind::darboux_angular: path.push_back(normalized(s.W)); break;
    }
  }
  const AxisFit fit = detect_axis(path);
  std::vector<double> values;
  values.reserve(path.size());
  for (const auto& v : path) values.push_back(dot(v, fit.axis));

  SlantVerdict out;
  out.axis = fit.axis;
  out.fit_residual = fit.residual;
  out.tied = fit.tied;
  out.degenerate = fit.degenerate;
  out.constancy = constancy(values, tol.tol);
  out.value = out.constancy.mean;
  out.verdict = !fit.tied && fit.residual < tol.tol && out.constancy.is_constant;
  const bool frame_vector = kind == SlantKind::q || kind == SlantKind::h || kind == SlantKind::a;
  if (frame_vector && std::fabs(out.value) <= tol.angle_tol) out.verdict = false;
  return out;
}

}  // namespace

std::string_view name(SlantKind kind) {
  switch (kind) {
    case SlantKind::q: return "q";
    case SlantKind::h: return "h";
    case SlantKind::a: return "a";
    case SlantKind::darboux_strict: return "darboux_strict";
    case SlantKind::darboux_angular: return "darboux_angular";
  }
  return "?";
}

ConstancyResult constancy(std::span<const double> values, double tol) {
  if (values.empty()) throw EmptyInput("constancy: no values");
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  ConstancyResult r;
  r.mean = sum / static_cast<double>(values.size());
  r.spread = *hi - *lo;
  r.relative_spread = r.spread / (1.0 + std::fabs(r.mean));
  r.is_constant = r.relative_spread < tol;
  return r;
}

AxisFit detect_axis(std::span<const Vec3> vectors) {
  if (vectors.size() < kMinClassifySamples) throw BadParams("detect_axis needs at least 16 samples");

  Eigen::Matrix3d gram = Eigen::Matrix3d::Zero();
  Vec3 sum;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    sum += vectors[i];
    if (i == 0) continue;
    const Vec3 d = vectors[i] - vectors[i - 1];
    const Eigen::Vector3d e(d.x, d.y, d.z);
    gram += e * e.transpose();
  }

  AxisFit fit;
  const double trace = gram.trace();
  if (trace < kDegenerateTrace) {
    fit.degenerate = true;
    fit.axis = normalized(sum);
    return fit;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(gram);
  const Eigen::Vector3d lambda = solver.eigenvalues();
  const Eigen::Vector3d least = solver.eigenvectors().col(0);
  fit.axis = normalized(Vec3{least.x(), least.y(), least.z()});
  fit.residual = std::clamp(lambda(0) / trace, 0.0, 1.0 / 3.0);
  fit.tied = lambda(1) - lambda(0) <= kTieGap * trace;

  if (dot(sum, fit.axis) < 0.0) fit.axis = -fit.axis;
  return fit;
}

FrameCoefficients h_slant_axis(double kappa, double d) {
  const double w = std::sqrt(1.0 + kappa * kappa);
  return {kappa / w, d, 1.0 / w};
}

std::vector<double> AxisDecomposition::n_values(std::span<const FrameSample> samples) const {
  std::vector<double> n(size());
  for (std::size_t i = 0; i < size(); ++i) {
    n[i] = coeff_a[i] * std::sqrt(1.0 + samples[i].kappa * samples[i].kappa);
  }
  return n;
}

AxisDecomposition decompose(std::span<const FrameSample> samples, const Vec3& axis) {
  AxisDecomposition d;
  d.coeff_q.reserve(samples.size());
  d.coeff_h.reserve(samples.size());
  d.coeff_a.reserve(samples.size());
  for (const auto& s : samples) {
    d.coeff_q.push_back(dot(s.q, axis));
    d.coeff_h.push_back(dot(s.h, axis));
    d.coeff_a.push_back(dot(s.a, axis));
  }
  return d;
}

Vec3 from_frame(const FrameSample& s, const FrameCoefficients& c) { return c.q * s.q + c.h * s.h + c.a * s.a; }

SlantReport classify(std::span<const FrameSample> samples, const Tolerances& tol) {
  SlantReport report;
  for (SlantKind kind : kSlantKinds) report[kind] = judge(samples, kind, tol);

  std::vector<double> kappa, sig;
  kappa.reserve(samples.size());
  sig.reserve(samples.size());
  for (const auto& s : samples) {
    kappa.push_back(s.kappa);
    sig.push_back(s.sigma);
  }
  report.kappa = constancy(kappa, tol.tol);
  report.sigma = constancy(sig, tol.tol);
  return report;
}

SlantReport classify(const RuledSurfaceSpec& surface, const SampleGrid& grid, const Tolerances& tol) {
  const auto samples = frame_samples(surface, grid);
  return classify(samples, tol);
}

std::vector<double> derivative_over_s1(std::span<const FrameSample> samples, std::span<const double> values) {
  const std::size_t n = samples.size();
  if (n != values.size()) throw BadParams("derivative_over_s1: size mismatch");
  if (n < 5) throw BadParams("derivative_over_s1 needs at least 5 samples");
  std::vector<double> s1(n);
  for (std::size_t i = 0; i < n; ++i) s1[i] = samples[i].s1;
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t first =
        static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(i) - 2, 0,
                                                            static_cast<std::ptrdiff_t>(n) - 5));
    const auto w = fd_weights(s1[i], std::span<const double>(s1.data() + first, 5), 1);
    double acc = 0.0;
    for (std::size_t k = 0; k < 5; ++k) acc += w[1][k] * values[first + k];
    out[i] = acc;
  }
  return out;
}

}  // namespace slant
