#include "slant/audits.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "slant/errors.hpp"

namespace slant {

namespace {

// Finite-difference derivatives over the sample grid are only fourth-order accurate.
constexpr double kFdCheckTol = 1e-4;

void add_check(AuditRecord& rec, std::string name, double value, double threshold) {
  rec.checks.push_back({std::move(name), value, threshold, value < threshold});
}

void add_flag(AuditRecord& rec, std::string name, bool holds) {
  rec.checks.push_back({std::move(name), holds ? 0.0 : 1.0, 0.5, holds});
}

bool any_failed(const AuditRecord& rec) {
  return std::any_of(rec.checks.begin(), rec.checks.end(), [](const AuditCheck& c) { return !c.passed; });
}

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(10);
  out << v;
  return out.str();
}

double max_abs_interior(std::span<const double> v, std::size_t skip) {
  double m = 0.0;
  for (std::size_t i = skip; i + skip < v.size(); ++i) m = std::max(m, std::fabs(v[i]));
  return m;
}

}  // namespace

std::string_view name(AuditStatus status) {
  switch (status) {
    case AuditStatus::passed: return "passed";
    case AuditStatus::failed: return "failed";
    case AuditStatus::degenerate: return "degenerate";
    case AuditStatus::vacuous: return "vacuous";
    case AuditStatus::not_applicable: return "not_applicable";
  }
  return "?";
}

bool is_theorem_id(std::string_view id) {
  return id == "all" || std::find(kTheoremIds.begin(), kTheoremIds.end(), id) != kTheoremIds.end();
}

AuditRecord verify_theorem_2_1(std::span<const FrameSample> samples, const SlantReport& report,
                               const Tolerances& tol) {
  AuditRecord rec;
  rec.theorem = "2.1";
  std::vector<double>& sig = rec.series["sigma"];
  for (const auto& s : samples) sig.push_back(s.sigma);

  bool degenerate = false;
  if (!report.sigma.is_constant) {
    rec.notes.push_back("forward: sigma is not constant (relative spread " + fmt(report.sigma.relative_spread) +
                        "), nothing to construct");
  } else if (std::fabs(report.sigma.mean) <= tol.angle_tol) {
    degenerate = true;
    rec.notes.push_back("forward: sigma = " + fmt(report.sigma.mean) +
                        " is zero; the constructed axis would be orthogonal to h (theta = pi/2)");
  } else {
    const double d = report.sigma.mean;
    std::vector<Vec3> axes;
    axes.reserve(samples.size());
    for (const auto& s : samples) axes.push_back(from_frame(s, h_slant_axis(s.kappa, d)));

    double max_dev = 0.0;
    for (std::size_t i = 0; i < axes.size(); ++i) {
      for (std::size_t j = i + 1; j < axes.size(); ++j) max_dev = std::max(max_dev, norm(axes[i] - axes[j]));
    }
    add_check(rec, "axis_fixed_in_space", max_dev, tol.tol);

    double h_dev = 0.0;
    for (std::size_t i = 0; i < axes.size(); ++i) h_dev = std::max(h_dev, std::fabs(dot(samples[i].h, axes[i]) - d));
    add_check(rec, "h_projection_equals_d", h_dev, tol.tol);

    Vec3 mean_axis;
    for (const auto& u : axes) mean_axis += u;
    mean_axis /= static_cast<double>(axes.size());
    const AxisDecomposition dec = decompose(samples, mean_axis);

    std::vector<double> n2 = dec.n_values(samples);
    for (double& n : n2) n *= n;
    add_check(rec, "n_squared_constant", constancy(n2, tol.tol).relative_spread, tol.tol);

    // Proof system for a fixed axis with ⟨h, u⟩ = c.
    const double c = dot(samples.front().h, mean_axis);
    const auto b1p = derivative_over_s1(samples, dec.coeff_q);
    const auto b2p = derivative_over_s1(samples, dec.coeff_a);
    std::vector<double> r1(samples.size()), r2(samples.size()), r3(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
      r1[i] = b1p[i] - c;
      r2[i] = dec.coeff_q[i] - samples[i].kappa * dec.coeff_a[i];
      r3[i] = b2p[i] + c * samples[i].kappa;
    }
    const double fd_tol = std::max(kFdCheckTol, tol.tol);
    add_check(rec, "system_b1_prime_minus_c", max_abs_interior(r1, 2), fd_tol);
    add_check(rec, "system_b1_minus_kappa_b2", max_abs_interior(r2, 0), std::max(1e-6, tol.tol));
    add_check(rec, "system_b2_prime_plus_c_kappa", max_abs_interior(r3, 2), fd_tol);
    rec.notes.push_back("forward: sigma = d = " + fmt(d) + ", axis norm " + fmt(norm(mean_axis)));
  }

  const bool h_slant = report[SlantKind::h].verdict;
  add_flag(rec, "h_slant_implies_sigma_constant", !h_slant || report.sigma.is_constant);
  rec.notes.push_back(h_slant ? "reverse: classified h-slant" : "reverse: not classified h-slant");

  if (any_failed(rec)) {
    rec.status = AuditStatus::failed;
  } else if (degenerate) {
    rec.status = AuditStatus::degenerate;
  } else {
    rec.status = AuditStatus::passed;
  }
  return rec;
}

AuditRecord verify_theorem_3_1(std::span<const FrameSample> samples, const SlantReport& report,
                               const Tolerances& tol) {
  AuditRecord rec;
  rec.theorem = "3.1";
  const bool strict = report[SlantKind::darboux_strict].verdict;
  const bool kappa_constant = report.kappa.is_constant;
  add_flag(rec, "darboux_strict_implies_kappa_constant", !strict || kappa_constant);

  if (kappa_constant) {
    Vec3 mean;
    for (const auto& s : samples) mean += s.W;
    mean /= static_cast<double>(samples.size());
    double dev = 0.0;
    for (const auto& s : samples) dev = std::max(dev, norm(s.W - mean));
    add_check(rec, "kappa_constant_implies_W_fixed", dev, tol.tol);
    rec.notes.push_back("kappa = " + fmt(report.kappa.mean));
  } else {
    rec.notes.push_back("kappa is not constant (relative spread " + fmt(report.kappa.relative_spread) + ")");
  }

  if (any_failed(rec)) {
    rec.status = AuditStatus::failed;
  } else if (!strict && !kappa_constant) {
    rec.status = AuditStatus::vacuous;
  } else {
    rec.status = AuditStatus::passed;
  }
  return rec;
}

AuditRecord verify_corollary_3_1(std::span<const FrameSample> samples, const SlantReport& report,
                                 const Tolerances& tol) {
  AuditRecord rec;
  rec.theorem = "cor3.1";
  std::vector<double> kp(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) kp[i] = samples[i].kappa_prime;
  const auto kpp = derivative_over_s1(samples, kp);

  std::vector<double>& dets = rec.series["det"];
  std::vector<double>& squares = rec.series["kappa_prime_squared"];
  double identity = 0.0;
  double det_max = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const FrameSample& s = samples[i];
    const Vec3 w1 = s.kappa_prime * s.q;
    const Vec3 w2 = kpp[i] * s.q + s.kappa_prime * s.h;
    const double value = det(s.W, w1, w2);
    dets.push_back(value);
    squares.push_back(s.kappa_prime * s.kappa_prime);
    identity = std::max(identity, std::fabs(value - s.kappa_prime * s.kappa_prime));
    det_max = std::max(det_max, std::fabs(value));
  }
  add_check(rec, "det_equals_kappa_prime_squared", identity, tol.tol);
  if (report[SlantKind::darboux_strict].verdict) {
    add_check(rec, "darboux_strict_det_vanishes", det_max, tol.tol);
  } else {
    rec.notes.push_back("not strictly Darboux slant; only the determinant identity applies");
  }
  rec.status = any_failed(rec) ? AuditStatus::failed : AuditStatus::passed;
  return rec;
}

AuditRecord verify_theorem_3_2(std::span<const FrameSample> samples, const SlantReport& report,
                               const Tolerances& tol) {
  AuditRecord rec;
  rec.theorem = "3.2";
  const SlantVerdict& h = report[SlantKind::h];
  if (!h.verdict) {
    rec.status = AuditStatus::not_applicable;
    rec.notes.push_back("surface is not classified h-slant");
    return rec;
  }

  // Orient the unit axis like the non-normalized axis W/|W| + d h, whose h-component is d = σ.
  const double d = report.sigma.mean;
  const Vec3 axis = d < 0.0 ? -h.axis : h.axis;
  const double expected = 1.0 / std::sqrt(1.0 + d * d);

  std::vector<double>& cos_lambda = rec.series["cos_lambda"];
  double h_dev = 0.0;
  for (const auto& s : samples) {
    cos_lambda.push_back(dot(normalized(s.W), axis));
    h_dev = std::max(h_dev, std::fabs(dot(s.h, axis) - d * expected));
  }
  const ConstancyResult c = constancy(cos_lambda, tol.tol);
  add_check(rec, "cos_lambda_constant", c.relative_spread, tol.tol);
  add_check(rec, "cos_lambda_equals_inverse_norm", std::fabs(c.mean - expected), tol.tol);
  add_check(rec, "h_projection_matches_sigma", h_dev, tol.tol);
  rec.notes.push_back("d = " + fmt(d) + ", cos lambda = " + fmt(c.mean) + ", expected " + fmt(expected));
  rec.status = any_failed(rec) ? AuditStatus::failed : AuditStatus::passed;
  return rec;
}

AuditRecord verify_theorems_3_3_3_4(std::span<const FrameSample> samples, const SlantReport& report,
                                    const Tolerances& tol, std::span<const Vec3> extra_axes) {
  if (!report.kappa.is_constant) {
    throw NotDarbouxSlant("conical curvature is not constant (relative spread " +
                          fmt(report.kappa.relative_spread) + ")");
  }
  AuditRecord rec;
  rec.theorem = "3.3-3.4";

  Vec3 w_mean;
  for (const auto& s : samples) w_mean += s.W;
  std::vector<Vec3> axes{normalized(w_mean)};
  for (const auto& u : extra_axes) axes.push_back(normalized(u));

  for (std::size_t j = 0; j < axes.size(); ++j) {
    const std::string tag = j == 0 ? "W_hat" : "axis" + std::to_string(j);
    const AxisDecomposition dec = decompose(samples, axes[j]);
    std::vector<double> darboux_constant(samples.size());
    double eq33 = 0.0;
    double a3_dev = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const FrameSample& s = samples[i];
      darboux_constant[i] = dot(s.W, axes[j]);
      eq33 = std::max(eq33, std::fabs(s.kappa * dec.coeff_q[i] + dec.coeff_a[i] - darboux_constant[i]));
      a3_dev = std::max(a3_dev, std::fabs(dec.coeff_a[i] - darboux_constant[i] / (1.0 + s.kappa * s.kappa)));
    }
    add_check(rec, tag + ":kappa_a1_plus_a3_equals_C", eq33, tol.tol);

    const bool a1_const = constancy(dec.coeff_q, tol.tol).is_constant;
    const ConstancyResult a2 = constancy(dec.coeff_h, tol.tol);
    const bool a3_const = constancy(dec.coeff_a, tol.tol).is_constant;
    const bool a3_matches = a3_const && a3_dev < tol.tol;
    add_flag(rec, tag + ":a2_constant_iff_a3_equals_C_over_1_plus_kappa2", a2.is_constant == a3_matches);
    if (a2.is_constant) {
      add_flag(rec, tag + ":a2_constant_implies_a1_a3_constant", a1_const && a3_const);
      if (std::fabs(a2.mean) <= tol.angle_tol) {
        rec.notes.push_back(tag + ": <h,u> = " + fmt(a2.mean) +
                            " so the h-slant hypothesis fails (theta = pi/2); only the algebra is checked");
      }
    }
    rec.series[tag + ":C"] = std::move(darboux_constant);
    rec.series[tag + ":a1"] = dec.coeff_q;
    rec.series[tag + ":a2"] = dec.coeff_h;
    rec.series[tag + ":a3"] = dec.coeff_a;
  }
  rec.status = any_failed(rec) ? AuditStatus::failed : AuditStatus::passed;
  return rec;
}

std::vector<AuditRecord> verify(std::span<const FrameSample> samples, const SlantReport& report,
                                const Tolerances& tol, std::string_view theorem_id) {
  if (!is_theorem_id(theorem_id)) throw BadParams("unknown theorem id '" + std::string(theorem_id) + "'");
  const bool all = theorem_id == "all";
  std::vector<AuditRecord> out;
  if (all || theorem_id == "2.1") out.push_back(verify_theorem_2_1(samples, report, tol));
  if (all || theorem_id == "3.1") out.push_back(verify_theorem_3_1(samples, report, tol));
  if (all || theorem_id == "cor3.1") out.push_back(verify_corollary_3_1(samples, report, tol));
  if (all || theorem_id == "3.2") out.push_back(verify_theorem_3_2(samples, report, tol));
  if (all || theorem_id == "3.3-3.4") {
    try {
      out.push_back(verify_theorems_3_3_3_4(samples, report, tol));
    } catch (const NotDarbouxSlant& e) {
      AuditRecord rec;
      rec.theorem = "3.3-3.4";
      rec.status = AuditStatus::not_applicable;
      rec.notes.push_back(e.what());
      out.push_back(std::move(rec));
    }
  }
  return out;
}

std::vector<AuditRecord> verify(const RuledSurfaceSpec& surface, const SampleGrid& grid, const Tolerances& tol,
                                std::string_view theorem_id) {
  const auto samples = frame_samples(surface, grid);
  return verify(samples, classify(samples, tol), tol, theorem_id);
}

}  // namespace slant
