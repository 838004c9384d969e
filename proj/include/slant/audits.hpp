#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slant/analysis.hpp"

namespace slant {

/// One numerical assertion inside an audit: `value` must be below `threshold`
/// (or, for boolean checks, `value` is 0/1 and threshold 0.5).
struct AuditCheck {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool passed = false;
};

enum class AuditStatus {
  passed,
  failed,
  degenerate,      // hypothesis sits on an excluded boundary (e.g. θ = π/2)
  vacuous,         // implication with a false premise
  not_applicable,  // audit hypotheses do not hold for this surface
};

std::string_view name(AuditStatus status);

struct AuditRecord {
  std::string theorem;  // "2.1", "3.1", "cor3.1", "3.2", "3.3-3.4"
  AuditStatus status = AuditStatus::passed;
  std::vector<AuditCheck> checks;
  std::vector<std::string> notes;
  std::map<std::string, std::vector<double>> series;  // per-sample diagnostics

  bool ok() const { return status != AuditStatus::failed; }
};

/// Theorem ids accepted by verify(); "all" runs every audit.
inline constexpr std::array<std::string_view, 5> kTheoremIds{"2.1", "3.1", "cor3.1", "3.2", "3.3-3.4"};

/// σ constant ⇔ h-slant. Forward: rebuilds the h-slant axis from σ at every
/// sample and checks it is fixed in space; reverse: an h-slant verdict implies
/// constant σ. Also checks the proof system residuals (b1' - c, b1 - κ b2, b2' + cκ).
AuditRecord verify_theorem_2_1(std::span<const FrameSample> samples, const SlantReport& report,
                               const Tolerances& tol);

/// Strict Darboux slant ⇒ κ constant; κ constant ⇒ W fixed.
AuditRecord verify_theorem_3_1(std::span<const FrameSample> samples, const SlantReport& report,
                               const Tolerances& tol);

/// det(W, W', W'') = κ'² everywhere; = 0 on strict Darboux-slant surfaces.
AuditRecord verify_corollary_3_1(std::span<const FrameSample> samples, const SlantReport& report,
                                 const Tolerances& tol);

/// h-slant ⇒ the angle λ between W and the unit axis is constant with cos λ = 1/√(1+d²).
AuditRecord verify_theorem_3_2(std::span<const FrameSample> samples, const SlantReport& report,
                               const Tolerances& tol);

/// Algebra of a fixed axis against a constant-κ frame: κa1 + a3 = ⟨W,u⟩ and
/// a2 constant ⇔ a3 = ⟨W,u⟩/(1+κ²). Uses u = W/‖W‖ plus `extra_axes`.
/// Throws NotDarbouxSlant when κ is not constant.
AuditRecord verify_theorems_3_3_3_4(std::span<const FrameSample> samples, const SlantReport& report,
                                    const Tolerances& tol, std::span<const Vec3> extra_axes = {});

/// Runs the audit named `theorem_id` (or all of them for "all"). A
/// NotDarbouxSlant from the 3.3-3.4 audit is recorded as not_applicable.
std::vector<AuditRecord> verify(const RuledSurfaceSpec& surface, const SampleGrid& grid, const Tolerances& tol,
                                std::string_view theorem_id);

std::vector<AuditRecord> verify(std::span<const FrameSample> samples, const SlantReport& report,
                                const Tolerances& tol, std::string_view theorem_id);

bool is_theorem_id(std::string_view id);

}  // namespace slant
