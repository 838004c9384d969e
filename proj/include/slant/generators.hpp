#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "slant/interpolation.hpp"
#include "slant/surface.hpp"

namespace slant {

/// Conical curvature prescribed as a function of the spherical arc length s1.
class KappaProfile {
 public:
  struct Constant {
    double kappa = 0.0;
  };
  /// σ ≡ d, solved in closed form: κ(s1) = d·s1 / √(1 - d²s1²).
  struct ConstantSigma {
    double d = 0.0;
  };
  /// Natural cubic spline through (s1, κ) knots.
  struct Tabulated {
    CubicSpline spline;
  };
  using Shape = std::variant<Constant, ConstantSigma, Tabulated>;

  /// κ ≡ 0 on [0, 1].
  KappaProfile() : shape_(Constant{}), domain_{0.0, 1.0} {}

  static KappaProfile constant(double kappa, const Interval& domain);
  /// The domain is clamped to |d·s1| ≤ 0.95; without a domain that bound is used.
  static KappaProfile constant_sigma(double d, std::optional<Interval> domain = std::nullopt);
  static KappaProfile tabulated(std::vector<double> s1, std::vector<double> kappa);

  double kappa(double s1) const;
  double kappa_prime(double s1) const;

  const Interval& domain() const { return domain_; }
  const Shape& shape() const { return shape_; }
  std::string type_name() const;

 private:
  KappaProfile(Shape shape, const Interval& domain) : shape_(std::move(shape)), domain_(domain) {}
  void check_domain(double s1) const;

  Shape shape_;
  Interval domain_;
};

inline constexpr double kConstantSigmaClamp = 0.95;

/// κ at `s1`; throws OutOfDomain outside the profile domain.
double kappa_of_s1(const KappaProfile& profile, double s1);

struct Frame {
  Vec3 q{1, 0, 0};
  Vec3 h{0, 1, 0};
  Vec3 a{0, 0, 1};
};

struct FrameNode {
  double s1 = 0.0;
  Frame frame;
};

struct GeneratorConfig {
  KappaProfile profile;
  double step = 0.005;   // requested RK4 step in s1; rounded down to divide the domain evenly
  double alpha = 0.0;    // striction tangent ċ = cos α q + sin α a
  Frame initial_frame;   // frame at the start of the domain
};

/// One classical RK4 step of dq = h, dh = -q + κa, da = -κh from (s1, frame)
/// over `tau` (which may be shorter than the configured step), followed by
/// Gram-Schmidt in the order q, h, a.
Frame rk4_step(const KappaProfile& profile, double s1, const Frame& frame, double tau);

/// Fixed-step RK4 integration of the frame equations over the profile domain.
/// Throws BadParams when step > domain/64 or the initial frame is not an
/// orthonormal right-handed triple within 1e-12.
std::vector<FrameNode> integrate_frame(const GeneratorConfig& config);

/// Ruled surface with director q(s1) and base curve the striction curve
/// c(s1) = ∫ (cos α q + sin α a) ds1. The surface parameter u is s1.
RuledSurfaceSpec build_surface(std::vector<FrameNode> frames, const GeneratorConfig& config);

RuledSurfaceSpec generate_surface(const GeneratorConfig& config);

}  // namespace slant
