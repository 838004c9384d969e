#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slant/jet.hpp"

namespace slant {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  bool contains(double t, double slack = 0.0) const { return t >= lo - slack && t <= hi + slack; }
};

/// Named scalar/array parameters. Scalars are stored as one-element arrays.
class Params {
 public:
  Params() = default;
  Params(std::initializer_list<std::pair<const std::string, double>> scalars);

  void set(const std::string& key, double value) { values_[key] = {value}; }
  void set(const std::string& key, std::vector<double> values) { values_[key] = std::move(values); }

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  double scalar(const std::string& key, double fallback) const;
  double scalar(const std::string& key) const;
  const std::vector<double>& array(const std::string& key) const;

  const std::map<std::string, std::vector<double>>& entries() const { return values_; }

 private:
  std::map<std::string, std::vector<double>> values_;
};

struct Provenance {
  enum class Kind { catalog, prescribed_kappa, sampled };
  Kind kind = Kind::catalog;
  std::string name;
  Params params;
};

/// Invariants a surface is known to have by construction; tests and the
/// generate/analyze round trip compare against these.
struct ExpectedInvariants {
  std::optional<double> kappa;
  std::optional<double> sigma;
  std::optional<Vec3> darboux;
  std::map<std::string, bool> verdicts;  // keyed by slant kind name
};

using JetFunction = std::function<Jet3(double)>;

/// r(u, v) = f(u) + v·q(u) with u in `range`. Both jets are u-parametrized.
struct RuledSurfaceSpec {
  JetFunction base_curve;
  JetFunction director;
  Interval range;
  Provenance provenance;
  ExpectedInvariants expected;
};

/// The same surface moved by the rotation `r`.
RuledSurfaceSpec rotated(const RuledSurfaceSpec& surface, const Mat3& r);

}  // namespace slant
