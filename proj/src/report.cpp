#include "slant/io/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "slant/io/spec_file.hpp"

namespace slant::io {

namespace {

using nlohmann::ordered_json;

ordered_json vec_json(const Vec3& v) { return ordered_json::array({v.x, v.y, v.z}); }

ordered_json sample_json(const FrameSample& s) {
  ordered_json j;
  j["u"] = s.u;
  j["s1"] = s.s1;
  j["kappa"] = s.kappa;
  j["kappa_prime"] = s.kappa_prime;
  j["sigma"] = s.sigma;
  j["q"] = vec_json(s.q);
  j["h"] = vec_json(s.h);
  j["a"] = vec_json(s.a);
  j["W"] = vec_json(s.W);
  j["striction_point"] = vec_json(s.striction_point);
  return j;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ordered_json constancy_json(const ConstancyResult& c) {
  ordered_json j;
  j["is_constant"] = c.is_constant;
  j["mean"] = c.mean;
  j["spread"] = c.spread;
  j["relative_spread"] = c.relative_spread;
  return j;
}

ordered_json verdict_json(SlantKind kind, const SlantVerdict& v) {
  ordered_json j;
  j["verdict"] = v.verdict;
  j["axis"] = vec_json(v.axis);
  if (kind == SlantKind::darboux_strict) {
    j["darboux_constant"] = v.value;
  } else {
    j["cos_angle"] = v.value;
    j["angle"] = std::acos(std::fmax(-1.0, std::fmin(1.0, v.value)));
  }
  j["residual"] = v.constancy.relative_spread;
  j["fit_residual"] = v.fit_residual;
  j["tied"] = v.tied;
  j["degenerate"] = v.degenerate;
  return j;
}

ordered_json audit_json(const AuditRecord& rec) {
  ordered_json j;
  j["status"] = std::string(name(rec.status));
  ordered_json checks = ordered_json::array();
  for (const auto& c : rec.checks) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["value"] = c.value;
    cj["threshold"] = c.threshold;
    cj["passed"] = c.passed;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["notes"] = rec.notes;
  return j;
}

ordered_json report_json(const ReportMeta& meta, std::span<const FrameSample> samples, const SlantReport& slant,
                         bool with_verdicts, std::span<const AuditRecord> audits) {
  ordered_json doc;
  ordered_json m;
  m["tool"] = kToolName;
  m["version"] = kToolVersion;
  m["command"] = meta.command;
  m["surface"] = meta.surface;
  m["sampled"] = meta.sampled;
  m["param_range"] = ordered_json::array({meta.param_range.lo, meta.param_range.hi});
  m["samples"] = meta.samples;
  m["tolerances"] = {{"tol", meta.tolerances.tol}, {"angle_tol", meta.tolerances.angle_tol}};
  m["expected"] = expected_json(meta.expected);
  doc["meta"] = std::move(m);

  ordered_json rows = ordered_json::array();
  for (const auto& s : samples) rows.push_back(sample_json(s));
  doc["samples"] = std::move(rows);

  ordered_json sl;
  sl["kappa_constancy"] = constancy_json(slant.kappa);
  sl["sigma_constancy"] = constancy_json(slant.sigma);
  if (with_verdicts) {
    for (SlantKind kind : kSlantKinds) sl[std::string(name(kind))] = verdict_json(kind, slant[kind]);
  }
  doc["slant"] = std::move(sl);

  ordered_json au = ordered_json::object();
  for (const auto& rec : audits) au[rec.theorem] = audit_json(rec);
  doc["audits"] = std::move(au);
  return doc;
}

std::string samples_csv(std::span<const FrameSample> samples) {
  std::ostringstream out;
  out << "u,s1,kappa,kappa_prime,sigma,qx,qy,qz,hx,hy,hz,ax,ay,az,Wx,Wy,Wz,cx,cy,cz\n";
  for (const auto& s : samples) {
    const double row[] = {s.u,   s.s1,  s.kappa, s.kappa_prime, s.sigma, s.q.x, s.q.y, s.q.z, s.h.x, s.h.y,
                          s.h.z, s.a.x, s.a.y,   s.a.z,         s.W.x,   s.W.y, s.W.z, s.striction_point.x,
                          s.striction_point.y,   s.striction_point.z};
    bool first = true;
    for (double v : row) {
      if (!first) out << ',';
      out << format_double(v);
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

void write_atomically(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) throw IoError("write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move output into place at '" + path.string() + "'");
  }
}

}  // namespace slant::io
