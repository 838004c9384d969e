#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>

#include <json.hpp>

#include "slant/analysis.hpp"
#include "slant/audits.hpp"

namespace slant::io {

inline constexpr const char* kToolName = "slant";
inline constexpr const char* kToolVersion = "1.0.0";

struct ReportMeta {
  std::string command;
  nlohmann::ordered_json surface;  // spec document as read
  std::size_t samples = 0;
  Tolerances tolerances;
  Interval param_range;
  bool sampled = false;
  ExpectedInvariants expected;
};

/// Report document with top-level keys "meta", "samples", "slant", "audits".
/// Without a SlantReport the slant block only carries the κ and σ constancy results.
nlohmann::ordered_json report_json(const ReportMeta& meta, std::span<const FrameSample> samples,
                                   const SlantReport& slant, bool with_verdicts,
                                   std::span<const AuditRecord> audits);

nlohmann::ordered_json constancy_json(const ConstancyResult& c);
nlohmann::ordered_json verdict_json(SlantKind kind, const SlantVerdict& v);
nlohmann::ordered_json audit_json(const AuditRecord& record);

/// CSV sample table, header u,s1,kappa,kappa_prime,sigma,qx,...,cz; 17 significant digits.
std::string samples_csv(std::span<const FrameSample> samples);

/// `%.17g`.
std::string format_double(double v);

/// Writes `content` to a sibling temporary file and renames it over `path`.
/// Throws IoError on failure.
void write_atomically(const std::filesystem::path& path, const std::string& content);

}  // namespace slant::io
