#include "slant/io/cli.hpp"

#include <charconv>
#include <ostream>

#include <CLI11.hpp>

#include "slant/audits.hpp"
#include "slant/errors.hpp"
#include "slant/io/mesh.hpp"
#include "slant/io/report.hpp"
#include "slant/io/spec_file.hpp"

namespace slant::cli {

namespace {

double parse_number(const std::string& text, const std::string& what, const std::string& usage) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw UsageError("invalid " + what + " '" + text + "'", usage);
  return v;
}

std::size_t parse_count(const std::string& text, const std::string& what, const std::string& usage) {
  std::size_t v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw UsageError("invalid " + what + " '" + text + "'", usage);
  return v;
}

void add_analysis_options(CLI::App* sub, AnalysisOptions& o) {
  sub->add_option("--surface", o.surface, "surface spec JSON file")->required();
  sub->add_option("--samples", o.samples, "number of grid samples (>= 16)")->capture_default_str();
  sub->add_option("--tol", o.tol, "constancy tolerance (default 1e-6, 1e-3 for sampled specs)");
  sub->add_option("--angle-tol", o.angle_tol, "minimum |cos theta| for q/h/a-slant")->capture_default_str();
  sub->add_option("--out", o.out, "report JSON path (stdout when omitted)");
  sub->add_flag("--csv", o.csv, "also write the sample table as CSV next to --out");
}

void check_analysis(const CLI::App* sub, AnalysisOptions& o, const std::string& usage) {
  o.tol_given = sub->count("--tol") > 0;
  if (o.samples < 16) throw UsageError("--samples must be at least 16", usage);
  if (!(o.tol > 0.0)) throw UsageError("--tol must be positive", usage);
  if (!(o.angle_tol >= 0.0)) throw UsageError("--angle-tol must be non-negative", usage);
  if (o.csv && !o.out) throw UsageError("--csv requires --out", usage);
}

void emit(const std::optional<std::filesystem::path>& path, const std::string& text, std::ostream& out) {
  if (path) {
    io::write_atomically(*path, text);
  } else {
    out << text;
  }
}

int analyze(const AnalysisOptions& o, const std::string& command, const std::string* theorem, bool verdicts,
            std::ostream& out) {
  const io::LoadedSurface loaded = io::read_surface_file(o.surface);
  const Tolerances tol{loaded.sampled && !o.tol_given ? kSampledTol : o.tol, o.angle_tol};
  const SampleGrid grid = SampleGrid::uniform(loaded.surface.range, o.samples);
  const auto samples = frame_samples(loaded.surface, grid);
  const SlantReport report = classify(samples, tol);
  std::vector<AuditRecord> audits;
  if (theorem) audits = verify(samples, report, tol, *theorem);

  io::ReportMeta meta;
  meta.command = command;
  meta.surface = loaded.source;
  meta.samples = samples.size();
  meta.tolerances = tol;
  meta.param_range = loaded.surface.range;
  meta.sampled = loaded.sampled;
  meta.expected = loaded.surface.expected;
  emit(o.out, io::report_json(meta, samples, report, verdicts, audits).dump(2) + "\n", out);
  if (o.csv) {
    std::filesystem::path csv = *o.out;
    csv.replace_extension(".csv");
    io::write_atomically(csv, io::samples_csv(samples));
  }
  return kExitOk;
}

int execute(const Analyze& c, std::ostream& out) { return analyze(c.options, "analyze", nullptr, false, out); }

int execute(const Classify& c, std::ostream& out) { return analyze(c.options, "classify", nullptr, true, out); }

int execute(const Verify& c, std::ostream& out) { return analyze(c.options, "verify", &c.theorem, true, out); }

int execute(const Generate& c, std::ostream& out) {
  const io::LoadedSurface loaded = io::read_surface_file(c.surface);
  if (loaded.sampled) throw io::SchemaError("generate expects a catalog or prescribed_kappa spec");
  const SampleGrid grid = SampleGrid::uniform(loaded.surface.range, c.samples);
  nlohmann::ordered_json doc = io::sampled_spec_json(loaded.surface, grid);
  doc["source"] = loaded.source;
  emit(c.out, doc.dump(2) + "\n", out);
  return kExitOk;
}

int execute(const Export& c, std::ostream& out) {
  const io::LoadedSurface loaded = io::read_surface_file(c.surface);
  emit(c.out, io::export_obj(loaded.surface, c.columns, c.v_min, c.v_max, c.rows), out);
  return kExitOk;
}

}  // namespace

Command parse_cli(const std::vector<std::string>& args) {
  CLI::App app{"Moving frames, conical curvature and slant classification of ruled surfaces", "slant"};
  app.require_subcommand(1);

  Analyze analyze_cmd;
  Classify classify_cmd;
  Verify verify_cmd;
  Generate generate_cmd;
  Export export_cmd;
  std::string v_range = "-1:1";
  std::string grid = "64x16";

  auto* analyze_sub = app.add_subcommand("analyze", "frame, curvature and Darboux samples");
  add_analysis_options(analyze_sub, analyze_cmd.options);
  auto* classify_sub = app.add_subcommand("classify", "q-/h-/a-/Darboux-slant classification");
  add_analysis_options(classify_sub, classify_cmd.options);
  auto* verify_sub = app.add_subcommand("verify", "numerical theorem audits");
  add_analysis_options(verify_sub, verify_cmd.options);
  verify_sub->add_option("--theorem", verify_cmd.theorem, "2.1, 3.1, cor3.1, 3.2, 3.3-3.4 or all")
      ->capture_default_str();
  auto* generate_sub = app.add_subcommand("generate", "sample a catalog or prescribed-kappa surface");
  generate_sub->add_option("--surface", generate_cmd.surface, "surface spec JSON file")->required();
  generate_sub->add_option("--samples", generate_cmd.samples, "number of rows (>= 16)")->capture_default_str();
  generate_sub->add_option("--out", generate_cmd.out, "output spec path (stdout when omitted)");
  auto* export_sub = app.add_subcommand("export", "OBJ mesh of the surface strip");
  export_sub->add_option("--surface", export_cmd.surface, "surface spec JSON file")->required();
  export_sub->add_option("--v-range", v_range, "ruling parameter range MIN:MAX")->capture_default_str();
  export_sub->add_option("--grid", grid, "u columns x v rows, NxM")->capture_default_str();
  export_sub->add_option("--out", export_cmd.out, "OBJ path (stdout when omitted)");

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("slant");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    throw HelpRequested{subs.empty() ? app.help() : subs.front()->help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    const auto subs = app.get_subcommands();
    throw UsageError(e.what(), subs.empty() ? app.help() : subs.front()->help());
  }

  if (analyze_sub->parsed()) {
    check_analysis(analyze_sub, analyze_cmd.options, analyze_sub->help());
    return analyze_cmd;
  }
  if (classify_sub->parsed()) {
    check_analysis(classify_sub, classify_cmd.options, classify_sub->help());
    return classify_cmd;
  }
  if (verify_sub->parsed()) {
    check_analysis(verify_sub, verify_cmd.options, verify_sub->help());
    if (!is_theorem_id(verify_cmd.theorem)) {
      throw UsageError("unknown theorem id '" + verify_cmd.theorem + "'", verify_sub->help());
    }
    return verify_cmd;
  }
  if (generate_sub->parsed()) {
    if (generate_cmd.samples < 16) throw UsageError("--samples must be at least 16", generate_sub->help());
    return generate_cmd;
  }

  const std::string usage = export_sub->help();
  const auto colon = v_range.find(':');
  if (colon == std::string::npos) throw UsageError("--v-range must be MIN:MAX", usage);
  export_cmd.v_min = parse_number(v_range.substr(0, colon), "v range", usage);
  export_cmd.v_max = parse_number(v_range.substr(colon + 1), "v range", usage);
  if (!(export_cmd.v_max > export_cmd.v_min)) throw UsageError("--v-range needs MIN < MAX", usage);
  const auto x = grid.find('x');
  if (x == std::string::npos) throw UsageError("--grid must be NxM", usage);
  export_cmd.columns = parse_count(grid.substr(0, x), "grid", usage);
  export_cmd.rows = parse_count(grid.substr(x + 1), "grid", usage);
  if (export_cmd.columns < 2 || export_cmd.rows < 2) throw UsageError("--grid needs at least 2x2", usage);
  return export_cmd;
}

int run(const Command& command, std::ostream& out, std::ostream& err) {
  try {
    return std::visit([&](const auto& c) { return execute(c, out); }, command);
  } catch (const CylindricalDirector& e) {
    err << "slant: " << e.what() << '\n';
    return kExitCylindrical;
  } catch (const io::IoError& e) {
    err << "slant: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "slant: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    err << "slant: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "slant: " << e.what() << '\n';
    return kExitUsage;
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Command command;
  try {
    command = parse_cli(args);
  } catch (const HelpRequested& help) {
    out << help.text;
    return kExitOk;
  } catch (const UsageError& e) {
    err << "slant: " << e.what() << "\n\n" << e.usage();
    return kExitUsage;
  }
  return run(command, out, err);
}

}  // namespace slant::cli
