#include "cli.hpp"

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "geoprove/bench.hpp"
#include "geoprove/errors.hpp"
#include "geoprove/report.hpp"

namespace geoprove::cli {

namespace {

std::optional<PinChoice> parse_pin(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw Error("--pin expects two labels separated by a comma");
  PinChoice pin;
  pin.origin = text.substr(0, comma);
  pin.second = text.substr(comma + 1);
  if (pin.origin.empty() || pin.second.empty() || pin.origin == pin.second) {
    throw Error("--pin expects two distinct labels");
  }
  return pin;
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Proved: return kProved;
    case Verdict::Timeout: return kTimeout;
    case Verdict::NotProved:
    case Verdict::Inconsistent: return kNotProved;
  }
  return kNotProved;
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geometry theorem prover (Wu's method and Groebner bases)", "geoprove"};
  app.require_subcommand(1);

  std::string method = "wu";
  std::string timeout_text;
  double timeout = 0;

  auto* prove = app.add_subcommand("prove", "Prove the goal of one protocol file");
  std::string file, pin_text, pin_axis, ndg_mode = "wu", report = "text", out_path;
  bool verify = false;
  prove->add_option("file", file, "Protocol file")->required();
  prove->add_option("--method", method, "wu or groebner")->check(CLI::IsMember({"wu", "groebner"}));
  prove->add_option("--pin", pin_text, "Pinned free points, e.g. A,B");
  prove->add_option("--pin-axis", pin_axis, "Axis for the second pinned point")->check(CLI::IsMember({"x", "y"}));
  prove->add_option("--ndg-mode", ndg_mode, "NDGs assumed by the Groebner method")
      ->check(CLI::IsMember({"none", "side", "wu"}));
  prove->add_option("--report", report, "text or json")->check(CLI::IsMember({"text", "json"}));
  prove->add_option("--out", out_path, "Write the report here instead of standard output");
  prove->add_option("--timeout", timeout, "Seconds; 0 for none")->check(CLI::NonNegativeNumber);
  prove->add_flag("--verify-certificate", verify, "Replay the Wu certificates");

  auto* bench = app.add_subcommand("bench", "Prove every .gp file of a directory and time it");
  std::string dir, csv_path;
  int repeats = 1;
  bench->add_option("dir", dir, "Corpus directory")->required();
  bench->add_option("--method", method, "wu or groebner")->check(CLI::IsMember({"wu", "groebner"}));
  bench->add_option("--timeout", timeout, "Seconds per entry; 0 for none")->check(CLI::NonNegativeNumber);
  bench->add_option("--csv", csv_path, "Also write CSV here");
  bench->add_option("--repeats", repeats, "Runs per entry; the fastest counts")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    ProveOptions options;
    options.method = method == "wu" ? Method::Wu : Method::Groebner;
    options.timeout_seconds = timeout;

    if (prove->parsed()) {
      options.assign.pin = parse_pin(pin_text);
      if (!pin_axis.empty()) options.assign.axis = pin_axis == "x" ? PinAxis::X : PinAxis::Y;
      options.ndg_mode = ndg_mode == "none" ? NdgMode::None : ndg_mode == "side" ? NdgMode::Side : NdgMode::Wu;
      options.verify_certificates = verify;
      const ProofRun run = prove_file(file, options);
      for (const auto& w : run.warnings) err << "warning: " << w.message() << "\n";
      write_output(emit_report(run, report == "json" ? ReportFormat::Json : ReportFormat::Text), out_path, out);
      if (run.certificates_verified && !*run.certificates_verified) return kNotProved;
      return exit_code(run.result.verdict);
    }

    if (!std::filesystem::is_directory(dir)) throw Error("not a directory: " + dir);
    BenchOptions bo;
    bo.prove = options;
    bo.repeats = repeats;
    const auto entries = run_bench(dir, bo);
    out << bench_table(entries);
    if (!csv_path.empty()) write_output(bench_csv(entries), csv_path, out);
    const bool all_ok = std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.ok(); });
    return all_ok ? kProved : kNotProved;
  } catch (const ProtocolError& e) {
    err << file << ":" << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace geoprove::cli
