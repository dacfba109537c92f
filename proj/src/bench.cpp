#include "geoprove/bench.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "geoprove/errors.hpp"

namespace geoprove {

std::vector<BenchEntry> run_bench(const std::filesystem::path& dir, const BenchOptions& options) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".gp") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<BenchEntry> out;
  for (const auto& f : files) {
    BenchEntry entry;
    entry.file = f;
    entry.name = f.stem().string();
    try {
      for (int i = 0; i < std::max(1, options.repeats); ++i) {
        const ProofRun run = prove_file(f, options.prove);
        const ProofStats& s = run.result.stats;
        if (i == 0) {
          entry.name = run.protocol.name;
          entry.verdict = run.result.verdict;
          entry.ndg_count = run.result.ndgs.size();
          entry.remainder_seconds = s.remainder_seconds;
          entry.triangulate_seconds = s.triangulate_seconds;
          entry.total_seconds = s.total_seconds;
        } else {
          entry.remainder_seconds = std::min(entry.remainder_seconds, s.remainder_seconds);
          entry.triangulate_seconds = std::min(entry.triangulate_seconds, s.triangulate_seconds);
          entry.total_seconds = std::min(entry.total_seconds, s.total_seconds);
        }
      }
    } catch (const std::exception& e) {
      entry.error = e.what();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

namespace {

std::string verdict_cell(const BenchEntry& e) { return e.error.empty() ? std::string(verdict_name(e.verdict)) : "error"; }

}  // namespace

std::string bench_table(const std::vector<BenchEntry>& entries) {
  std::size_t width = 4;
  for (const auto& e : entries) width = std::max(width, e.name.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(width)) << "name" << "  " << std::setw(12) << "verdict"
     << std::right << std::setw(14) << "remainder ms" << std::setw(16) << "triangulate ms" << std::setw(12)
     << "total ms" << std::setw(6) << "ndgs" << "\n";
  os << std::fixed << std::setprecision(3);
  for (const auto& e : entries) {
    os << std::left << std::setw(static_cast<int>(width)) << e.name << "  " << std::setw(12) << verdict_cell(e)
       << std::right << std::setw(14) << e.remainder_seconds * 1e3 << std::setw(16) << e.triangulate_seconds * 1e3
       << std::setw(12) << e.total_seconds * 1e3 << std::setw(6) << e.ndg_count << "\n";
    if (!e.error.empty()) os << "  error: " << e.error << "\n";
  }
  const auto passed = std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.ok(); });
  os << passed << "/" << entries.size() << " as expected\n";
  return os.str();
}

std::string bench_csv(const std::vector<BenchEntry>& entries) {
  std::ostringstream os;
  os << "name,file,expected,verdict,remainder_seconds,triangulate_seconds,total_seconds,ndgs,error\n";
  os << std::setprecision(9);
  for (const auto& e : entries) {
    auto quoted = [](std::string s) {
      std::replace(s.begin(), s.end(), '"', '\'');
      return "\"" + s + "\"";
    };
    os << quoted(e.name) << "," << e.file.filename().string() << "," << verdict_name(e.expected) << "," << verdict_cell(e)
       << "," << e.remainder_seconds << "," << e.triangulate_seconds << "," << e.total_seconds << "," << e.ndg_count
       << "," << quoted(e.error) << "\n";
  }
  return os.str();
}

}  // namespace geoprove
