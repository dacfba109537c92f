#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "geoprove/prover.hpp"

namespace geoprove {

struct BenchEntry {
  std::string name;
  std::filesystem::path file;
  Verdict expected = Verdict::Proved;
  Verdict verdict = Verdict::NotProved;
  /// Best of the repeats; the phase compared across provers.
  double remainder_seconds = 0;
  double triangulate_seconds = 0;
  double total_seconds = 0;
  std::size_t ndg_count = 0;
  /// Non-empty when the entry could not be run.
  std::string error;

  bool ok() const { return error.empty() && verdict == expected; }
};

struct BenchOptions {
  ProveOptions prove;
  /// Each entry is proved this many times; timings keep the minimum.
  int repeats = 1;
};

/// Every `*.gp` file under `dir`, sorted by file name. Failures are recorded
/// per entry and never stop the run.
std::vector<BenchEntry> run_bench(const std::filesystem::path& dir, const BenchOptions& options = {});

std::string bench_table(const std::vector<BenchEntry>& entries);
std::string bench_csv(const std::vector<BenchEntry>& entries);

}  // namespace geoprove
