#include "geoprove/prover.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "geoprove/errors.hpp"
#include "geoprove/ndg.hpp"

namespace geoprove {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

}  // namespace

ProofRun prove(const ConstructionProtocol& p, const ProveOptions& options) {
  const auto start = Clock::now();
  const Budget budget = options.timeout_seconds > 0
                            ? Budget(std::chrono::duration<double>(options.timeout_seconds))
                            : Budget::unlimited();
  ProofRun run;
  run.protocol = p;
  run.warnings = validate(p);
  run.assignment = assign_coordinates(p, options.assign);
  run.system = algebrize(p, run.assignment);
  const double algebrize_seconds = seconds_since(start);

  try {
    if (options.method == Method::Wu) {
      run.result = prove_wu(run.system, budget, options.wu);
    } else {
      run.result = prove_groebner(run.system, options.ndg_mode, budget, options.order);
    }
  } catch (const TimeoutError& e) {
    run.result = ProofResult{};
    run.result.method = options.method;
    run.result.verdict = Verdict::Timeout;
    run.result.message = e.what();
    run.result.stats.peak_monomials = budget.peak_monomials();
  }

  if (options.interpret_ndgs && !run.result.ndgs.empty()) {
    run.result.ndgs = interpret_all(run.result.ndgs, p, run.assignment);
    run.result.real_ndgs = real_simplify(run.result.ndgs);
  }
  if (options.verify_certificates && run.result.chain) {
    bool ok = true;
    for (const auto& c : run.result.certificates) ok = ok && verify_certificate(c, run.system, *run.result.chain);
    run.certificates_verified = ok;
  }
  run.result.stats.algebrize_seconds = algebrize_seconds;
  run.result.stats.total_seconds = seconds_since(start);
  return run;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ProofRun prove_file(const std::filesystem::path& path, const ProveOptions& options) {
  ConstructionProtocol p = parse_protocol(read_text_file(path));
  if (p.name.empty()) p.name = path.stem().string();
  return prove(p, options);
}

}  // namespace geoprove
