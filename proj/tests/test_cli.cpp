#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "geoprove/bench.hpp"
#include "geoprove/report.hpp"
#include "support.hpp"

using namespace geoprove;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const char* rel) { return (geoprove::test::corpus_dir() / rel).string(); }
std::string data(const char* rel) { return (geoprove::test::data_dir() / rel).string(); }

fs::path scratch(const char* name) {
  const fs::path d = fs::temp_directory_path() / ("geoprove-test-" + std::string(name));
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("proved") {
    const auto o = run({"prove", corpus("worked/midsegment.gp"), "--method", "wu"});
    CHECK(o.code == cli::kProved);
    CHECK(o.out.find("g1: 0") != std::string::npos);
  }

  TEST_CASE("json report with certificate check") {
    const auto o = run({"prove", corpus("worked/orthocenter.gp"), "--report", "json", "--verify-certificate"});
    CHECK(o.code == cli::kProved);
    const auto j = nlohmann::json::parse(o.out);
    CHECK(j.at("certificates_verified") == true);
    bool saw = false;
    for (const auto& n : j.at("ndgs")) saw = saw || n.at("geometric").at("text") == "A ≢ B";
    CHECK(saw);
  }

  TEST_CASE("not proved") {
    CHECK(run({"prove", data("false.gp")}).code == cli::kNotProved);
    CHECK(run({"prove", data("false.gp"), "--method", "groebner"}).code == cli::kNotProved);
  }

  TEST_CASE("timeout") {
    const auto o = run({"prove", corpus("chou/ex036_butterfly.gp"), "--timeout", "0.000001"});
    CHECK(o.code == cli::kTimeout);
  }

  TEST_CASE("input errors") {
    const auto broken = run({"prove", data("broken.gp")});
    CHECK(broken.code == cli::kInputError);
    CHECK(broken.err.find("line 2, column 9") != std::string::npos);
    CHECK(run({"prove", data("missing.gp")}).code == cli::kInputError);
    CHECK(run({"prove", corpus("worked/midsegment.gp"), "--method", "magic"}).code == cli::kInputError);
    CHECK(run({"prove", corpus("worked/midsegment.gp"), "--pin", "A,Q"}).code == cli::kInputError);
    CHECK(run({}).code == cli::kInputError);
  }

  TEST_CASE("pin and groebner options") {
    CHECK(run({"prove", corpus("worked/orthocenter.gp"), "--pin", "A,B", "--pin-axis", "x"}).code == cli::kProved);
    for (const char* mode : {"none", "side", "wu"}) {
      CAPTURE(mode);
      const auto o = run({"prove", corpus("worked/midsegment.gp"), "--method", "groebner", "--ndg-mode", mode});
      CHECK(o.code == cli::kProved);
    }
  }

  TEST_CASE("report to a file") {
    const auto dir = scratch("out");
    const auto path = (dir / "r.json").string();
    CHECK(run({"prove", corpus("worked/simson.gp"), "--report", "json", "--out", path}).code == cli::kProved);
    const auto back = parse_json_report(read_text_file(path));
    CHECK(back.result.verdict == Verdict::Proved);
  }

  TEST_CASE("bench on an empty directory") {
    const auto dir = scratch("empty");
    const auto o = run({"bench", dir.string()});
    CHECK(o.code == 0);
    CHECK(run_bench(dir).empty());
  }

  TEST_CASE("bench on the worked examples with CSV") {
    const auto dir = scratch("csv");
    const auto csv = (dir / "t.csv").string();
    const auto o = run({"bench", (geoprove::test::corpus_dir() / "worked").string(), "--csv", csv});
    CHECK(o.code == 0);
    const auto text = read_text_file(csv);
    CHECK(std::count(text.begin(), text.end(), '\n') == 5);
    CHECK(text.find("proved") != std::string::npos);
  }

  TEST_CASE("bench keeps going past a bad entry") {
    const auto dir = scratch("mixed");
    fs::copy_file(geoprove::test::data_dir() / "broken.gp", dir / "a_broken.gp");
    fs::copy_file(geoprove::test::corpus_dir() / "worked" / "midsegment.gp", dir / "b_mid.gp");
    const auto entries = run_bench(dir);
    REQUIRE(entries.size() == 2);
    CHECK_FALSE(entries[0].ok());
    CHECK_FALSE(entries[0].error.empty());
    CHECK(entries[1].ok());
    CHECK(run({"bench", dir.string()}).code == cli::kNotProved);
  }
}
