#include "geoprove/report.hpp"

#include <iomanip>
#include <sstream>

#include "geoprove/errors.hpp"

namespace geoprove {

using nlohmann::json;

namespace {

std::string ndg_line(const NdgCondition& n) {
  std::string line = n.poly.to_string() + " != 0";
  if (n.real_reading) line += "   [real-interpretation: " + *n.real_reading + "]";
  if (n.geometric) line += "   (" + n.geometric->to_string() + ")";
  return line;
}

std::string_view origin_name(NdgOrigin o) {
  return o == NdgOrigin::TriangulationInitial ? "initial" : "side";
}

NdgOrigin parse_origin(const std::string& s) {
  if (s == "initial") return NdgOrigin::TriangulationInitial;
  if (s == "side") return NdgOrigin::AlgebraizationSide;
  throw Error("unknown NDG origin '" + s + "'");
}

GeometricCondition::Kind parse_condition_kind(const std::string& s) {
  using K = GeometricCondition::Kind;
  for (K k : {K::NotIdentical, K::NotCollinear, K::NotPerpendicular, K::NotOnCircle, K::NotParallel}) {
    if (condition_kind_name(k) == s) return k;
  }
  throw Error("unknown condition kind '" + s + "'");
}

Verdict parse_verdict(const std::string& s) {
  for (Verdict v : {Verdict::Proved, Verdict::NotProved, Verdict::Timeout, Verdict::Inconsistent}) {
    if (verdict_name(v) == s) return v;
  }
  throw Error("unknown verdict '" + s + "'");
}

json ndg_json(const NdgCondition& n) {
  json j;
  j["poly"] = n.poly.to_string();
  j["origin"] = origin_name(n.origin);
  j["chain_index"] = n.chain_index;
  if (n.geometric) {
    j["geometric"] = {{"kind", condition_kind_name(n.geometric->kind)},
                      {"points", n.geometric->points},
                      {"text", n.geometric->to_string()}};
  } else {
    j["geometric"] = nullptr;
  }
  j["real_reading"] = n.real_reading ? json(*n.real_reading) : json(nullptr);
  return j;
}

NdgCondition ndg_from_json(const json& j) {
  NdgCondition n;
  n.poly = parse_polynomial(j.at("poly").get<std::string>());
  n.origin = parse_origin(j.at("origin").get<std::string>());
  n.chain_index = j.at("chain_index").get<int>();
  if (!j.at("geometric").is_null()) {
    const json& g = j.at("geometric");
    n.geometric = GeometricCondition{parse_condition_kind(g.at("kind").get<std::string>()),
                                     g.at("points").get<std::vector<Label>>()};
  }
  if (!j.at("real_reading").is_null()) n.real_reading = j.at("real_reading").get<std::string>();
  return n;
}

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

}  // namespace

std::optional<std::string> goal_caveat(const Statement& goal) {
  switch (goal.kind) {
    case StatementKind::Parallel:
      return "the polynomial for parallel lines also vanishes when either line degenerates to a point, "
             "so the verdict is about that weaker algebraic condition";
    case StatementKind::Collinear:
      return "the collinearity polynomial also vanishes when two of the points coincide, "
             "so the verdict is about that weaker algebraic condition";
    default: return std::nullopt;
  }
}

std::string render_text(const ProofRun& run) {
  std::ostringstream os;
  const AlgebraicSystem& sys = run.system;
  const ProofResult& r = run.result;

  os << "== protocol ==\n" << to_text(run.protocol);
  for (const auto& w : run.warnings) os << "warning: " << w.message() << "\n";

  os << "\n== coordinates ==\n";
  for (const auto& label : run.assignment.order) {
    const PointCoords& pc = run.assignment.at(label);
    os << label << " = (" << pc.x.to_string() << ", " << pc.y.to_string() << ")\n";
  }
  if (run.assignment.pinned) {
    const PinChoice& pin = *run.assignment.pinned;
    os << "pinned: " << pin.origin;
    if (!pin.second.empty()) os << ", " << pin.second << " on the " << (pin.axis == PinAxis::X ? "x" : "y") << "-axis";
    os << "\n";
  }

  os << "\n== polynomials ==\nconstruction:\n";
  if (sys.construction_polys.empty()) os << "  (none)\n";
  for (std::size_t i = 0; i < sys.construction_polys.size(); ++i) {
    os << "  f" << i + 1 << " [" << sys.construction_sources[i] << "] = " << sys.construction_polys[i].to_string()
       << "\n";
  }
  os << "statement:\n";
  for (std::size_t i = 0; i < sys.statement_polys.size(); ++i) {
    os << "  g" << i + 1 << " = " << sys.statement_polys[i].to_string() << "\n";
  }
  if (!sys.side_ndgs.empty()) {
    os << "side conditions:\n";
    for (const auto& p : sys.side_ndgs) os << "  " << p.to_string() << " != 0\n";
  }
  if (auto note = goal_caveat(run.protocol.goal)) os << "note: " << *note << "\n";

  os << "\n== method ==\nmethod: " << method_name(r.method) << "\n";
  if (r.chain) {
    os << "triangular system:\n";
    for (const auto& e : r.chain->chain) {
      os << "  " << e.main_var.name() << ": " << e.poly.to_string() << "   [initial " << e.initial.to_string()
         << "]\n";
    }
    if (r.chain->chain.empty()) os << "  (empty)\n";
    os << "final remainders:\n";
    for (std::size_t i = 0; i < r.certificates.size(); ++i) {
      os << "  g" << i + 1 << ": " << r.certificates[i].final_remainder.to_string() << "\n";
    }
  }
  if (run.certificates_verified) os << "certificates: " << (*run.certificates_verified ? "verified" : "FAILED") << "\n";

  os << "\n== verdict ==\n" << verdict_name(r.verdict) << "\n";
  if (r.witness) os << "witness: " << r.witness->to_string() << "\n";
  if (!r.message.empty()) os << "detail: " << r.message << "\n";

  os << "\n== non-degeneracy conditions ==\n";
  if (r.ndgs.empty()) {
    os << "no non-degeneracy conditions\n";
  } else {
    for (const auto& n : r.ndgs) os << "  " << ndg_line(n) << "\n";
    if (!(r.real_ndgs == r.ndgs)) {
      os << "over the reals:\n";
      if (r.real_ndgs.empty()) os << "  (none)\n";
      for (const auto& n : r.real_ndgs) os << "  " << ndg_line(n) << "\n";
    }
  }
  return os.str();
}

std::string render_stats(const ProofStats& s) {
  std::ostringstream os;
  os << "\n== stats ==\n"
     << "algebrize:        " << fixed(s.algebrize_seconds * 1e3, 3) << " ms\n"
     << "triangulate:      " << fixed(s.triangulate_seconds * 1e3, 3) << " ms\n"
     << "final remainder:  " << fixed(s.remainder_seconds * 1e3, 3) << " ms\n"
     << "groebner:         " << fixed(s.groebner_seconds * 1e3, 3) << " ms\n"
     << "total:            " << fixed(s.total_seconds * 1e3, 3) << " ms\n"
     << "peak monomials:   " << s.peak_monomials << "\n"
     << "max degree:       " << s.max_degree << "\n";
  return os.str();
}

json to_json(const WuCertificate& c) {
  json steps = json::array();
  for (const auto& s : c.steps) {
    steps.push_back({{"dividend_id", s.dividend_id},
                     {"chain_index", s.chain_index},
                     {"quotient", s.quotient.to_string()},
                     {"remainder", s.remainder.to_string()},
                     {"initial", s.initial.to_string()},
                     {"exponent", s.exponent},
                     {"content", s.content.get_str()}});
  }
  return {{"statement", c.statement.to_string()}, {"steps", steps}, {"final_remainder", c.final_remainder.to_string()}};
}

WuCertificate certificate_from_json(const json& j) {
  WuCertificate c;
  c.statement = parse_polynomial(j.at("statement").get<std::string>());
  for (const json& s : j.at("steps")) {
    CertificateStep step;
    step.dividend_id = s.at("dividend_id").get<std::size_t>();
    step.chain_index = s.at("chain_index").get<std::size_t>();
    step.quotient = parse_polynomial(s.at("quotient").get<std::string>());
    step.remainder = parse_polynomial(s.at("remainder").get<std::string>());
    step.initial = parse_polynomial(s.at("initial").get<std::string>());
    step.exponent = s.at("exponent").get<unsigned>();
    step.content = Integer(s.at("content").get<std::string>());
    c.steps.push_back(std::move(step));
  }
  c.final_remainder = parse_polynomial(j.at("final_remainder").get<std::string>());
  return c;
}

json to_json(const ProofRun& run) {
  const AlgebraicSystem& sys = run.system;
  const ProofResult& r = run.result;
  json j;
  j["schema"] = "geoprove-report";
  j["version"] = kReportSchemaVersion;
  j["name"] = run.protocol.name;
  j["method"] = method_name(r.method);
  j["protocol"] = to_text(run.protocol);

  json coords = json::array();
  for (const auto& label : run.assignment.order) {
    const PointCoords& pc = run.assignment.at(label);
    coords.push_back({{"point", label}, {"x", pc.x.to_string()}, {"y", pc.y.to_string()}});
  }
  j["coordinates"] = coords;
  if (run.assignment.pinned) {
    const PinChoice& pin = *run.assignment.pinned;
    j["pinned"] = {{"origin", pin.origin}, {"second", pin.second}, {"axis", pin.axis == PinAxis::X ? "x" : "y"}};
  } else {
    j["pinned"] = nullptr;
  }

  json construction = json::array();
  for (std::size_t i = 0; i < sys.construction_polys.size(); ++i) {
    construction.push_back({{"source", sys.construction_sources[i]}, {"poly", sys.construction_polys[i].to_string()}});
  }
  json statement = json::array();
  for (const auto& g : sys.statement_polys) statement.push_back(g.to_string());
  json side = json::array();
  for (const auto& p : sys.side_ndgs) side.push_back(p.to_string());
  j["polys"] = {{"construction", construction}, {"statement", statement}};
  j["side_ndgs"] = side;

  if (r.chain) {
    json chain = json::array();
    for (const auto& e : r.chain->chain) {
      chain.push_back({{"var", e.main_var.name()}, {"poly", e.poly.to_string()}, {"initial", e.initial.to_string()}});
    }
    j["chain"] = chain;
  } else {
    j["chain"] = nullptr;
  }

  j["verdict"] = verdict_name(r.verdict);
  j["witness"] = r.witness ? json(r.witness->to_string()) : json(nullptr);
  j["message"] = r.message;
  json ndgs = json::array();
  for (const auto& n : r.ndgs) ndgs.push_back(ndg_json(n));
  j["ndgs"] = ndgs;
  json real = json::array();
  for (const auto& n : r.real_ndgs) real.push_back(ndg_json(n));
  j["real_ndgs"] = real;
  json certs = json::array();
  for (const auto& c : r.certificates) certs.push_back(to_json(c));
  j["certificates"] = certs;
  j["certificates_verified"] = run.certificates_verified ? json(*run.certificates_verified) : json(nullptr);

  const ProofStats& s = r.stats;
  j["stats"] = {{"algebrize_seconds", s.algebrize_seconds}, {"triangulate_seconds", s.triangulate_seconds},
                {"remainder_seconds", s.remainder_seconds}, {"groebner_seconds", s.groebner_seconds},
                {"total_seconds", s.total_seconds},         {"peak_monomials", s.peak_monomials},
                {"max_degree", s.max_degree}};
  return j;
}

std::string emit_report(const ProofRun& run, ReportFormat format) {
  if (format == ReportFormat::Json) return to_json(run).dump(2) + "\n";
  return render_text(run) + render_stats(run.result.stats);
}

ParsedReport parse_json_report(const std::string& text) {
  ParsedReport out;
  try {
    const json j = json::parse(text);
    if (j.at("schema").get<std::string>() != "geoprove-report") throw Error("not a geoprove report");
    out.version = j.at("version").get<int>();
    if (out.version != kReportSchemaVersion) throw Error("unsupported report version " + std::to_string(out.version));
    out.name = j.at("name").get<std::string>();
    const std::string method = j.at("method").get<std::string>();
    if (method != "wu" && method != "groebner") throw Error("unknown method '" + method + "'");
    out.method = method == "wu" ? Method::Wu : Method::Groebner;
    out.protocol_text = j.at("protocol").get<std::string>();

    for (const json& c : j.at("polys").at("construction")) {
      out.system.construction_sources.push_back(c.at("source").get<std::string>());
      out.system.construction_polys.push_back(parse_polynomial(c.at("poly").get<std::string>()));
    }
    for (const json& g : j.at("polys").at("statement")) out.system.statement_polys.push_back(parse_polynomial(g.get<std::string>()));
    for (const json& p : j.at("side_ndgs")) out.system.side_ndgs.push_back(parse_polynomial(p.get<std::string>()));

    ProofResult& r = out.result;
    r.method = out.method;
    if (!j.at("chain").is_null()) {
      TriangularSystem t;
      for (const json& e : j.at("chain")) {
        t.chain.push_back({parse_variable(e.at("var").get<std::string>()), parse_polynomial(e.at("poly").get<std::string>()),
                           parse_polynomial(e.at("initial").get<std::string>())});
      }
      r.chain = std::move(t);
    }
    r.verdict = parse_verdict(j.at("verdict").get<std::string>());
    if (!j.at("witness").is_null()) r.witness = parse_polynomial(j.at("witness").get<std::string>());
    r.message = j.at("message").get<std::string>();
    for (const json& n : j.at("ndgs")) r.ndgs.push_back(ndg_from_json(n));
    for (const json& n : j.at("real_ndgs")) r.real_ndgs.push_back(ndg_from_json(n));
    for (const json& c : j.at("certificates")) r.certificates.push_back(certificate_from_json(c));
    const json& s = j.at("stats");
    r.stats.algebrize_seconds = s.at("algebrize_seconds").get<double>();
    r.stats.triangulate_seconds = s.at("triangulate_seconds").get<double>();
    r.stats.remainder_seconds = s.at("remainder_seconds").get<double>();
    r.stats.groebner_seconds = s.at("groebner_seconds").get<double>();
    r.stats.total_seconds = s.at("total_seconds").get<double>();
    r.stats.peak_monomials = s.at("peak_monomials").get<std::size_t>();
    r.stats.max_degree = s.at("max_degree").get<std::uint32_t>();
  } catch (const json::exception& e) {
    throw Error(std::string("malformed report: ") + e.what());
  }
  return out;
}

}  // namespace geoprove
