#include "pmcsolve/report.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace pmcsolve {

namespace {

using Json = nlohmann::ordered_json;

Json number(double v) {
  if (std::isfinite(v) && v == std::floor(v) && std::fabs(v) < 9e15) return static_cast<long long>(v);
  return v;
}

Json ids(const VertexSet& s) {
  Json out = Json::array();
  for (Vertex v : s) out.push_back(v + 1);
  return out;
}

}  // namespace

std::string solution_json(const Graph& g, const Solution& s, bool timing) {
  Json j;
  j["problem"] = s.problem;
  j["n"] = g.n();
  j["m"] = g.m();
  j["value"] = s.feasible ? number(s.value) : Json(nullptr);
  j["F"] = ids(s.f);
  j["X"] = ids(s.x);
  j["feasible"] = s.feasible;
  Json stats;
  stats["separators"] = s.stats.separators;
  stats["pmcs"] = s.stats.pmcs;
  stats["good_triples"] = s.stats.good_triples;
  stats["dp_keys"] = s.stats.dp_keys;
  stats["ms"] = timing ? number(std::round(s.stats.ms * 1000) / 1000) : Json(0);
  j["stats"] = stats;
  return j.dump();
}

std::string solution_text(const Graph& g, const Solution& s, bool timing) {
  std::ostringstream out;
  out << "problem: " << s.problem << "\n";
  out << "graph: n=" << g.n() << " m=" << g.m() << "\n";
  if (!s.feasible) {
    out << "infeasible\n";
  } else {
    out << "value: " << number(s.value).dump() << "\n";
    out << "F: " << format_set(s.f) << "\n";
    out << "X: " << format_set(s.x) << "\n";
  }
  out << "separators: " << s.stats.separators << "  pmcs: " << s.stats.pmcs
      << "  good triples: " << s.stats.good_triples << "  dp keys: " << s.stats.dp_keys;
  if (timing) out << "  ms: " << std::round(s.stats.ms);
  out << "\n";
  return out.str();
}

std::string report_json(const OracleReport& r) {
  Json j;
  j["instance"] = r.instance;
  j["check"] = r.check;
  j["oracle"] = r.oracle_feasible ? number(r.oracle_value) : Json(nullptr);
  j["engine"] = r.engine_feasible ? number(r.engine_value) : Json(nullptr);
  j["agree"] = r.agree;
  j["F"] = ids(r.f);
  j["X"] = ids(r.x);
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j.dump();
}

}  // namespace pmcsolve
