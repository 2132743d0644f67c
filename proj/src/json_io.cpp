#include "edgeideal/json_io.hpp"

#include <json.hpp>

namespace edgeideal {

namespace {

nlohmann::json bounds_json(const BoundsReport& bounds) {
  nlohmann::json flags = nlohmann::json::object();
  for (const auto& c : bounds.checks) flags[c.name] = c.ok;
  return flags;
}

nlohmann::json report_json(const InvariantReport& rep) {
  return nlohmann::json{{"n", rep.n},
                        {"edges", rep.edges},
                        {"alpha", rep.alpha},
                        {"alphaPrime", rep.alpha_prime},
                        {"cover", rep.cover},
                        {"dim", rep.dim},
                        {"hPoly", to_string(rep.h_poly)},
                        {"degH", rep.deg_h},
                        {"reg", rep.reg},
                        {"projDim", rep.proj_dim},
                        {"depth", rep.depth},
                        {"field", rep.field.name()},
                        {"boundsOk", bounds_json(rep.bounds)}};
}

}  // namespace

std::string report_to_json(const InvariantReport& rep) {
  return report_json(rep).dump(2);
}

std::string table_to_json(const RealizabilityTable& t) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, entry] : t.counts)
    entries.push_back({{"r", key.first},
                       {"d", key.second},
                       {"count", entry.count},
                       {"witness", entry.witness}});
  nlohmann::json out{{"n", t.n},
                     {"field", t.field.name()},
                     {"totalGraphs", t.total_graphs},
                     {"entries", entries}};
  return out.dump(2);
}

std::string corpus_report_to_json(const CorpusReport& rep) {
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& r : rep.reports) reports.push_back(report_json(r));
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"failed", c.failed},
                      {"failures", c.failures}});
  nlohmann::json out{{"graphs", reports}, {"checks", checks}, {"ok", rep.all_ok()}};
  return out.dump(2);
}

}  // namespace edgeideal
