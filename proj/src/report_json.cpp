#include "ggs/report_json.hpp"

namespace ggs {

using nlohmann::json;

json to_json(const CheckRecord& record) {
  return json{{"name", record.name},         {"statement", record.statement},
              {"predicted", record.predicted}, {"computed", record.computed},
              {"verdict", record.verdict},    {"millis", record.millis}};
}

json to_json(const VerificationReport& report) {
  json records = json::array();
  for (const auto& r : report.records)
    records.push_back(to_json(r));
  return json{{"tuple", format_tuple(report.tuple)},
              {"level", report.level},
              {"records", std::move(records)},
              {"pass", report.all_pass()}};
}

json to_json(const IndexReport& report) {
  json derived = json::array(), stabilizer = json::array(),
       edges = json::array();
  for (const auto& [n, log] : report.derived_logs)
    derived.push_back(json{{"n", n}, {"log", log}});
  for (const auto& [n, log] : report.stabilizer_logs)
    stabilizer.push_back(json{{"n", n}, {"log", log}});
  for (const auto& e : report.edges) {
    json edge{{"name", e.name},
              {"predicted_log", e.predicted_log},
              {"formula_only", e.formula_only}};
    if (e.brute_log)
      edge["brute_log"] = *e.brute_log;
    if (e.match)
      edge["verdict"] = *e.match ? "match" : "mismatch";
    edges.push_back(std::move(edge));
  }
  return json{{"tuple", format_tuple(report.tuple)},
              {"t", report.t},
              {"sym_e", report.bits.sym_e},
              {"con_e_prime", report.bits.con_eprime},
              {"sym_e_second", report.bits.sym_esecond},
              {"class_value", report.bits.class_value},
              {"derived_logs", std::move(derived)},
              {"stabilizer_logs", std::move(stabilizer)},
              {"lattice_edges", std::move(edges)}};
}

} // namespace ggs
