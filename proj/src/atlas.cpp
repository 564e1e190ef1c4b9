#include "comaximal/atlas.hpp"

#include <nlohmann/json.hpp>

namespace comaximal {

std::string atlas_record(const ClassificationReport& report) {
  nlohmann::json j;
  j["spec"] = report.spec.counts();
  j["n"] = report.spec.n();
  j["status"] = to_string(report.status);
  if (report.status == EntryStatus::Ok) {
    j["vertices"] = report.vertices;
    j["edges"] = report.edges;
    j["omega"] = report.omega;
    j["alpha"] = report.alpha;
    j["degree_sequence"] = report.degree_seq;
    j["planar"] = report.planar;
    j["predicted_planar"] = report.predicted_planar;
    j["universal"] = report.universal;
    j["predicted_universal"] = report.predicted_universal;
    j["star"] = report.star;
    j["predicted_star"] = report.predicted_star;
    if (report.witness) j["witness_kind"] = to_string(report.witness->kind);
  } else if (!report.note.empty()) {
    j["note"] = report.note;
  }
  return j.dump();
}

std::string atlas_record(const ZmodCheck& check) {
  nlohmann::json j;
  j["zmod"] = check.modulus;
  j["status"] = to_string(check.status);
  if (check.status == EntryStatus::Ok) {
    j["spec"] = check.counts;
    j["vertices"] = check.vertices;
    j["edges"] = check.edges;
    j["equivalence_ok"] = check.equivalence_ok;
  } else if (!check.note.empty()) {
    j["note"] = check.note;
  }
  return j.dump();
}

std::string to_atlas_jsonl(const SweepResult& result) {
  std::string out;
  long long completed = 0;
  bool stopped = false;
  for (const auto& e : result.entries) {
    if (e.status == EntryStatus::Aborted) {
      stopped = true;
      break;
    }
    out += atlas_record(e) + "\n";
    ++completed;
  }
  if (!stopped) {
    for (const auto& z : result.zmod) {
      if (z.status == EntryStatus::Aborted) {
        stopped = true;
        break;
      }
      out += atlas_record(z) + "\n";
      ++completed;
    }
  }
  if (stopped || result.aborted) {
    nlohmann::json trailer;
    trailer["completed"] = completed;
    trailer["status"] = "aborted";
    out += trailer.dump() + "\n";
  }
  return out;
}

}  // namespace comaximal
