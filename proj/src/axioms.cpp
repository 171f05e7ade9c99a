#include "rr/axioms.hpp"

namespace rr {

const char* to_string(AxiomStatus status) {
  switch (status) {
    case AxiomStatus::Pass: return "PASS";
    case AxiomStatus::Fail: return "FAIL";
    case AxiomStatus::Skipped: return "SKIPPED";
  }
  return "?";
}

bool AxiomReport::all_passed() const {
  for (const auto& r : results) {
    if (r.status == AxiomStatus::Fail) return false;
  }
  return true;
}

const AxiomResult* AxiomReport::find(const std::string& name) const {
  for (const auto& r : results) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

std::string AxiomReport::to_text() const {
  std::string out;
  for (const auto& r : results) {
    out += r.name + ": " + to_string(r.status);
    if (!r.witness.empty()) out += " [" + r.witness + "]";
    out += '\n';
  }
  return out;
}

nlohmann::json AxiomReport::to_json() const {
  nlohmann::json axioms = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json entry{{"name", r.name}, {"status", to_string(r.status)}};
    if (!r.witness.empty()) entry["witness"] = r.witness;
    axioms.push_back(std::move(entry));
  }
  return {{"domain", domain}, {"exhaustive", exhaustive}, {"passed", all_passed()}, {"axioms", std::move(axioms)}};
}

}  // namespace rr
