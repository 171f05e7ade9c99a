#include <sstream>

#include "rr/buchberger.hpp"

namespace rr {

namespace {

const char* kind_name(TraceKind kind) {
  switch (kind) {
    case TraceKind::Input: return "input";
    case TraceKind::PairSelected: return "pair";
    case TraceKind::Mntcr: return "mntcr";
    case TraceKind::ChainSkip: return "skip-chain";
    case TraceKind::CriticalPair: return "critical";
    case TraceKind::Reduced: return "reduced";
    case TraceKind::Added: return "added";
    case TraceKind::Final: return "final";
  }
  return "?";
}

}  // namespace

std::string TraceEvent::to_text() const {
  std::ostringstream out;
  out << kind_name(kind);
  switch (kind) {
    case TraceKind::Input:
      out << ' ' << i << " from " << j << ' ' << values.at(0);
      break;
    case TraceKind::PairSelected:
      out << ' ' << i << ' ' << j;
      break;
    case TraceKind::Mntcr:
      out << ' ' << i << ' ' << j << " idx " << index1 << ' ' << index2 << " z=" << values.at(0);
      break;
    case TraceKind::ChainSkip:
      out << ' ' << i << ' ' << j << " idx " << index1 << ' ' << index2 << " via " << witness;
      break;
    case TraceKind::CriticalPair:
      out << " a1=" << values.at(0) << " a2=" << values.at(1);
      break;
    case TraceKind::Reduced:
      out << " steps=" << steps1 << ',' << steps2 << " h=" << values.at(0);
      break;
    case TraceKind::Added:
    case TraceKind::Final:
      out << ' ' << i << ' ' << values.at(0);
      break;
  }
  return out.str();
}

nlohmann::json TraceEvent::to_json() const {
  nlohmann::json j_event{{"event", kind_name(kind)}};
  switch (kind) {
    case TraceKind::Input:
      j_event["position"] = i;
      j_event["input_position"] = j;
      break;
    case TraceKind::PairSelected:
      j_event["pair"] = {i, j};
      break;
    case TraceKind::Mntcr:
    case TraceKind::ChainSkip:
      j_event["pair"] = {i, j};
      j_event["indices"] = {index1, index2};
      if (kind == TraceKind::ChainSkip) j_event["via"] = witness;
      break;
    case TraceKind::CriticalPair:
      j_event["pair"] = {i, j};
      break;
    case TraceKind::Reduced:
      j_event["steps"] = {steps1, steps2};
      break;
    case TraceKind::Added:
    case TraceKind::Final:
      j_event["position"] = i;
      break;
  }
  if (!values.empty()) j_event["values"] = values;
  return j_event;
}

std::string GbTrace::to_text() const {
  std::string out;
  for (const auto& ev : events) {
    out += ev.to_text();
    out += '\n';
  }
  return out;
}

nlohmann::json GbTrace::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& ev : events) arr.push_back(ev.to_json());
  return arr;
}

std::uint64_t GbTrace::digest() const {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : to_text()) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::vector<std::string> GbTrace::replay_basis() const {
  std::vector<std::string> out;
  for (const auto& ev : events) {
    if (ev.kind == TraceKind::Input || ev.kind == TraceKind::Added) out.push_back(ev.values.at(0));
  }
  return out;
}

std::vector<std::string> GbTrace::final_basis() const {
  std::vector<std::string> out;
  for (const auto& ev : events) {
    if (ev.kind == TraceKind::Final) out.push_back(ev.values.at(0));
  }
  return out;
}

}  // namespace rr
