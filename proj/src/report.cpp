#include "quiverlab/report.hpp"

#include <algorithm>
#include <sstream>

namespace quiverlab {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::info: return "info";
  }
  return "?";
}

void CheckReport::add(std::string id, bool ok, std::string detail, std::string witness) {
  conditions_.push_back({std::move(id), ok ? Status::pass : Status::fail, std::move(detail), std::move(witness)});
}

void CheckReport::info(std::string id, std::string detail) {
  conditions_.push_back({std::move(id), Status::info, std::move(detail), {}});
}

void CheckReport::absorb(const CheckReport& other, const std::string& prefix) {
  for (const auto& c : other.conditions_) conditions_.push_back({prefix + c.id, c.status, c.detail, c.witness});
  for (const auto& n : other.notes_) notes_.push_back(n);
}

bool CheckReport::passed() const { return first_failure() == nullptr; }

const Condition* CheckReport::first_failure() const {
  for (const auto& c : conditions_)
    if (c.status == Status::fail) return &c;
  return nullptr;
}

std::string render_text(const CheckReport& r) {
  std::ostringstream out;
  out << "check: " << r.check() << "\n";
  out << "verdict: " << (r.passed() ? "pass" : "fail") << "\n";
  if (r.hypothesis) out << "hypotheses: " << (*r.hypothesis ? "pass" : "fail") << "\n";
  if (r.conclusion) out << "conclusion: " << (*r.conclusion ? "pass" : "fail") << "\n";
  std::size_t width = 2;
  for (const auto& c : r.conditions()) width = std::max(width, c.id.size());
  for (const auto& c : r.conditions()) {
    out << "  " << c.id << std::string(width - c.id.size() + 2, ' ') << to_string(c.status);
    if (!c.detail.empty()) out << "  " << c.detail;
    if (!c.witness.empty()) out << "  [witness: " << c.witness << "]";
    out << "\n";
  }
  for (const auto& n : r.notes()) out << "note: " << n << "\n";
  return out.str();
}

nlohmann::ordered_json render_json(const CheckReport& r, const std::string& command,
                                   const nlohmann::ordered_json& inputs, const nlohmann::ordered_json& timings) {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["verdict"] = r.passed() ? "pass" : "fail";
  j["hypothesis"] = r.hypothesis ? nlohmann::ordered_json(*r.hypothesis ? "pass" : "fail") : nlohmann::ordered_json();
  j["conclusion"] = r.conclusion ? nlohmann::ordered_json(*r.conclusion ? "pass" : "fail") : nlohmann::ordered_json();
  auto& conds = j["conditions"] = nlohmann::ordered_json::array();
  for (const auto& c : r.conditions()) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["status"] = to_string(c.status);
    e["detail"] = c.detail;
    e["witness"] = c.witness.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(c.witness);
    conds.push_back(std::move(e));
  }
  j["notes"] = r.notes();
  j["timings"] = timings;
  return j;
}

}  // namespace quiverlab
