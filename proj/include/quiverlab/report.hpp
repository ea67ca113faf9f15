#pragma once

// Structured results of the checkers.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace quiverlab {

enum class Status { pass, fail, info };

std::string to_string(Status s);

struct Condition {
  std::string id;
  Status status = Status::pass;
  std::string detail;
  std::string witness;  // empty unless the condition failed or carries data
};

class CheckReport {
 public:
  explicit CheckReport(std::string check = {}) : check_(std::move(check)) {}

  const std::string& check() const { return check_; }
  const std::vector<Condition>& conditions() const { return conditions_; }
  const std::vector<std::string>& notes() const { return notes_; }

  void add(Condition c) { conditions_.push_back(std::move(c)); }
  void add(std::string id, bool ok, std::string detail, std::string witness = {});
  void info(std::string id, std::string detail);
  void note(std::string text) { notes_.push_back(std::move(text)); }

  /// Appends another report's conditions, prefixing their ids.
  void absorb(const CheckReport& other, const std::string& prefix);

  /// Every non-info condition passed.
  bool passed() const;
  const Condition* first_failure() const;

  /// For theorem checks: hypotheses and the independently verified
  /// conclusion are kept apart.
  std::optional<bool> hypothesis;
  std::optional<bool> conclusion;
  /// Hypotheses passed but the conclusion failed.
  bool unsound() const { return hypothesis.value_or(false) && conclusion.has_value() && !*conclusion; }

 private:
  std::string check_;
  std::vector<Condition> conditions_;
  std::vector<std::string> notes_;
};

std::string render_text(const CheckReport& r);

/// {command, inputs, verdict, hypothesis, conclusion, conditions, notes, timings}
nlohmann::ordered_json render_json(const CheckReport& r, const std::string& command,
                                   const nlohmann::ordered_json& inputs, const nlohmann::ordered_json& timings);

}  // namespace quiverlab
