#pragma once

#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace transemi {

// One counterexample: named variable bindings plus an optional free-form note.
struct Witness {
  std::vector<std::pair<std::string, std::string>> bindings;
  std::string note;

  std::string to_string() const;
};

struct CheckResult {
  static constexpr std::size_t kMaxWitnesses = 8;

  std::string id;
  bool pass = true;
  std::size_t violations = 0;
  std::vector<Witness> witnesses;  // first kMaxWitnesses violations
  std::string detail;
  std::optional<double> millis;

  void fail(Witness w);
};

struct Report {
  std::string title;
  std::deque<CheckResult> checks;  // deque: add() hands out stable references

  bool ok() const;
  const CheckResult* find(const std::string& id) const;
  std::vector<std::string> failed_ids() const;

  CheckResult& add(std::string id);
  void append(const Report& other);

  std::string to_text() const;
  nlohmann::json to_json() const;
};

}  // namespace transemi
