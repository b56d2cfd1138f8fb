#include "transemi/report.hpp"

#include "json.hpp"

#include <cstdio>

namespace transemi {

std::string Witness::to_string() const {
  std::string s;
  for (const auto& [name, value] : bindings) {
    if (!s.empty()) s += ' ';
    s += name + "=" + value;
  }
  if (!note.empty()) s += s.empty() ? note : " (" + note + ")";
  return s;
}

void CheckResult::fail(Witness w) {
  pass = false;
  ++violations;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(w));
}

bool Report::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const CheckResult* Report::find(const std::string& id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

std::vector<std::string> Report::failed_ids() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.pass) out.push_back(c.id);
  return out;
}

CheckResult& Report::add(std::string id) {
  checks.push_back(CheckResult{});
  checks.back().id = std::move(id);
  return checks.back();
}

void Report::append(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::string Report::to_text() const {
  std::string out;
  if (!title.empty()) out += "# " + title + "\n";
  for (const auto& c : checks) {
    out += c.pass ? "PASS " : "FAIL ";
    out += c.id;
    if (!c.pass) out += " (" + std::to_string(c.violations) + " violation" + (c.violations == 1 ? "" : "s") + ")";
    if (!c.detail.empty()) out += ": " + c.detail;
    if (c.millis) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " [%.3f ms]", *c.millis);
      out += buf;
    }
    out += '\n';
    for (const auto& w : c.witnesses) out += "  witness: " + w.to_string() + "\n";
  }
  out += ok() ? "VERDICT PASS\n" : "VERDICT FAIL\n";
  return out;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["title"] = title;
  j["verdict"] = ok() ? "PASS" : "FAIL";
  auto& arr = j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json jc;
    jc["id"] = c.id;
    jc["pass"] = c.pass;
    jc["violations"] = c.violations;
    if (!c.detail.empty()) jc["detail"] = c.detail;
    auto& ws = jc["witnesses"] = nlohmann::json::array();
    for (const auto& w : c.witnesses) {
      nlohmann::json jw = nlohmann::json::object();
      for (const auto& [name, value] : w.bindings) jw[name] = value;
      if (!w.note.empty()) jw["note"] = w.note;
      ws.push_back(std::move(jw));
    }
    if (c.millis) jc["millis"] = *c.millis;
    arr.push_back(std::move(jc));
  }
  return j;
}

}  // namespace transemi
