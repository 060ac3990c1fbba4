#include "whk/report.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace whk {

void CheckResult::fail(Witness w) {
  ++failure_count;
  witnesses.push_back(std::move(w));
}

void CheckResult::finalize() {
  std::sort(witnesses.begin(), witnesses.end());
  witnesses.erase(std::unique(witnesses.begin(), witnesses.end()), witnesses.end());
  if (witnesses.size() > kWitnessCap) witnesses.resize(kWitnessCap);
}

CheckResult& Report::add_check(const std::string& name) {
  CheckResult c;
  c.name = name;
  checks.push_back(std::move(c));
  return checks.back();
}

void Report::note(const std::string& key, const std::string& value) {
  notes.emplace_back(key, value);
}

void Report::absorb(const Report& sub, const std::string& prefix) {
  for (const auto& c : sub.checks) {
    CheckResult copy = c;
    copy.name = prefix.empty() ? c.name : prefix + "." + c.name;
    checks.push_back(std::move(copy));
  }
  for (const auto& [k, v] : sub.notes) {
    notes.emplace_back(prefix.empty() ? k : prefix + "." + k, v);
  }
}

bool Report::passed() const {
  for (const auto& c : checks)
    if (!c.passed()) return false;
  return true;
}

void Report::finalize() {
  for (auto& c : checks) c.finalize();
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["command"] = command;
  j["targets"] = targets;
  j["status"] = passed() ? "pass" : "fail";
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json cj;
    cj["name"] = c.name;
    cj["status"] = c.passed() ? "pass" : "fail";
    cj["cases"] = c.cases_checked;
    cj["failures"] = c.failure_count;
    nlohmann::json ws = nlohmann::json::array();
    for (const auto& w : c.witnesses) {
      ws.push_back({{"site", w.site}, {"residual", w.residual}});
    }
    cj["witnesses"] = ws;
    cs.push_back(cj);
  }
  j["checks"] = cs;
  nlohmann::json ns = nlohmann::json::object();
  for (const auto& [k, v] : notes) ns[k] = v;
  j["notes"] = ns;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "command: " << command;
  if (!targets.empty()) {
    out << " [";
    for (std::size_t i = 0; i < targets.size(); ++i) out << (i ? ", " : "") << targets[i];
    out << "]";
  }
  out << "\n";
  for (const auto& c : checks) {
    out << "  " << (c.passed() ? "PASS" : "FAIL") << "  " << c.name << "  (" << c.cases_checked
        << " cases";
    if (c.failure_count) out << ", " << c.failure_count << " failures";
    out << ")\n";
    for (const auto& w : c.witnesses) {
      out << "        at (";
      for (std::size_t i = 0; i < w.site.size(); ++i) out << (i ? ", " : "") << w.site[i];
      out << ") residual " << w.residual << "\n";
    }
  }
  for (const auto& [k, v] : notes) out << "  note: " << k << " = " << v << "\n";
  out << "  result: " << (passed() ? "PASS" : "FAIL");
  if (elapsed_ms > 0) {
    out << "  (" << elapsed_ms << " ms)";
  }
  out << "\n";
  return out.str();
}

std::string format_element(const std::vector<std::string>& labels, const Vec& v) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Rational c = v[i];
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    std::string label = i < labels.size() ? labels[i] : "b" + std::to_string(i);
    if (c != 1) out << rational_to_string(c) << "*";
    out << label;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace whk
