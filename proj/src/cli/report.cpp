#include "cocat/cli/report.hpp"

#include <algorithm>
#include <sstream>

namespace cocat::cli {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Info: return "info";
  }
  return "?";
}

void Report::require(std::string name, bool ok, std::string witness) {
  checks.push_back({std::move(name), ok ? Verdict::Pass : Verdict::Fail, ok ? "true" : "false", "true",
                    std::move(witness)});
}

void Report::expect(std::string name, Tri observed, Tri expected, std::string witness) {
  checks.push_back({std::move(name), observed == expected ? Verdict::Pass : Verdict::Fail, cocat::to_string(observed),
                    cocat::to_string(expected), std::move(witness)});
}

void Report::info(std::string name, std::string observed, std::string witness) {
  checks.push_back({std::move(name), Verdict::Info, std::move(observed), {}, std::move(witness)});
}

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.verdict == Verdict::Fail; }));
}

nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json out;
  out["command"] = r.command;
  out["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["verdict"] = std::string(to_string(c.verdict));
    j["observed"] = c.observed;
    if (!c.expected.empty()) j["expected"] = c.expected;
    if (!c.witness.empty()) j["witness"] = c.witness;
    out["checks"].push_back(std::move(j));
  }
  out["facts"] = r.facts;
  out["failures"] = r.failures();
  out["passed"] = r.passed();
  out["exit_status"] = r.exit_status();
  return out;
}

std::string render_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

namespace {

std::string fact_text(const nlohmann::ordered_json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

}  // namespace

std::string render_human(const Report& r) {
  std::ostringstream os;
  os << "cocat " << r.command << '\n';
  for (const auto& c : r.checks) {
    const char* tag = c.verdict == Verdict::Pass ? "PASS" : c.verdict == Verdict::Fail ? "FAIL" : "INFO";
    os << "  " << tag << "  " << c.name;
    if (c.verdict == Verdict::Info) {
      os << ": " << c.observed;
    } else if (c.expected != "true" || c.observed != "true") {
      os << " (observed " << c.observed << ", expected " << c.expected;
      if (c.verdict == Verdict::Pass && c.expected == "false") os << ", expected failure";
      os << ')';
    }
    os << '\n';
    if (!c.witness.empty()) os << "        " << c.witness << '\n';
  }
  for (const auto& [key, value] : r.facts.items()) {
    if (value.is_array()) {
      os << "  " << key << ":\n";
      for (const auto& item : value) os << "    " << fact_text(item) << '\n';
    } else {
      os << "  " << key << ": " << fact_text(value) << '\n';
    }
  }
  os << (r.passed() ? "result: PASS" : "result: FAIL") << " (" << r.checks.size() << " checks, " << r.failures()
     << " failed)\n";
  return os.str();
}

}  // namespace cocat::cli
