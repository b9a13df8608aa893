#pragma once

// Structured command reports with human and JSON renderings.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cocat/core/category.hpp"

namespace cocat::cli {

enum class Verdict { Pass, Fail, Info };

std::string_view to_string(Verdict v) noexcept;

struct Check {
  std::string name;
  Verdict verdict = Verdict::Info;
  std::string observed;
  std::string expected;  // empty when the check has no stated expectation
  std::string witness;
};

struct Report {
  std::string command;
  std::vector<Check> checks;
  nlohmann::ordered_json facts = nlohmann::ordered_json::object();

  /// A boolean requirement.
  void require(std::string name, bool ok, std::string witness = {});
  /// A flag compared with a manifest value; an expected false that is
  /// observed false passes.
  void expect(std::string name, Tri observed, Tri expected, std::string witness = {});
  /// An observation that never affects the exit status.
  void info(std::string name, std::string observed, std::string witness = {});

  bool passed() const;
  std::size_t failures() const;
  /// 0 when every check passes, 1 otherwise.
  int exit_status() const { return passed() ? 0 : 1; }
};

nlohmann::ordered_json to_json(const Report& r);
std::string render_json(const Report& r);
std::string render_human(const Report& r);

}  // namespace cocat::cli
