#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace hgrig {

enum class Status { pass, violation, inconclusive };

std::string to_string(Status status);
Status status_from_string(const std::string& text);

/// A counterexample or a certificate attached to a report.
struct Witness {
  std::string kind;
  nlohmann::json detail;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Report {
  std::string check;
  Status status = Status::pass;
  std::vector<Witness> witnesses;
  nlohmann::json stats = nlohmann::json::object();
  std::vector<std::string> notes;

  /// Records a violation; witnesses beyond `kMaxWitnesses` are only counted.
  void violate(Witness witness);
  /// Downgrades a passing report to inconclusive.
  void inconclusive(const std::string& note);
  bool passed() const { return status == Status::pass; }

  static constexpr std::size_t kMaxWitnesses = 16;

  friend bool operator==(const Report&, const Report&) = default;
};

/// Process exit code for a report: 0 pass, 1 violation, 3 inconclusive.
int exit_code(const Report& report);

/// Folds `part` into `total`: violations dominate, then inconclusive.
void merge_into(Report& total, const Report& part);

void to_json(nlohmann::json& j, const Witness& w);
void from_json(const nlohmann::json& j, Witness& w);
void to_json(nlohmann::json& j, const Report& r);
void from_json(const nlohmann::json& j, Report& r);

}  // namespace hgrig
