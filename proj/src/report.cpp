#include "hgrig/report.hpp"

#include "hgrig/error.hpp"

namespace hgrig {

std::string to_string(Status status) {
  switch (status) {
    case Status::pass: return "PASS";
    case Status::violation: return "VIOLATION";
    case Status::inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

Status status_from_string(const std::string& text) {
  if (text == "PASS") return Status::pass;
  if (text == "VIOLATION") return Status::violation;
  if (text == "INCONCLUSIVE") return Status::inconclusive;
  throw ValidationError("unknown report status '" + text + "'");
}

void Report::violate(Witness witness) {
  status = Status::violation;
  const std::size_t seen = stats.value("violations", std::size_t{0}) + 1;
  stats["violations"] = seen;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(witness));
}

void Report::inconclusive(const std::string& note) {
  if (status == Status::pass) status = Status::inconclusive;
  notes.push_back(note);
}

int exit_code(const Report& report) {
  switch (report.status) {
    case Status::pass: return 0;
    case Status::violation: return 1;
    case Status::inconclusive: return 3;
  }
  return 1;
}

void merge_into(Report& total, const Report& part) {
  if (part.status == Status::violation) {
    total.status = Status::violation;
  } else if (part.status == Status::inconclusive && total.status == Status::pass) {
    total.status = Status::inconclusive;
  }
  for (const Witness& w : part.witnesses) {
    if (total.witnesses.size() < Report::kMaxWitnesses) total.witnesses.push_back(w);
  }
  for (const std::string& note : part.notes) total.notes.push_back(note);
}

void to_json(nlohmann::json& j, const Witness& w) { j = {{"kind", w.kind}, {"detail", w.detail}}; }

void from_json(const nlohmann::json& j, Witness& w) {
  w.kind = j.at("kind").get<std::string>();
  w.detail = j.at("detail");
}

void to_json(nlohmann::json& j, const Report& r) {
  j = {{"schema", 1},
       {"check", r.check},
       {"status", to_string(r.status)},
       {"witnesses", r.witnesses},
       {"stats", r.stats},
       {"notes", r.notes}};
}

void from_json(const nlohmann::json& j, Report& r) {
  r.check = j.at("check").get<std::string>();
  r.status = status_from_string(j.at("status").get<std::string>());
  r.witnesses = j.at("witnesses").get<std::vector<Witness>>();
  r.stats = j.at("stats");
  r.notes = j.at("notes").get<std::vector<std::string>>();
}

}  // namespace hgrig
