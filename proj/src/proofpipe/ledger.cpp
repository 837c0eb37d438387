#include "tsurf/proofpipe/ledger.hpp"

#include <json.hpp>

namespace tsurf::proof {

const char* status_name(Status s) {
  switch (s) {
    case Status::match: return "match";
    case Status::scaled: return "scaled";
    case Status::erratum: return "erratum";
    case Status::mismatch: return "mismatch";
    case Status::unstated: return "unstated";
    case Status::proven: return "proven";
    case Status::failed: return "failed";
    case Status::assumption: return "assumption";
  }
  return "?";
}

const LedgerEntry* Ledger::find(const std::string& name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

LedgerEntry& Ledger::add(LedgerEntry e) {
  entries_.push_back(std::move(e));
  return entries_.back();
}

std::size_t Ledger::count(Status s) const {
  std::size_t n = 0;
  for (const auto& e : entries_) n += e.status == s;
  return n;
}

const LedgerEntry* Ledger::first_problem() const {
  for (const auto& e : entries_) {
    if (e.status == Status::mismatch || e.status == Status::failed) return &e;
  }
  return nullptr;
}

bool Ledger::conclusion_proven() const {
  bool any = false;
  for (const auto& e : entries_) {
    if (e.stage != "conclusion") continue;
    any = true;
    if (e.status != Status::proven && e.status != Status::assumption) return false;
  }
  return any && first_problem() == nullptr;
}

void Ledger::require_consistent() const {
  if (const auto* e = first_problem()) {
    throw MismatchError("ledger entry '" + e->name + "' is " + status_name(e->status) +
                        (e->note.empty() ? "" : ": " + e->note));
  }
}

namespace {

std::string csv_field(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void Ledger::write_csv(std::ostream& os) const {
  os << "name,symbolic,paper_value,scale,status\n";
  for (const auto& e : entries_) {
    os << csv_field(e.name) << ',' << csv_field(e.value.str()) << ','
       << csv_field(e.paper_value ? e.paper_value->str() : "") << ',' << csv_field(sym::rational_str(e.scale)) << ','
       << status_name(e.status) << '\n';
  }
}

std::string Ledger::summary_json() const {
  using nlohmann::ordered_json;
  ordered_json j;
  j["case"] = case_;
  j["entries"] = entries_.size();
  auto problems = ordered_json::array();
  auto errata = ordered_json::array();
  for (const auto& e : entries_) {
    ordered_json item{{"name", e.name}, {"stage", e.stage}, {"status", status_name(e.status)}, {"note", e.note}};
    if (e.status == Status::mismatch || e.status == Status::failed) problems.push_back(item);
    if (e.status == Status::erratum || e.status == Status::scaled) errata.push_back(item);
  }
  j["mismatches"] = problems;
  j["errata"] = errata;
  ordered_json counts;
  for (Status s : {Status::match, Status::scaled, Status::erratum, Status::mismatch, Status::unstated, Status::proven,
                   Status::failed, Status::assumption}) {
    counts[status_name(s)] = count(s);
  }
  j["status_counts"] = counts;
  j["conclusion"] = conclusion;
  j["conclusion_proven"] = conclusion_proven();
  return j.dump(2) + "\n";
}

}  // namespace tsurf::proof
