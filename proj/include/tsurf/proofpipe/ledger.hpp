#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "tsurf/symring/radfrac.hpp"

namespace tsurf::proof {

enum class Status {
  match,       // equals the reference value exactly
  scaled,      // equals a nonzero rational multiple of the reference value
  erratum,     // differs from the reference; the engine stage passed its checks
  mismatch,    // differs from the reference and nothing vouches for the engine
  unstated,    // no reference value is printed
  proven,      // an identity or conclusion verified by exact arithmetic
  failed,      // an identity or conclusion that did not verify
  assumption,  // a logical step taken from the argument, not computed
};

const char* status_name(Status s);

struct LedgerEntry {
  std::string name;
  std::string stage;
  sym::RadFrac value;
  std::optional<std::string> reference_text;  // as written in the reference table
  std::optional<sym::RadFrac> paper_value;
  mpq_class scale = 1;  // value == scale * paper_value
  Status status = Status::unstated;
  std::string note;
};

class MismatchError : public Error {
 public:
  using Error::Error;
};

class Ledger {
 public:
  explicit Ledger(std::string case_name) : case_(std::move(case_name)) {}

  const std::string& case_name() const { return case_; }
  const std::vector<LedgerEntry>& entries() const { return entries_; }
  const LedgerEntry* find(const std::string& name) const;
  LedgerEntry& add(LedgerEntry e);

  std::vector<std::string> conclusion;  // human-readable conclusion lines

  std::size_t count(Status s) const;
  // First entry with status mismatch or failed, if any.
  const LedgerEntry* first_problem() const;
  bool conclusion_proven() const;
  // Throws MismatchError naming the first problem entry.
  void require_consistent() const;

  // CSV columns: name, symbolic, paper_value, scale, status.
  void write_csv(std::ostream& os) const;
  // JSON summary {case, entries, mismatches, errata, status_counts, conclusion}.
  std::string summary_json() const;

 private:
  std::string case_;
  std::vector<LedgerEntry> entries_;
};

}  // namespace tsurf::proof
