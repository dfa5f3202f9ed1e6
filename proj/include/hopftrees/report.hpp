#pragma once

#include <string>
#include <vector>

namespace hopftrees {

struct ReportEntry {
  std::string law;
  int degree = 0;
  bool passed = true;
  std::string witness;  // empty on pass
};

// Outcome of a verification run: one entry per (law, degree).
class Report {
 public:
  Report() = default;
  explicit Report(std::string title) : title_(std::move(title)) {}

  const std::string& title() const { return title_; }
  const std::vector<ReportEntry>& entries() const { return entries_; }

  void add(std::string law, int degree, bool passed, std::string witness = {});
  // Records one entry for a law checked over many cases; `first_failure`
  // is the witness of the first failing case, empty if none failed.
  void record(const std::string& law, int degree, const std::string& first_failure) {
    add(law, degree, first_failure.empty(), first_failure);
  }
  // Copies the entries of `other`, renaming each law to "<prefix>: <law>".
  void append(const Report& other, const std::string& prefix = {});

  bool passed() const;
  std::size_t failures() const;

  // One line per entry: "PASS <law> [degree N]" or "FAIL <law> [degree N]: <witness>".
  std::string to_text() const;
  // [{"law":..., "degree":..., "status":"pass"|"fail", "witness":...}]
  std::string to_json() const;

 private:
  std::string title_;
  std::vector<ReportEntry> entries_;
};

}  // namespace hopftrees
