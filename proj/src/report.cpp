#include "hopftrees/report.hpp"

#include <json.hpp>

#include <algorithm>

namespace hopftrees {

void Report::add(std::string law, int degree, bool passed, std::string witness) {
  entries_.push_back({std::move(law), degree, passed, std::move(witness)});
}

void Report::append(const Report& other, const std::string& prefix) {
  for (auto e : other.entries_) {
    if (!prefix.empty()) e.law = prefix + ": " + e.law;
    entries_.push_back(std::move(e));
  }
}

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [](const auto& e) { return !e.passed; }));
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& e : entries_) {
    out += e.passed ? "PASS " : "FAIL ";
    out += e.law + " [degree " + std::to_string(e.degree) + "]";
    if (!e.passed) out += ": " + e.witness;
    out += "\n";
  }
  return out;
}

std::string Report::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : entries_) {
    nlohmann::json j{{"law", e.law}, {"degree", e.degree}, {"status", e.passed ? "pass" : "fail"}};
    if (!e.passed) j["witness"] = e.witness;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

}  // namespace hopftrees
