// Result records for the axiom checkers.  Checkers never stop at the first
// failure; every violated identity is recorded with the basis tuple where it
// was observed.
#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace coquasi {

struct Failure {
  std::string identity;
  std::vector<std::string> witness;
  std::string detail;
};

struct Report {
  std::string subject;
  long checked = 0;
  std::vector<Failure> failures;
  std::vector<std::string> flags;
  std::vector<std::string> notes;

  bool ok() const { return failures.empty(); }

  void fail(std::string identity, std::vector<std::string> witness, std::string detail = {}) {
    failures.push_back({std::move(identity), std::move(witness), std::move(detail)});
  }
  void flag(const std::string& f) {
    if (std::find(flags.begin(), flags.end(), f) == flags.end()) flags.push_back(f);
  }
  bool has_flag(const std::string& f) const { return std::find(flags.begin(), flags.end(), f) != flags.end(); }
  bool failed(const std::string& identity) const {
    return std::any_of(failures.begin(), failures.end(), [&](const Failure& x) { return x.identity == identity; });
  }
  std::size_t count(const std::string& identity) const {
    return std::count_if(failures.begin(), failures.end(), [&](const Failure& x) { return x.identity == identity; });
  }

  void merge(const Report& other) {
    checked += other.checked;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    for (const auto& f : other.flags) flag(f);
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }

  std::string text() const {
    std::ostringstream os;
    os << (subject.empty() ? "report" : subject) << ": " << (ok() ? "PASS" : "FAIL") << " (" << checked
       << " checks, " << failures.size() << " failures)\n";
    for (const auto& f : flags) os << "  flag: " << f << "\n";
    for (const auto& f : failures) {
      os << "  failed " << f.identity << " at (";
      for (std::size_t i = 0; i < f.witness.size(); ++i) os << (i ? ", " : "") << f.witness[i];
      os << ")";
      if (!f.detail.empty()) os << ": " << f.detail;
      os << "\n";
    }
    for (const auto& n : notes) os << "  note: " << n << "\n";
    return os.str();
  }
};

}  // namespace coquasi
