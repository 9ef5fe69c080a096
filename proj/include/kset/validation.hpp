#ifndef KSET_VALIDATION_HPP
#define KSET_VALIDATION_HPP

#include <sstream>
#include <string>
#include <vector>

namespace kset {

/// One failed axiom with the first witness found and how often it fired.
struct AxiomViolation {
  std::string axiom;         // "D1".."D4" or "C1".."C3"
  std::vector<int> witness;  // the pair or triple of point indices
  double value = 0.0;        // offending quantity
  long long count = 0;       // total occurrences of this axiom failing

  std::string describe() const {
    std::ostringstream os;
    os << axiom << " violated at (";
    for (size_t i = 0; i < witness.size(); ++i) os << (i ? "," : "") << witness[i];
    os << "), value " << value << ", " << count << " occurrence(s)";
    return os.str();
  }
};

struct ValidationReport {
  std::vector<AxiomViolation> violations;  // at most one entry per axiom

  bool passed() const { return violations.empty(); }

  const AxiomViolation* find(const std::string& axiom) const {
    for (const auto& v : violations)
      if (v.axiom == axiom) return &v;
    return nullptr;
  }

  std::string summary() const {
    if (passed()) return "all axioms hold";
    std::string s;
    for (const auto& v : violations) {
      if (!s.empty()) s += "; ";
      s += v.describe();
    }
    return s;
  }
};

namespace detail {

/// Records the first witness per axiom and counts the rest.
inline void record(ValidationReport& r, const std::string& axiom, std::vector<int> witness,
                   double value) {
  for (auto& v : r.violations) {
    if (v.axiom == axiom) {
      ++v.count;
      return;
    }
  }
  r.violations.push_back({axiom, std::move(witness), value, 1});
}

}  // namespace detail
}  // namespace kset

#endif  // KSET_VALIDATION_HPP
