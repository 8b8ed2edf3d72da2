#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace bracketlab {

/// One failed instance of an axiom: which axiom, the element tuple that
/// witnesses it, and a human-readable description (usually LHS vs RHS).
struct AxiomFailure {
  std::string axiom;
  std::vector<int> witness;
  std::string detail;
};

struct VerificationReport {
  std::vector<AxiomFailure> failures;

  bool ok() const { return failures.empty(); }
  void add(std::string axiom, std::vector<int> witness, std::string detail = {}) {
    failures.push_back({std::move(axiom), std::move(witness), std::move(detail)});
  }
};

/// Thrown by constructors that require a verified structure.
class VerificationError : public std::exception {
 public:
  VerificationError(std::string what, VerificationReport report)
      : what_(std::move(what)), report_(std::move(report)) {}
  const char* what() const noexcept override { return what_.c_str(); }
  const VerificationReport& report() const { return report_; }

 private:
  std::string what_;
  VerificationReport report_;
};

/// A multiset as sorted (value, multiplicity) pairs.
template <class T>
using Multiset = std::vector<std::pair<T, std::size_t>>;

template <class T>
Multiset<T> make_multiset(std::vector<T> values) {
  std::sort(values.begin(), values.end());
  Multiset<T> out;
  for (auto& v : values) {
    if (!out.empty() && out.back().first == v) {
      ++out.back().second;
    } else {
      out.emplace_back(std::move(v), 1);
    }
  }
  return out;
}

template <class T>
std::size_t multiset_size(const Multiset<T>& m) {
  std::size_t n = 0;
  for (const auto& [value, count] : m) n += count;
  return n;
}

}  // namespace bracketlab
