#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace simpeff {

/// Malformed arguments: arity mismatch, level beyond truncation, wrong dimension.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A structure that fails its defining axioms at construction time.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Outcome of a single yes/no property check. `bound` is the highest level
/// (or arity) the check quantified over.
struct CheckResult {
  bool holds = true;
  int bound = 0;
  int witness_level = -1;
  std::vector<int> witness;
  std::string detail;

  explicit operator bool() const { return holds; }

  static CheckResult pass(int bound) {
    CheckResult r;
    r.bound = bound;
    return r;
  }
  static CheckResult fail(int bound, int level, std::vector<int> witness, std::string detail) {
    return CheckResult{false, bound, level, std::move(witness), std::move(detail)};
  }
};

struct Finding {
  std::string check;
  std::string detail;
  std::vector<int> witness;
};

/// Accumulates failed axiom instances. Empty means everything passed.
struct Report {
  std::vector<Finding> failures;

  bool ok() const { return failures.empty(); }
  explicit operator bool() const { return ok(); }

  void add(std::string check, std::string detail, std::vector<int> witness = {}) {
    failures.push_back({std::move(check), std::move(detail), std::move(witness)});
  }
  bool has(const std::string& check) const {
    for (const auto& f : failures)
      if (f.check == check) return true;
    return false;
  }
  const Finding* first(const std::string& check) const {
    for (const auto& f : failures)
      if (f.check == check) return &f;
    return nullptr;
  }
};

std::string format_tuple(const std::vector<int>& t);

}  // namespace simpeff
