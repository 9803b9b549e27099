#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "simpeff/io.hpp"

namespace simpeff::cli {

struct CheckEntry {
  std::string name;
  std::string verdict;  // pass, fail, skipped
  std::string witness;
  std::optional<int> bound;
  std::string detail;
};

struct CheckReport {
  std::string subject;
  int levels = 4;
  std::vector<CheckEntry> checks;

  /// 0 when nothing failed, 1 otherwise.
  int exit_code() const;
  io::Json to_json() const;
  void print(std::ostream& out) const;
};

struct CheckOptions {
  int levels = 4;
  std::string datum_path;  // magma only
  bool simplicial_effect = false;
  bool algebroid = false;
  bool laws = false;
  bool states = false;
  bool hc1 = false;
};

/// kind is one of magma, sset, cyclic, effect-algebra. Throws InputError on
/// unreadable or schema-violating input.
CheckReport run_check(const std::string& kind, const std::string& path, const CheckOptions& options);

/// Exit codes: 0 all checks pass, 1 some check failed, 2 input or usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace simpeff::cli
