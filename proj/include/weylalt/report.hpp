#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace weylalt {

/// Outcome of a verification routine. Failures carry a human-readable witness.
struct Report {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void fail(std::string witness) { failures.push_back(std::move(witness)); }
  void expect(bool condition, const std::string& witness) {
    ++checked;
    if (!condition) fail(witness);
  }
  /// Appends other's failures (prefixed by its name) and checked count.
  void absorb(const Report& other);
  std::string summary() const;
};

}  // namespace weylalt
