#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace atplanar {

// Outcome of any checker: a verdict plus enough context to reproduce a
// failure. Failures are values, not exceptions.
struct VerificationReport {
  std::string check;
  bool pass = true;
  std::uint64_t cases_examined = 0;
  std::string counterexample;  // empty when pass
  std::optional<std::uint64_t> seed;
  std::vector<std::string> notes;
  std::map<std::string, std::uint64_t> tally;

  explicit VerificationReport(std::string name = {}) : check(std::move(name)) {}

  // Keeps the first failure reason.
  void fail(std::string reason) {
    if (pass) counterexample = std::move(reason);
    pass = false;
  }

  explicit operator bool() const { return pass; }
};

}  // namespace atplanar
