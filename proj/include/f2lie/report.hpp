#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace f2lie {

/// Outcome of one verification check. On failure the first discrepancy
/// degree and both sides' values at that degree are recorded so a failed
/// identity can be audited.
struct VerificationReport {
  std::string check;
  std::vector<std::pair<std::string, std::int64_t>> params;
  bool pass = false;
  int first_discrepancy = -1;
  std::string lhs_value;
  std::string rhs_value;
  std::string note;
};

} // namespace f2lie
