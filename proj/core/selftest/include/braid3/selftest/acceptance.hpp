#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "braid3/hurwitz.hpp"

namespace braid3::selftest {

enum class Level { Quick, Full };

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  Level level = Level::Full;
  std::uint64_t seed = 20240611;
  SearchLimits limits;
};

/// Runs the ten acceptance sweeps in order; `report` sees each result as
/// soon as it is known.
std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& options,
    const std::function<void(const CriterionResult&)>& report = {});

std::string format_result(const CriterionResult& r);

}  // namespace braid3::selftest
