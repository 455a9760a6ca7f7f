#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "centrosym/json_io.hpp"

namespace centro {

struct VerifyOptions {
  std::uint64_t seed = 20150421;
  /// Random instances per property.
  std::size_t trials = 40;
  /// Multistart count for properties that need eigenpairs.
  std::size_t eigen_starts = 24;
  /// Name of a property whose expected relation is sign-flipped. Used to
  /// confirm that the harness actually reports failures.
  std::string fault;
};

struct PropertyOutcome {
  std::string name;
  std::string statement;
  std::size_t trials = 0;
  std::size_t failures = 0;
  /// First failing instance; null when none failed.
  Json counterexample;

  bool passed() const noexcept { return failures == 0; }
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<PropertyOutcome> outcomes;

  bool all_passed() const noexcept;
};

/// Names of every property verify_all runs, in execution order.
std::vector<std::string> property_names();

/// Runs every structural property on seeded random instances. With
/// trials == 0 the report is empty.
VerifyReport verify_all(const VerifyOptions& options);

Json to_json(const VerifyReport& report);

}  // namespace centro
