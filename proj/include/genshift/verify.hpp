#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "genshift/json_io.hpp"

namespace genshift {

struct VerifyConfig {
  Index n_max = 4;
  std::uint64_t seed = 0;
  Index samples_per_size = 16;  // random maps for each n above kExhaustiveVerifySize
};

/// Sizes up to this bound are enumerated completely by `run_verification`.
inline constexpr Index kExhaustiveVerifySize = 4;
inline constexpr Index kMaxVerifySize = 10;

struct VerifyCell {
  Index n = 0;
  std::size_t cases = 0;
  std::size_t failures = 0;
};

struct PropertyOutcome {
  std::string key;
  std::string statement;
  std::vector<VerifyCell> cells;  // one per size, in increasing n
  std::string first_failure;

  bool passed() const;
};

struct VerifyReport {
  VerifyConfig config;
  std::vector<Index> sizes;
  std::vector<std::size_t> maps_per_size;
  std::vector<bool> exhaustive;
  std::vector<PropertyOutcome> properties;

  bool passed() const;
};

/// Runs the property suite over every map for n <= min(n_max, 4) and over
/// seeded samples (plus the identity) for larger n. Deterministic in the
/// config.
VerifyReport run_verification(const VerifyConfig& config);

std::string format_text(const VerifyReport& report);
io::json to_json(const VerifyReport& report);

}  // namespace genshift
