#pragma once

#include <cstdint>

#include "lotforge/grid.hpp"
#include "lotforge/model.hpp"

namespace lotforge {

struct OracleLimits {
  int max_drive_two_way = 20;
  int max_parking_two_way = 26;
  int max_drive_one_way = 14;
};

struct OracleResult {
  bool feasible = false;  // false only when no drive set can be oriented (one-way)
  int optimum = 0;
  Layout witness;
  uint64_t explored = 0;  // drive subsets examined
};

// exhaustive search over connected drive subsets holding every fixed drive field, with an
// exact parking packing for each. Throws InstanceTooLarge past the limits.
OracleResult brute_force_two_way(const GridSpec& grid, const FieldParams& params, const OracleLimits& limits = {});

// every drive subset holding entrance, exit and existing drives; a subset counts when some
// orientation lets each drive field reach the entrance and be reached from the exit
OracleResult brute_force_one_way(const GridSpec& grid, const FieldParams& params, const OracleLimits& limits = {});

// exact maximum set of pairwise non-overlapping candidates; conflict[i] has bit j set when i and
// j overlap. Returns the chosen bitmask.
uint64_t max_packing(const std::vector<uint64_t>& conflict, uint64_t candidates);

}  // namespace lotforge
