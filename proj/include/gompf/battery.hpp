#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gompf {

struct CheckTally {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

/// Self-verification battery behind `gompf verify`: the algebraic laws of every
/// module on fixed matrices plus seeded random cases. Deterministic in seed.
std::vector<CheckTally> run_battery(std::uint64_t seed);

}  // namespace gompf
