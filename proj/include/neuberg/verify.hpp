#pragma once

/// Recomputes the published F_23 example from the three incenters I1, I2,
/// I3 and compares every value with the embedded golden data.

#include <string>
#include <vector>

#include "neuberg/field.hpp"

namespace neuberg {

struct Check {
  std::string name;
  bool pass;
  std::string expected;
  std::string got;
};

std::vector<Check> verify_paper(std::uint64_t max_enum = kDefaultMaxEnum);

}  // namespace neuberg
