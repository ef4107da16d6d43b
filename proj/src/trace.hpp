#pragma once

#include <string>
#include <vector>

#include "moves.hpp"

namespace crosscap {

enum class Side { Right, Left };

// One reducing step of a complexity descent. A step is a short run of
// generator moves composed on one side of the working matrix. Complexities
// are decimal strings so arbitrary-precision values survive serialization.
struct TraceStep {
  std::string phase;
  int row = 0;  // 0 when the phase is not row-based
  Side side = Side::Right;
  MoveWord moves;
  std::string before;
  std::string after;
};

using Trace = std::vector<TraceStep>;

const char* to_string(Side side);

}  // namespace crosscap
