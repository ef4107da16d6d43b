#include "trace.hpp"

namespace crosscap {

const char* to_string(Side side) { return side == Side::Left ? "left" : "right"; }

}  // namespace crosscap
