#pragma once

#include <string>
#include <variant>
#include <vector>

#include "mod2.hpp"

namespace crosscap {

struct SurfaceSignature {
  int crosscaps = 1;  // n >= 1
  int punctures = 0;  // m >= 0

  bool closed() const noexcept { return punctures == 0; }
  // Size of the matrices in this model: n for closed, n + m otherwise.
  int rank() const noexcept { return crosscaps + punctures; }

  friend bool operator==(const SurfaceSignature&, const SurfaceSignature&) = default;
};

void check_signature(const SurfaceSignature& sig);

// Slide of crosscap j around the core curve of crosscap i:
// alpha_i -> alpha_i + 2 alpha_j, alpha_j -> -alpha_j.
struct CrosscapSlide {
  int i = 1;
  int j = 2;
  friend bool operator==(const CrosscapSlide&, const CrosscapSlide&) = default;
};

// Twist about a two-sided curve in the class of the support indicator.
// Only has a mod-2 matrix.
struct DehnTwist {
  TwistGenerator generator;
  friend bool operator==(const DehnTwist&, const DehnTwist&) = default;
};

// Slide of boundary j around crosscap i: alpha_i -> alpha_i - beta_j,
// beta_j -> -beta_j.
struct BoundarySlide {
  int i = 1;
  int j = 1;
  friend bool operator==(const BoundarySlide&, const BoundarySlide&) = default;
};

// beta_j -> beta_{perm[j-1]}.
struct PuncturePerm {
  std::vector<int> perm;
  friend bool operator==(const PuncturePerm&, const PuncturePerm&) = default;
};

using GeneratorMove = std::variant<CrosscapSlide, DehnTwist, BoundarySlide, PuncturePerm>;
using MoveWord = std::vector<GeneratorMove>;

std::string to_string(const GeneratorMove& move);

// Throws IndexOutOfRange / InvalidArgument when the move does not fit sig.
void check_move(const GeneratorMove& move, const SurfaceSignature& sig);

bool is_permutation(const std::vector<int>& perm);
std::vector<int> inverse_permutation(const std::vector<int>& perm);

}  // namespace crosscap
