#pragma once

#include <cstddef>
#include <vector>

#include "homology.hpp"
#include "trace.hpp"

namespace crosscap {

struct SlideWord {
  SurfaceSignature signature;
  std::vector<CrosscapSlide> moves;

  MoveWord as_moves() const;
};

enum class KernelStrategy {
  // Works in the basis alpha_1..alpha_{n-1}, alpha_1+...+alpha_n, where the
  // kernel is a semidirect product of a level-2 congruence group and even
  // translations. Word length stays small on random inputs.
  Reduced,
  // Row-by-row descent on C1, Ci and C'i with right moves only and
  // smallest-index choices. Word length can grow very fast with the entries.
  RowDescent,
};

struct KernelOptions {
  KernelStrategy strategy = KernelStrategy::Reduced;
  std::size_t move_limit = 20'000'000;  // ResourceLimit past this
};

struct KernelFactorization {
  SlideWord word;  // product equals the input
  Trace trace;     // steps in the order they were applied to the working matrix
};

// Factors a closed automorphism congruent to I mod 2 into crosscap slides.
// Throws NotKernel, RowSumViolation or NonUnimodular on bad input and
// ResourceLimit when the word would exceed the move limit.
KernelFactorization factor_kernel(const ClosedAutomorphism& a, const KernelOptions& options = {});

}  // namespace crosscap
