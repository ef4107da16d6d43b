#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "mod2.hpp"

namespace crosscap {

// matrix(word) = M(moves[0]) * M(moves[1]) * ... ; the last move acts first.
struct TwistWord {
  int dim = 1;
  std::vector<TwistGenerator> moves;
};

Mod2Matrix mod2_word_product(const TwistWord& word);

// Writes an orthogonal M as a product of at most 2(dim-1) twist involutions.
// Column c is sent back to e_c by one transvection, or two when the current
// image u has u.e_c = 1; the residual then fixes e_1..e_c.
TwistWord factor_orthogonal(const Mod2Matrix& m);

struct EnumeratedGroup {
  int dim = 1;
  std::vector<Mod2Matrix> elements;  // breadth-first order, identity first
  std::vector<int> lengths;          // minimal word length of elements[k]

  std::size_t order() const noexcept { return elements.size(); }
  std::map<int, std::uint64_t> length_histogram() const;
};

inline constexpr int kEnumerationHardLimit = 8;

// CROSSCAP_MAX_ENUM_DIM, default 6, never above kEnumerationHardLimit.
int enumeration_dim_bound();

// Closure of {I} under left multiplication by every twist generator.
EnumeratedGroup enumerate_orthogonal(int dim);
EnumeratedGroup enumerate_orthogonal(int dim, int max_dim);

}  // namespace crosscap
