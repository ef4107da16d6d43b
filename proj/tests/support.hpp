#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "homology.hpp"
#include "mod2.hpp"

namespace crosscap::testing {

inline IntMatrix int_matrix(const std::vector<std::vector<long>>& rows) { return IntMatrix::from_rows(rows); }

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline CrosscapSlide random_slide(std::mt19937_64& rng, int n) {
  const int i = uniform(rng, 1, n);
  int j = uniform(rng, 1, n - 1);
  if (j >= i) ++j;
  return {i, j};
}

inline MoveWord random_slide_word(std::mt19937_64& rng, int n, int length) {
  MoveWord w;
  for (int t = 0; t < length; ++t) w.push_back(random_slide(rng, n));
  return w;
}

// Uniform mix of crosscap slides (n >= 2), boundary slides and permutations.
inline MoveWord random_punctured_word(std::mt19937_64& rng, const SurfaceSignature& sig, int length,
                                      bool with_crosscap_slides = true) {
  MoveWord w;
  for (int t = 0; t < length; ++t) {
    const int kind = uniform(rng, with_crosscap_slides && sig.crosscaps > 1 ? 0 : 1, 2);
    if (kind == 0) {
      w.push_back(random_slide(rng, sig.crosscaps));
    } else if (kind == 1) {
      w.push_back(BoundarySlide{uniform(rng, 1, sig.crosscaps), uniform(rng, 1, sig.punctures)});
    } else {
      std::vector<int> perm(static_cast<std::size_t>(sig.punctures));
      for (int k = 0; k < sig.punctures; ++k) perm[k] = k + 1;
      std::shuffle(perm.begin(), perm.end(), rng);
      w.push_back(PuncturePerm{perm});
    }
  }
  return w;
}

inline Mod2Vector random_vector(std::mt19937_64& rng, int dim) {
  Mod2Vector v(dim);
  for (int i = 1; i <= dim; ++i) v.set(i, rng() & 1U);
  return v;
}

// All dim x dim bit matrices with M^T M = I, by brute force (dim <= 4).
inline std::vector<Mod2Matrix> orthogonal_by_filter(int dim) {
  std::vector<Mod2Matrix> out;
  const int bits = dim * dim;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
    Mod2Matrix m(dim);
    for (int k = 0; k < bits; ++k)
      if ((code >> k) & 1U) m.set(k / dim + 1, k % dim + 1, true);
    if (m.transpose() * m == Mod2Matrix::identity(dim)) out.push_back(m);
  }
  return out;
}

}  // namespace crosscap::testing

#include "trace.hpp"

namespace crosscap::testing {

// Sign normalization and the left half of a conjugation leave the measured
// complexity unchanged; every other step must lower it.
inline bool is_neutral_phase(const std::string& phase) { return phase == "sign" || phase == "restore"; }

inline bool trace_descends(const Trace& trace, std::string* failure = nullptr) {
  for (std::size_t k = 0; k < trace.size(); ++k) {
    const Integer before(trace[k].before);
    const Integer after(trace[k].after);
    const bool ok = is_neutral_phase(trace[k].phase) ? after == before : after < before;
    if (!ok) {
      if (failure) *failure = "step " + std::to_string(k) + " (" + trace[k].phase + ") " + trace[k].before +
                              " -> " + trace[k].after;
      return false;
    }
  }
  return true;
}

}  // namespace crosscap::testing
