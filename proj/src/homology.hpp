#pragma once

// Integer homology models.
//
// Closed surface with n crosscaps: H1 = Z^n / <2(alpha_1 + ... + alpha_n)>.
// Automorphisms are stored as their normalized lifts to Z^n, the ones fixing
// alpha_1 + ... + alpha_n, so every row sums to 1.
//
// Punctured surface (n crosscaps, m >= 1 boundary circles): generators
// alpha_1..alpha_n, beta_1..beta_m subject to the single relation
// r = 2 sum alpha_i - sum beta_j. Matrices act on the redundant generating
// set and are only defined up to adding multiples of r to columns.

#include <vector>

#include "int_matrix.hpp"
#include "mod2.hpp"
#include "moves.hpp"

namespace crosscap {

struct ClosedAutomorphism {
  int crosscaps = 1;
  IntMatrix matrix;
};

struct PuncturedAutomorphism {
  SurfaceSignature signature;
  IntMatrix matrix;
  std::vector<int> sigma;    // beta_j -> eps_j beta_{sigma[j-1]}
  std::vector<int> eps;      // entries +1 / -1
  int relation_sign = 1;     // A r = relation_sign * r
};

// Quotient data: the image of e_j (j < n) in the basis
// e_1 = alpha_1, ..., e_{n-1} = alpha_{n-1}, e_n = alpha_1 + ... + alpha_n,
// given by n-1 integer coordinates and the parity of the e_n coordinate.
struct QuotientImage {
  std::vector<Integer> coords;
  bool parity = false;
  friend bool operator==(const QuotientImage&, const QuotientImage&) = default;
};

struct QuotientAutomorphismInput {
  int crosscaps = 1;
  std::vector<QuotientImage> images;  // n-1 entries
  friend bool operator==(const QuotientAutomorphismInput&, const QuotientAutomorphismInput&) = default;
};

ClosedAutomorphism validate_closed(const IntMatrix& matrix, int crosscaps);
PuncturedAutomorphism validate_punctured(const IntMatrix& matrix, int crosscaps, int punctures);

// Lifts with e_n fixed and each parity bit lifted to an e_n coefficient of 0
// or 1, then changes basis to alpha.
ClosedAutomorphism lift_quotient(const QuotientAutomorphismInput& q);
// Inverse direction: the quotient data of a normalized lift.
QuotientAutomorphismInput quotient_of(const ClosedAutomorphism& a);

Mod2Matrix reduce_mod2(const ClosedAutomorphism& a);

struct PuncturedMod2 {
  Mod2Matrix matrix;
  Mod2Matrix gram;  // diag(I_n, 0_m)
};
PuncturedMod2 reduce_mod2(const PuncturedAutomorphism& a);

Mod2Matrix pairing_gram(const SurfaceSignature& sig);

// (2,..,2) for closed surfaces, (2,..,2,-1,..,-1) for punctured ones.
std::vector<Integer> relation_vector(const SurfaceSignature& sig);

// Adds r to the alpha_1 column when A r = -r; the represented automorphism is
// unchanged and afterwards A r = r.
PuncturedAutomorphism with_positive_relation(const PuncturedAutomorphism& a);

IntMatrix generator_matrix(const GeneratorMove& move, const SurfaceSignature& sig);
Mod2Matrix generator_matrix_mod2(const GeneratorMove& move, const SurfaceSignature& sig);

// M(w_1) * ... * M(w_L); the last move acts first.
IntMatrix word_product(const MoveWord& word, const SurfaceSignature& sig);
Mod2Matrix word_product_mod2(const MoveWord& word, const SurfaceSignature& sig);

// Columns of A - B are all integer multiples of r (exact equality for closed
// surfaces, where normalized lifts are unique).
bool equal_mod_relation(const IntMatrix& a, const IntMatrix& b, const SurfaceSignature& sig);
// Same idea over F2, where r reduces to (0,..,0,1,..,1).
bool equal_mod2_mod_relation(const Mod2Matrix& a, const Mod2Matrix& b, const SurfaceSignature& sig);

// Block matrix diag(block, I_m) of size n + m.
IntMatrix embed_crosscap_block(const IntMatrix& block, const SurfaceSignature& sig);
Mod2Matrix embed_crosscap_block(const Mod2Matrix& block, const SurfaceSignature& sig);
IntMatrix crosscap_block(const IntMatrix& m, int crosscaps);
Mod2Matrix crosscap_block(const Mod2Matrix& m, int crosscaps);

}  // namespace crosscap
