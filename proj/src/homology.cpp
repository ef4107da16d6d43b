#include "homology.hpp"

#include <algorithm>
#include <string>

#include "error.hpp"

namespace crosscap {

namespace {

std::string num(int v) { return std::to_string(v); }

bool is_unit(const Integer& d) { return d == 1 || d == -1; }

// Coefficient k with col = k * r, if any.
bool multiple_of(const std::vector<Integer>& col, const std::vector<Integer>& r, Integer& k) {
  std::size_t pivot = 0;
  while (pivot < r.size() && r[pivot] == 0) ++pivot;
  if (pivot == r.size()) {
    k = 0;
    return std::all_of(col.begin(), col.end(), [](const Integer& x) { return x == 0; });
  }
  if (!mpz_divisible_p(col[pivot].get_mpz_t(), r[pivot].get_mpz_t())) return false;
  k = col[pivot] / r[pivot];
  for (std::size_t t = 0; t < r.size(); ++t)
    if (col[t] != k * r[t]) return false;
  return true;
}

}  // namespace

ClosedAutomorphism validate_closed(const IntMatrix& matrix, int crosscaps) {
  if (crosscaps < 1) throw Error(ErrorCode::InvalidArgument, "crosscap count must be >= 1");
  if (matrix.size() != crosscaps)
    throw Error(ErrorCode::DimensionMismatch,
                "closed model needs a " + num(crosscaps) + "x" + num(crosscaps) + " matrix");
  for (int r = 0; r < crosscaps; ++r) {
    Integer sum = 0;
    for (int c = 0; c < crosscaps; ++c) sum += matrix.at(r, c);
    if (sum != 1)
      throw Error(ErrorCode::RowSumViolation, "row " + num(r + 1) + " sums to " + sum.get_str() + ", expected 1");
  }
  const Integer det = determinant(matrix);
  if (!is_unit(det)) throw Error(ErrorCode::NonUnimodular, "determinant is " + det.get_str() + ", expected +-1");
  return {crosscaps, matrix};
}

PuncturedAutomorphism validate_punctured(const IntMatrix& matrix, int crosscaps, int punctures) {
  const SurfaceSignature sig{crosscaps, punctures};
  check_signature(sig);
  if (punctures < 1) throw Error(ErrorCode::InvalidArgument, "punctured model needs m >= 1");
  const int n = crosscaps;
  const int size = sig.rank();
  if (matrix.size() != size)
    throw Error(ErrorCode::DimensionMismatch, "punctured model needs a " + num(size) + "x" + num(size) + " matrix");

  PuncturedAutomorphism out;
  out.signature = sig;
  out.matrix = matrix;
  for (int j = 0; j < punctures; ++j) {
    const int col = n + j;
    int target = -1;
    for (int r = 0; r < size; ++r) {
      if (matrix.at(r, col) == 0) continue;
      if (r < n || target >= 0 || !is_unit(matrix.at(r, col)))
        throw Error(ErrorCode::BadBoundaryColumn,
                    "image of beta_" + num(j + 1) + " is not a signed boundary class");
      target = r;
    }
    if (target < 0) throw Error(ErrorCode::BadBoundaryColumn, "image of beta_" + num(j + 1) + " is zero");
    out.sigma.push_back(target - n + 1);
    out.eps.push_back(matrix.at(target, col) > 0 ? 1 : -1);
  }
  if (!is_permutation(out.sigma))
    throw Error(ErrorCode::BadBoundaryColumn, "boundary classes are not permuted bijectively");

  const std::vector<Integer> r = relation_vector(sig);
  const std::vector<Integer> image = matrix.apply(r);
  Integer k;
  const bool in_span = multiple_of(image, r, k);
  if (punctures == 1 && !in_span)
    throw Error(ErrorCode::InconsistentSinglePuncture,
                "image of beta_1 differs from twice the image of alpha_1 + ... + alpha_n");
  if (!in_span || !is_unit(k)) throw Error(ErrorCode::RelationNotPreserved, "A r is not +-r");
  out.relation_sign = k > 0 ? 1 : -1;

  // Free basis alpha_1..alpha_n, beta_1..beta_{m-1}; beta_m = 2 sum alpha - sum_{j<m} beta_j.
  const int reduced = size - 1;
  IntMatrix red(reduced);
  for (int c = 0; c < reduced; ++c)
    for (int t = 0; t < reduced; ++t) red.at(t, c) = matrix.at(t, c) + matrix.at(size - 1, c) * r[t];
  // r[t] is 2 on alpha rows and -1 on beta rows, exactly the beta_m substitution.
  const Integer det = determinant(red);
  if (!is_unit(det))
    throw Error(ErrorCode::NonAutomorphism, "determinant on the free basis is " + det.get_str() + ", expected +-1");
  return out;
}

ClosedAutomorphism lift_quotient(const QuotientAutomorphismInput& q) {
  const int n = q.crosscaps;
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "crosscap count must be >= 1");
  if (static_cast<int>(q.images.size()) != n - 1)
    throw Error(ErrorCode::DimensionMismatch, "quotient data needs n-1 images");
  for (const auto& im : q.images)
    if (static_cast<int>(im.coords.size()) != n - 1)
      throw Error(ErrorCode::DimensionMismatch, "each quotient image needs n-1 coordinates");
  if (n > 1) {
    IntMatrix block(n - 1);
    for (int c = 0; c < n - 1; ++c)
      for (int t = 0; t < n - 1; ++t) block.at(t, c) = q.images[c].coords[t];
    const Integer det = determinant(block);
    if (!is_unit(det))
      throw Error(ErrorCode::QuotientNotUnimodular,
                  "quotient block has determinant " + det.get_str() + ", expected +-1");
  }
  // h_j = sum_k q_jk e_k + p_j e_n in alpha coordinates is q_j (padded) + p_j * ones.
  IntMatrix a(n);
  std::vector<Integer> sum_h(static_cast<std::size_t>(n), Integer(0));
  for (int c = 0; c < n - 1; ++c) {
    const Integer p = q.images[c].parity ? 1 : 0;
    for (int t = 0; t < n; ++t) {
      Integer v = p;
      if (t < n - 1) v += q.images[c].coords[t];
      a.at(t, c) = v;
      sum_h[t] += v;
    }
  }
  // alpha_n = e_n - sum_{j<n} e_j and e_n is fixed.
  for (int t = 0; t < n; ++t) a.at(t, n - 1) = 1 - sum_h[t];
  return validate_closed(a, n);
}

QuotientAutomorphismInput quotient_of(const ClosedAutomorphism& a) {
  const int n = a.crosscaps;
  QuotientAutomorphismInput q;
  q.crosscaps = n;
  for (int c = 0; c < n - 1; ++c) {
    QuotientImage im;
    const Integer& last = a.matrix.at(n - 1, c);
    for (int t = 0; t < n - 1; ++t) im.coords.push_back(a.matrix.at(t, c) - last);
    im.parity = is_odd(last);
    q.images.push_back(std::move(im));
  }
  return q;
}

Mod2Matrix reduce_mod2(const ClosedAutomorphism& a) { return a.matrix.reduce_mod2(); }

PuncturedMod2 reduce_mod2(const PuncturedAutomorphism& a) {
  return {a.matrix.reduce_mod2(), pairing_gram(a.signature)};
}

Mod2Matrix pairing_gram(const SurfaceSignature& sig) {
  Mod2Matrix g(sig.rank());
  for (int i = 1; i <= sig.crosscaps; ++i) g.set(i, i, true);
  return g;
}

std::vector<Integer> relation_vector(const SurfaceSignature& sig) {
  std::vector<Integer> r(static_cast<std::size_t>(sig.rank()), Integer(2));
  for (int j = 0; j < sig.punctures; ++j) r[sig.crosscaps + j] = -1;
  return r;
}

PuncturedAutomorphism with_positive_relation(const PuncturedAutomorphism& a) {
  if (a.relation_sign > 0) return a;
  PuncturedAutomorphism out = a;
  const std::vector<Integer> r = relation_vector(a.signature);
  for (int t = 0; t < a.signature.rank(); ++t) out.matrix.at(t, 0) += r[t];
  out.relation_sign = 1;
  check_invariant(out.matrix.apply(r) == r, "relation shift did not normalize the sign");
  return out;
}

IntMatrix generator_matrix(const GeneratorMove& move, const SurfaceSignature& sig) {
  check_move(move, sig);
  const int n = sig.crosscaps;
  IntMatrix m = IntMatrix::identity(sig.rank());
  if (const auto* s = std::get_if<CrosscapSlide>(&move)) {
    m.at(s->j - 1, s->i - 1) = 2;
    m.at(s->j - 1, s->j - 1) = -1;
  } else if (std::holds_alternative<DehnTwist>(move)) {
    throw Error(ErrorCode::TwistHasNoIntegerMatrix, "Dehn twists only carry a mod-2 matrix");
  } else if (const auto* b = std::get_if<BoundarySlide>(&move)) {
    const int beta = n + b->j - 1;
    m.at(beta, b->i - 1) = -1;
    m.at(beta, beta) = -1;
  } else if (const auto* p = std::get_if<PuncturePerm>(&move)) {
    for (int j = 0; j < sig.punctures; ++j) {
      m.at(n + j, n + j) = 0;
      m.at(n + p->perm[j] - 1, n + j) = 1;
    }
  }
  return m;
}

Mod2Matrix generator_matrix_mod2(const GeneratorMove& move, const SurfaceSignature& sig) {
  check_move(move, sig);
  if (std::holds_alternative<CrosscapSlide>(move)) return Mod2Matrix::identity(sig.rank());
  if (const auto* t = std::get_if<DehnTwist>(&move))
    return embed_crosscap_block(twist_matrix(t->generator, sig.crosscaps), sig);
  return generator_matrix(move, sig).reduce_mod2();
}

IntMatrix word_product(const MoveWord& word, const SurfaceSignature& sig) {
  check_signature(sig);
  IntMatrix out = IntMatrix::identity(sig.rank());
  for (const auto& mv : word) out = out * generator_matrix(mv, sig);
  return out;
}

Mod2Matrix word_product_mod2(const MoveWord& word, const SurfaceSignature& sig) {
  check_signature(sig);
  Mod2Matrix out = Mod2Matrix::identity(sig.rank());
  for (const auto& mv : word) out = out * generator_matrix_mod2(mv, sig);
  return out;
}

bool equal_mod_relation(const IntMatrix& a, const IntMatrix& b, const SurfaceSignature& sig) {
  if (a.size() != b.size() || a.size() != sig.rank())
    throw Error(ErrorCode::DimensionMismatch, "matrices do not match the surface model");
  if (sig.closed()) return a == b;
  const std::vector<Integer> r = relation_vector(sig);
  for (int c = 0; c < a.size(); ++c) {
    std::vector<Integer> d = a.column(c);
    for (int t = 0; t < a.size(); ++t) d[t] -= b.at(t, c);
    Integer k;
    if (!multiple_of(d, r, k)) return false;
  }
  return true;
}

bool equal_mod2_mod_relation(const Mod2Matrix& a, const Mod2Matrix& b, const SurfaceSignature& sig) {
  if (a.dim() != b.dim() || a.dim() != sig.rank())
    throw Error(ErrorCode::DimensionMismatch, "matrices do not match the surface model");
  if (sig.closed()) return a == b;
  Mod2Vector rbar(sig.rank());
  for (int j = 1; j <= sig.punctures; ++j) rbar.set(sig.crosscaps + j, true);
  for (int c = 1; c <= a.dim(); ++c) {
    const Mod2Vector d = a.column(c) + b.column(c);
    if (!d.is_zero() && d != rbar) return false;
  }
  return true;
}

IntMatrix embed_crosscap_block(const IntMatrix& block, const SurfaceSignature& sig) {
  if (block.size() != sig.crosscaps) throw Error(ErrorCode::DimensionMismatch, "block size differs from n");
  IntMatrix m = IntMatrix::identity(sig.rank());
  for (int r = 0; r < sig.crosscaps; ++r)
    for (int c = 0; c < sig.crosscaps; ++c) m.at(r, c) = block.at(r, c);
  return m;
}

Mod2Matrix embed_crosscap_block(const Mod2Matrix& block, const SurfaceSignature& sig) {
  if (block.dim() != sig.crosscaps) throw Error(ErrorCode::DimensionMismatch, "block size differs from n");
  Mod2Matrix m = Mod2Matrix::identity(sig.rank());
  for (int r = 1; r <= sig.crosscaps; ++r)
    for (int c = 1; c <= sig.crosscaps; ++c) m.set(r, c, block.get(r, c));
  return m;
}

IntMatrix crosscap_block(const IntMatrix& m, int crosscaps) {
  IntMatrix b(crosscaps);
  for (int r = 0; r < crosscaps; ++r)
    for (int c = 0; c < crosscaps; ++c) b.at(r, c) = m.at(r, c);
  return b;
}

Mod2Matrix crosscap_block(const Mod2Matrix& m, int crosscaps) {
  Mod2Matrix b(crosscaps);
  for (int r = 1; r <= crosscaps; ++r)
    for (int c = 1; c <= crosscaps; ++c) b.set(r, c, m.get(r, c));
  return b;
}

}  // namespace crosscap
