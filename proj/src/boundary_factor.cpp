#include "boundary_factor.hpp"

#include <string>

#include "error.hpp"

namespace crosscap {

namespace {

Integer complexity(const std::vector<std::vector<Integer>>& c) {
  Integer s = 0;
  for (const auto& row : c)
    for (const auto& v : row) s += abs(v);
  return s;
}

void check_column_sums(const ResidualForm& f) {
  const int m = f.signature.punctures;
  for (int j = 0; j < m; ++j) {
    Integer sum = 0;
    for (const auto& row : f.c) sum += row[j];
    check_invariant(2 * sum == f.eps[j] - 1, "boundary column sum does not match its sign");
  }
}

}  // namespace

IntMatrix ResidualForm::matrix() const {
  const int n = signature.crosscaps;
  IntMatrix a(signature.rank());
  for (int i = 0; i < n; ++i) {
    a.at(i, i) = 1;
    for (int j = 0; j < signature.punctures; ++j) a.at(n + j, i) = c[i][j];
  }
  for (int j = 0; j < signature.punctures; ++j) a.at(n + sigma[j] - 1, n + j) = eps[j];
  return a;
}

ResidualForm split_residual(const PuncturedAutomorphism& input) {
  const PuncturedAutomorphism a = with_positive_relation(
      validate_punctured(input.matrix, input.signature.crosscaps, input.signature.punctures));
  const int n = a.signature.crosscaps;
  const int m = a.signature.punctures;
  const std::vector<Integer> r = relation_vector(a.signature);

  ResidualForm f;
  f.signature = a.signature;
  f.eps = a.eps;
  f.sigma = a.sigma;
  f.c.assign(n, std::vector<Integer>(m));
  for (int i = 0; i < n; ++i) {
    // alpha part must be e_i + 2t(1,..,1); subtracting t r leaves e_i.
    const Integer twice_t = n > 1 ? a.matrix.at(i == 0 ? 1 : 0, i) : a.matrix.at(0, 0) - 1;
    if (!mpz_divisible_ui_p(twice_t.get_mpz_t(), 2))
      throw Error(ErrorCode::NotResidual, "alpha_" + std::to_string(i + 1) + " does not map to itself");
    const Integer t = twice_t / 2;
    for (int k = 0; k < n; ++k)
      if (a.matrix.at(k, i) - t * r[k] != (k == i ? 1 : 0))
        throw Error(ErrorCode::NotResidual, "alpha_" + std::to_string(i + 1) + " does not map to itself");
    for (int j = 0; j < m; ++j) f.c[i][j] = a.matrix.at(n + j, i) - t * r[n + j];
  }
  check_invariant(f.matrix().apply(r) == r, "normalized residual does not fix the relation");
  return f;
}

ResidualFactorization factor_residual(const ResidualForm& form) {
  const int n = form.signature.crosscaps;
  const int m = form.signature.punctures;
  check_signature(form.signature);
  if (m < 1 || static_cast<int>(form.c.size()) != n || static_cast<int>(form.eps.size()) != m ||
      static_cast<int>(form.sigma.size()) != m || !is_permutation(form.sigma))
    throw Error(ErrorCode::InvalidArgument, "malformed residual form");
  for (const auto& row : form.c)
    if (static_cast<int>(row.size()) != m) throw Error(ErrorCode::InvalidArgument, "malformed residual form");

  ResidualFactorization out;
  bool identity_perm = true;
  for (int j = 0; j < m; ++j) identity_perm = identity_perm && form.sigma[j] == j + 1;
  if (!identity_perm) out.word.push_back(PuncturePerm{form.sigma});

  // phi = P_sigma psi with psi(alpha_i) = alpha_i + sum_j c_{i,sigma(j)} beta_j.
  ResidualForm w = form;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) w.c[i][j] = form.c[i][form.sigma[j] - 1];
  for (int j = 0; j < m; ++j) w.sigma[j] = j + 1;
  check_column_sums(w);
  const std::vector<Integer> r = relation_vector(w.signature);

  out.initial_complexity = complexity(w.c);
  std::vector<BoundarySlide> applied;
  // psi h_ij: c_ij -= eps_j, eps_j flips.
  auto slide = [&](int i, int j, const char* phase) {
    const Integer before = complexity(w.c);
    w.c[i][j] -= w.eps[j];
    w.eps[j] = -w.eps[j];
    const Integer after = complexity(w.c);
    check_invariant(after + 1 == before, "boundary slide did not lower C by exactly 1");
    applied.push_back({i + 1, j + 1});
    out.trace.push_back({phase, 0, Side::Right, {BoundarySlide{i + 1, j + 1}}, before.get_str(), after.get_str()});
    check_column_sums(w);
    check_invariant(w.matrix().apply(r) == r, "boundary slide broke the relation");
  };

  for (int j = 0; j < m; ++j) {
    if (w.eps[j] > 0) continue;
    int i = 0;
    while (i < n && w.c[i][j] >= 0) ++i;
    check_invariant(i < n, "negative boundary has no negative coefficient");
    slide(i, j, "sign");
  }
  for (int j = 0; j < m; ++j) {
    while (true) {
      int pos = 0;
      while (pos < n && w.c[pos][j] <= 0) ++pos;
      if (pos == n) break;
      slide(pos, j, "pair");
      int neg = 0;
      while (neg < n && w.c[neg][j] >= 0) ++neg;
      check_invariant(neg < n, "boundary column has no negative coefficient");
      slide(neg, j, "pair");
    }
  }
  for (int j = 0; j < m; ++j) {
    check_invariant(w.eps[j] == 1, "boundary sign left at -1");
    for (int i = 0; i < n; ++i) check_invariant(w.c[i][j] == 0, "boundary coefficient left nonzero");
  }

  out.boundary_slides = applied.size();
  for (auto it = applied.rbegin(); it != applied.rend(); ++it) out.word.push_back(*it);
  return out;
}

}  // namespace crosscap
