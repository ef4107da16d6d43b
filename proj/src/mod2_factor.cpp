#include "mod2_factor.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <unordered_set>

#include "error.hpp"

namespace crosscap {

Mod2Matrix mod2_word_product(const TwistWord& word) {
  Mod2Matrix out = Mod2Matrix::identity(word.dim);
  for (const auto& g : word.moves) out = out * twist_matrix(g, word.dim);
  return out;
}

namespace {

// Transvection with support gamma, applied to every column.
Mod2Matrix left_apply(const Mod2Vector& gamma, const Mod2Matrix& m) {
  Mod2Matrix out(m.dim());
  for (int j = 1; j <= m.dim(); ++j) out.set_column(j, apply_transvection(m.column(j), gamma));
  return out;
}

}  // namespace

TwistWord factor_orthogonal(const Mod2Matrix& m) {
  if (!is_orthogonal(m)) throw Error(ErrorCode::NotOrthogonal, "matrix does not preserve the mod-2 inner product");
  const int dim = m.dim();
  TwistWord word{dim, {}};
  Mod2Matrix residual = m;

  // Each emitted T satisfies T residual_new = residual_old, so the emitted
  // sequence multiplies (in order) to the input.
  auto emit = [&](const Mod2Vector& gamma) {
    residual = left_apply(gamma, residual);
    word.moves.emplace_back(gamma.support());
  };

  for (int c = 1; c < dim; ++c) {
    const Mod2Vector w = Mod2Vector::unit(dim, c);
    Mod2Vector u = residual.column(c);
    for (int k = 1; k < c; ++k) check_invariant(!u.get(k), "residual image leaves the active block");
    if (u == w) continue;
    if (inner_product(u, w)) {
      int j = 0;
      for (int t = c + 1; t <= dim; ++t)
        if (!u.get(t)) {
          j = t;
          break;
        }
      // u would be the all-ones vector of the block, which only e_dim can map to.
      check_invariant(j != 0, "orthogonal map sends e_c to the block characteristic vector");
      Mod2Vector step(dim);
      step.set(c, true);
      step.set(j, true);
      emit(step);
      u = residual.column(c);
    }
    emit(u + w);
    check_invariant(residual.column(c) == w, "transvection did not fix column");
  }
  check_invariant(residual.is_identity(), "factorization residual is not the identity");
  return word;
}

std::map<int, std::uint64_t> EnumeratedGroup::length_histogram() const {
  std::map<int, std::uint64_t> h;
  for (int len : lengths) ++h[len];
  return h;
}

int enumeration_dim_bound() {
  int bound = 6;
  if (const char* env = std::getenv("CROSSCAP_MAX_ENUM_DIM"); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1) throw Error(ErrorCode::InvalidArgument, std::string("bad CROSSCAP_MAX_ENUM_DIM: ") + env);
    bound = static_cast<int>(std::min<long>(v, kEnumerationHardLimit));
  }
  return bound;
}

EnumeratedGroup enumerate_orthogonal(int dim) { return enumerate_orthogonal(dim, enumeration_dim_bound()); }

EnumeratedGroup enumerate_orthogonal(int dim, int max_dim) {
  if (dim < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be >= 1");
  if (dim > max_dim || dim > kEnumerationHardLimit)
    throw Error(ErrorCode::ResourceLimit, "enumeration dimension " + std::to_string(dim) + " exceeds bound " +
                                             std::to_string(std::min(max_dim, kEnumerationHardLimit)));
  std::vector<Mod2Matrix> gens;
  for (const auto& g : all_twist_generators(dim)) gens.push_back(twist_matrix(g, dim));

  EnumeratedGroup group;
  group.dim = dim;
  std::unordered_set<std::uint64_t> seen;
  const Mod2Matrix id = Mod2Matrix::identity(dim);
  seen.insert(id.key());
  group.elements.push_back(id);
  group.lengths.push_back(0);

  std::size_t frontier_begin = 0;
  int depth = 0;
  while (frontier_begin < group.elements.size()) {
    const std::size_t frontier_end = group.elements.size();
    ++depth;
    for (std::size_t k = frontier_begin; k < frontier_end; ++k) {
      for (const auto& g : gens) {
        Mod2Matrix next = g * group.elements[k];
        if (seen.insert(next.key()).second) {
          group.elements.push_back(std::move(next));
          group.lengths.push_back(depth);
        }
      }
    }
    frontier_begin = frontier_end;
  }
  return group;
}

}  // namespace crosscap
