#include "moves.hpp"

#include <algorithm>

#include "error.hpp"

namespace crosscap {

void check_signature(const SurfaceSignature& sig) {
  if (sig.crosscaps < 1) throw Error(ErrorCode::InvalidArgument, "crosscap count must be >= 1");
  if (sig.punctures < 0) throw Error(ErrorCode::InvalidArgument, "puncture count must be >= 0");
}

namespace {

template <class... F>
struct Overload : F... {
  using F::operator()...;
};
template <class... F>
Overload(F...) -> Overload<F...>;

std::string pair_string(const char* name, int i, int j) {
  return std::string(name) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void require_range(int v, int hi, const char* what) {
  if (v < 1 || v > hi)
    throw Error(ErrorCode::IndexOutOfRange,
                std::string(what) + " index " + std::to_string(v) + " out of range 1.." + std::to_string(hi));
}

}  // namespace

std::string to_string(const GeneratorMove& move) {
  return std::visit(Overload{
                        [](const CrosscapSlide& s) { return pair_string("CrosscapSlide", s.i, s.j); },
                        [](const DehnTwist& t) { return "DehnTwist" + t.generator.to_string().substr(1); },
                        [](const BoundarySlide& s) { return pair_string("BoundarySlide", s.i, s.j); },
                        [](const PuncturePerm& p) {
                          std::string s = "PuncturePerm(";
                          for (std::size_t k = 0; k < p.perm.size(); ++k) s += (k ? "," : "") + std::to_string(p.perm[k]);
                          return s + ")";
                        },
                    },
                    move);
}

void check_move(const GeneratorMove& move, const SurfaceSignature& sig) {
  check_signature(sig);
  std::visit(Overload{
                 [&](const CrosscapSlide& s) {
                   require_range(s.i, sig.crosscaps, "crosscap");
                   require_range(s.j, sig.crosscaps, "crosscap");
                   if (s.i == s.j) throw Error(ErrorCode::InvalidArgument, "crosscap slide needs i != j");
                 },
                 [&](const DehnTwist& t) { require_range(t.generator.max_index(), sig.crosscaps, "twist support"); },
                 [&](const BoundarySlide& s) {
                   require_range(s.i, sig.crosscaps, "crosscap");
                   require_range(s.j, sig.punctures, "puncture");
                 },
                 [&](const PuncturePerm& p) {
                   if (sig.punctures < 1 || static_cast<int>(p.perm.size()) != sig.punctures ||
                       !is_permutation(p.perm))
                     throw Error(ErrorCode::InvalidArgument, "puncture permutation must permute 1..m");
                 },
             },
             move);
}

bool is_permutation(const std::vector<int>& perm) {
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k)
    if (sorted[k] != static_cast<int>(k) + 1) return false;
  return true;
}

std::vector<int> inverse_permutation(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) inv[perm[k] - 1] = static_cast<int>(k) + 1;
  return inv;
}

}  // namespace crosscap
