#include "pipeline.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "error.hpp"

namespace crosscap {

const char* to_string(Level level) { return level == Level::Integer ? "integer" : "mod2"; }

const char* to_string(Completeness completeness) {
  return completeness == Completeness::FullInteger ? "full-integer" : "mod2-only";
}

const char* to_string(Reason reason) {
  return reason == Reason::PairingNotPreserved ? "PairingNotPreserved" : "None";
}

MoveCounts count_moves(const MoveWord& word) {
  MoveCounts c;
  for (const auto& mv : word) {
    if (std::holds_alternative<DehnTwist>(mv))
      ++c.dehn_twists;
    else if (std::holds_alternative<CrosscapSlide>(mv))
      ++c.crosscap_slides;
    else if (std::holds_alternative<BoundarySlide>(mv))
      ++c.boundary_slides;
    else
      ++c.puncture_perms;
  }
  return c;
}

namespace {

MoveWord twist_moves(const TwistWord& w) {
  MoveWord out;
  out.reserve(w.moves.size());
  for (const auto& g : w.moves) out.push_back(DehnTwist{g});
  return out;
}

Decision realizable(Certificate cert) {
  cert.meta.counts = count_moves(cert.moves);
  Decision d;
  d.realizable = true;
  d.completeness = cert.level == Level::Integer ? Completeness::FullInteger : Completeness::Mod2Only;
  d.certificate = std::move(cert);
  return d;
}

Decision not_realizable() {
  Decision d;
  d.reason = Reason::PairingNotPreserved;
  return d;
}

void check_self_verifying(const Instance& inst, const Certificate& cert) {
  const Verdict v = verify_certificate(inst, cert);
  if (!v.accepted) throw_invariant("assembled certificate does not verify: " + v.reason);
}

}  // namespace

Decision decide_closed(const Instance& inst, const DecideOptions& options) {
  if (!inst.signature.closed()) throw Error(ErrorCode::InvalidArgument, "decide_closed needs m = 0");
  check_signature(inst.signature);
  const ClosedAutomorphism a = validate_closed(inst.matrix, inst.signature.crosscaps);
  const Mod2Matrix abar = reduce_mod2(a);
  if (!is_orthogonal(abar)) return not_realizable();

  Certificate cert;
  if (abar.is_identity()) {
    KernelFactorization k = factor_kernel(a, options.kernel);
    cert.level = Level::Integer;
    cert.moves = k.word.as_moves();
    cert.meta.kernel_trace = std::move(k.trace);
  } else {
    cert.level = Level::Mod2;
    cert.moves = twist_moves(factor_orthogonal(abar));
  }
  check_self_verifying(inst, cert);
  return realizable(std::move(cert));
}

Decision decide_punctured(const Instance& inst, const DecideOptions& options) {
  const SurfaceSignature sig = inst.signature;
  if (sig.closed()) throw Error(ErrorCode::InvalidArgument, "decide_punctured needs m >= 1");
  const PuncturedAutomorphism a =
      with_positive_relation(validate_punctured(inst.matrix, sig.crosscaps, sig.punctures));
  const PuncturedMod2 abar = reduce_mod2(a);
  if (!preserves_form(abar.matrix, abar.gram)) return not_realizable();

  const int n = sig.crosscaps;
  const int m = sig.punctures;
  const IntMatrix block = crosscap_block(a.matrix, n);
  const Mod2Matrix block_bar = block.reduce_mod2();
  Certificate cert;

  if (block_bar.is_identity()) {
    // A = diag(P, I) Q with Q the identity on the capped surface.
    ClosedAutomorphism closed_part;
    try {
      closed_part = validate_closed(block, n);
    } catch (const Error& e) {
      throw_invariant(std::string("closed part of a valid automorphism failed validation: ") + e.what());
    }
    KernelFactorization k = factor_kernel(closed_part, options.kernel);
    const MoveWord kernel = k.word.as_moves();
    const MoveWord inverse(kernel.rbegin(), kernel.rend());
    PuncturedAutomorphism q = a;
    q.matrix = word_product(inverse, sig) * a.matrix;
    ResidualFactorization res = factor_residual(split_residual(q));

    cert.level = Level::Integer;
    cert.moves = kernel;
    cert.moves.insert(cert.moves.end(), res.word.begin(), res.word.end());
    cert.meta.kernel_trace = std::move(k.trace);
    cert.meta.boundary_trace = std::move(res.trace);
    cert.meta.boundary_complexity = res.initial_complexity;
  } else {
    // Mod 2: A = diag(P, I) Q with P^-1 = P^T; Q fixes the alpha classes up to
    // boundary classes, and boundary slides commute mod 2.
    const TwistWord twists = factor_orthogonal(block_bar);
    const Mod2Matrix q = embed_crosscap_block(block_bar.transpose(), sig) * abar.matrix;
    cert.level = Level::Mod2;
    cert.moves = twist_moves(twists);
    bool identity_perm = true;
    for (int j = 0; j < m; ++j) identity_perm = identity_perm && a.sigma[j] == j + 1;
    if (!identity_perm) cert.moves.push_back(PuncturePerm{a.sigma});
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= m; ++j)
        if (q.get(n + a.sigma[j - 1], i)) cert.moves.push_back(BoundarySlide{i, j});
  }
  check_self_verifying(inst, cert);
  return realizable(std::move(cert));
}

Decision decide(const Instance& inst, const DecideOptions& options) {
  return inst.signature.closed() ? decide_closed(inst, options) : decide_punctured(inst, options);
}

Verdict verify_certificate(const Instance& inst, const Certificate& cert) {
  try {
    const SurfaceSignature sig = inst.signature;
    check_signature(sig);
    if (sig.closed())
      validate_closed(inst.matrix, sig.crosscaps);
    else
      validate_punctured(inst.matrix, sig.crosscaps, sig.punctures);
    for (const auto& mv : cert.moves) check_move(mv, sig);

    if (cert.level == Level::Integer) {
      const IntMatrix product = word_product(cert.moves, sig);
      if (!equal_mod_relation(product, inst.matrix, sig)) return {false, "product mismatch"};
    } else {
      const Mod2Matrix product = word_product_mod2(cert.moves, sig);
      if (!equal_mod2_mod_relation(product, inst.matrix.reduce_mod2(), sig))
        return {false, "mod-2 product mismatch"};
    }
    return {true, ""};
  } catch (const Error& e) {
    return {false, std::string(to_string(e.code())) + ": " + e.what()};
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
}

GeneratedInstance generate_instance(const GenerateOptions& options) {
  const SurfaceSignature sig = options.signature;
  check_signature(sig);
  const int n = sig.crosscaps;
  const int m = sig.punctures;
  if (m > 20) throw Error(ErrorCode::InvalidArgument, "generation supports at most 20 punctures");
  if (options.corrupt && n < 3)
    throw Error(ErrorCode::InvalidArgument,
                "corruption needs n >= 3: for n <= 2 every automorphism is orthogonal mod 2");

  // Every valid index tuple is equally likely: n(n-1) crosscap slides, plus
  // nm boundary slides and m! puncture permutations when m >= 1.
  const std::uint64_t slides = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1);
  const std::uint64_t boundary = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(m);
  std::uint64_t perms = 0;
  if (m >= 1) {
    perms = 1;
    for (int k = 2; k <= m; ++k) perms *= static_cast<std::uint64_t>(k);
  }
  const std::uint64_t total = slides + boundary + perms;
  if (options.length > 0 && total == 0)
    throw Error(ErrorCode::InvalidArgument, "the surface has no generators to sample");

  std::mt19937_64 rng(options.seed);
  GeneratedInstance out;
  out.instance.signature = sig;
  for (std::size_t t = 0; t < options.length; ++t) {
    std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
    std::uint64_t u = pick(rng);
    if (u < slides) {
      const int i = static_cast<int>(u / static_cast<std::uint64_t>(n - 1)) + 1;
      int j = static_cast<int>(u % static_cast<std::uint64_t>(n - 1)) + 1;
      if (j >= i) ++j;
      out.word.push_back(CrosscapSlide{i, j});
    } else if ((u -= slides) < boundary) {
      out.word.push_back(BoundarySlide{static_cast<int>(u / static_cast<std::uint64_t>(m)) + 1,
                                       static_cast<int>(u % static_cast<std::uint64_t>(m)) + 1});
    } else {
      std::vector<int> perm(static_cast<std::size_t>(m));
      std::iota(perm.begin(), perm.end(), 1);
      std::shuffle(perm.begin(), perm.end(), rng);
      out.word.push_back(PuncturePerm{std::move(perm)});
    }
  }
  IntMatrix a = word_product(out.word, sig);

  out.crosscap_perm.resize(static_cast<std::size_t>(n));
  std::iota(out.crosscap_perm.begin(), out.crosscap_perm.end(), 1);
  if (options.permute_crosscaps) {
    std::shuffle(out.crosscap_perm.begin(), out.crosscap_perm.end(), rng);
    IntMatrix p(sig.rank());
    for (int c = 0; c < n; ++c) p.at(out.crosscap_perm[c] - 1, c) = 1;
    for (int c = n; c < sig.rank(); ++c) p.at(c, c) = 1;
    a = a * p;
  }
  if (options.corrupt) {
    // U = I + e_b (e_a - e_c)^T keeps row sums, det 1 and r, but column a of
    // its mod-2 image has even weight.
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    IntMatrix u = IntMatrix::identity(sig.rank());
    u.at(idx[1], idx[0]) += 1;
    u.at(idx[1], idx[2]) -= 1;
    a = a * u;
    out.corrupted = true;
  }
  out.instance.matrix = std::move(a);
  return out;
}

}  // namespace crosscap
