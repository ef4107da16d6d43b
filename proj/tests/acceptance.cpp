// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "error.hpp"
#include "mod2_factor.hpp"
#include "pipeline.hpp"
#include "support.hpp"

using namespace crosscap;
using crosscap::testing::uniform;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

Outcome fail(std::string why) { return {false, std::move(why)}; }

// 1. Mod-2 generation against the exhaustive filter.
Outcome mod2_generation() {
  const auto start = Clock::now();
  const std::uint64_t orders[] = {1, 2, 6, 48};
  std::size_t factored = 0;
  for (int d = 1; d <= 4; ++d) {
    const EnumeratedGroup g = enumerate_orthogonal(d);
    std::set<std::uint64_t> got;
    for (const auto& m : g.elements) got.insert(m.key());
    std::set<std::uint64_t> want;
    for (const auto& m : crosscap::testing::orthogonal_by_filter(d)) want.insert(m.key());
    if (got != want || g.order() != orders[d - 1])
      return fail("dim " + std::to_string(d) + ": order " + std::to_string(g.order()) + ", filter " +
                  std::to_string(want.size()));
    for (const auto& m : g.elements) {
      const TwistWord w = factor_orthogonal(m);
      if (static_cast<int>(w.moves.size()) > 2 * (d - 1)) return fail("word too long at dim " + std::to_string(d));
      if (mod2_word_product(w) != m) return fail("replay mismatch at dim " + std::to_string(d));
      ++factored;
    }
  }
  const double t = seconds_since(start);
  if (t >= 10.0) return fail("took " + fmt_seconds(t));
  return {true, "orders 1,2,6,48; " + std::to_string(factored) + " elements factored; " + fmt_seconds(t)};
}

// 2. Every enumerated element fixes the all-ones vector.
Outcome characteristic_vector() {
  std::size_t checked = 0;
  for (int d = 1; d <= 5; ++d) {
    const Mod2Vector ones = Mod2Vector::ones(d);
    for (const auto& m : enumerate_orthogonal(d).elements) {
      if (m * ones != ones) return fail("exception at dim " + std::to_string(d));
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " matrices, 0 exceptions"};
}

// 3. Kernel round trip with strictly descending traces.
Outcome kernel_round_trip() {
  const auto start = Clock::now();
  std::mt19937_64 rng(20260101);
  std::size_t moves = 0;
  std::size_t steps = 0;
  for (int t = 0; t < 200; ++t) {
    const int n = uniform(rng, 2, 10);
    const MoveWord w = crosscap::testing::random_slide_word(rng, n, uniform(rng, 0, 40));
    const IntMatrix a = word_product(w, {n, 0});
    const KernelFactorization k = factor_kernel({n, a});
    if (word_product(k.word.as_moves(), {n, 0}) != a) return fail("case " + std::to_string(t) + ": product mismatch");
    std::string why;
    if (!crosscap::testing::trace_descends(k.trace, &why)) return fail("case " + std::to_string(t) + ": " + why);
    moves += k.word.moves.size();
    steps += k.trace.size();
  }
  const double t = seconds_since(start);
  if (t >= 10.0) return fail("took " + fmt_seconds(t));
  return {true, "200 words, " + std::to_string(moves) + " slides, " + std::to_string(steps) + " trace steps; " +
                    fmt_seconds(t)};
}

// 4. Generators are involutions.
Outcome involutions() {
  std::size_t count = 0;
  for (int n = 2; n <= 10; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        const IntMatrix e = generator_matrix(CrosscapSlide{i, j}, {n, 0});
        if (!(e * e).is_identity()) return fail("e_" + std::to_string(i) + std::to_string(j) + " at n " + std::to_string(n));
        ++count;
      }
  std::size_t twists = 0;
  for (int d = 2; d <= 8; ++d)
    for (const auto& g : all_twist_generators(d)) {
      const Mod2Matrix r = twist_matrix(g, d);
      if (!(r * r).is_identity()) return fail("R" + g.to_string() + " at dim " + std::to_string(d));
      ++twists;
    }
  return {true, std::to_string(count) + " crosscap slides, " + std::to_string(twists) + " twist involutions"};
}

// 5. Crosscap slide words vanish mod 2.
Outcome slides_vanish_mod2() {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const int n = uniform(rng, 2, 10);
    const MoveWord w = crosscap::testing::random_slide_word(rng, n, uniform(rng, 1, 40));
    if (!word_product(w, {n, 0}).reduce_mod2().is_identity()) return fail("word " + std::to_string(t));
  }
  return {true, "100 words"};
}

// 6. Closed decisions on generated instances.
Outcome closed_decision() {
  std::mt19937_64 rng(6);
  std::size_t full = 0;
  for (int t = 0; t < 100; ++t) {
    const SurfaceSignature sig{uniform(rng, 2, 8), 0};
    const bool permute = t % 2 == 1;
    const GeneratedInstance g =
        generate_instance({sig, static_cast<std::size_t>(uniform(rng, 0, 30)), rng(), false, permute});
    const Decision d = decide_closed(g.instance);
    if (!d.realizable || !d.certificate) return fail("realizable instance " + std::to_string(t) + " rejected");
    const Verdict v = verify_certificate(g.instance, *d.certificate);
    if (!v.accepted) return fail("certificate " + std::to_string(t) + " rejected: " + v.reason);
    full += *d.completeness == Completeness::FullInteger;
  }
  for (int t = 0; t < 100; ++t) {
    const SurfaceSignature sig{uniform(rng, 3, 8), 0};
    const GeneratedInstance g =
        generate_instance({sig, static_cast<std::size_t>(uniform(rng, 0, 30)), rng(), true, t % 2 == 1});
    const Decision d = decide_closed(g.instance);
    if (d.realizable || d.reason != Reason::PairingNotPreserved)
      return fail("corrupted instance " + std::to_string(t) + " accepted");
  }
  return {true, "100 accepted (" + std::to_string(full) + " full-integer), 100 corrupted rejected, 0 crossover"};
}

// 7. Punctured round trip with exact boundary slide counts.
Outcome punctured_round_trip() {
  std::mt19937_64 rng(7);
  std::size_t slides = 0;
  for (int t = 0; t < 200; ++t) {
    const SurfaceSignature sig{uniform(rng, 1, 6), uniform(rng, 1, 4)};
    const GeneratedInstance g =
        generate_instance({sig, static_cast<std::size_t>(uniform(rng, 0, 30)), rng(), false, false});
    const Decision d = decide_punctured(g.instance);
    const std::string id = "case " + std::to_string(t);
    if (!d.realizable || !d.certificate) return fail(id + " not realizable");
    if (*d.completeness != Completeness::FullInteger) return fail(id + " not full-integer");
    const Certificate& c = *d.certificate;
    if (!equal_mod_relation(word_product(c.moves, sig), g.instance.matrix, sig)) return fail(id + " product mismatch");
    if (!verify_certificate(g.instance, c).accepted) return fail(id + " rejected by the verifier");
    const std::size_t emitted = count_moves(c.moves).boundary_slides;
    if (!c.meta.boundary_complexity || *c.meta.boundary_complexity != Integer(static_cast<unsigned long>(emitted)))
      return fail(id + " boundary slide count differs from the initial complexity");
    slides += emitted;
  }
  return {true, "200 words, " + std::to_string(slides) + " boundary slides, all counts exact"};
}

// 8. Quotient lifts.
Outcome quotient_lift() {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    const int n = uniform(rng, 1, 8);
    IntMatrix block = n > 1 ? IntMatrix::identity(n - 1) : IntMatrix();
    for (int k = 0; k < 15 && n > 2; ++k) {
      const int a = uniform(rng, 0, n - 2);
      int b = uniform(rng, 0, n - 3);
      if (b >= a) ++b;
      const long s = uniform(rng, -3, 3);
      for (int r = 0; r < n - 1; ++r) block.at(r, a) += s * block.at(r, b);
      if (uniform(rng, 0, 3) == 0)
        for (int r = 0; r < n - 1; ++r) block.at(r, b) = -block.at(r, b);
    }
    if (n == 2 && uniform(rng, 0, 1)) block.at(0, 0) = -1;
    QuotientAutomorphismInput q{n, {}};
    for (int c = 0; c < n - 1; ++c) {
      QuotientImage im;
      for (int r = 0; r < n - 1; ++r) im.coords.push_back(block.at(r, c));
      im.parity = uniform(rng, 0, 1);
      q.images.push_back(std::move(im));
    }
    const ClosedAutomorphism a = lift_quotient(q);
    try {
      validate_closed(a.matrix, n);
    } catch (const Error& e) {
      return fail("lift " + std::to_string(t) + " invalid: " + e.what());
    }
    if (a.matrix.apply(std::vector<Integer>(n, 1)) != std::vector<Integer>(n, 1))
      return fail("lift " + std::to_string(t) + " moves the ones vector");
    if (quotient_of(a) != q) return fail("lift " + std::to_string(t) + " does not reduce to its input");
  }
  return {true, "100 lifts validated and reduced back"};
}

MoveWord integer_generators(const SurfaceSignature& sig) {
  MoveWord out;
  for (int i = 1; i <= sig.crosscaps; ++i)
    for (int j = 1; j <= sig.crosscaps; ++j)
      if (i != j) out.push_back(CrosscapSlide{i, j});
  for (int i = 1; i <= sig.crosscaps; ++i)
    for (int j = 1; j <= sig.punctures; ++j) out.push_back(BoundarySlide{i, j});
  if (sig.punctures >= 2) {
    std::vector<int> p(static_cast<std::size_t>(sig.punctures));
    for (int j = 0; j < sig.punctures; ++j) p[j] = j + 1;
    while (std::next_permutation(p.begin(), p.end())) out.push_back(PuncturePerm{p});
  }
  return out;
}

// 9. Single-move mutations of accepted certificates.
Outcome certificate_fuzz() {
  std::mt19937_64 rng(9);
  int mutations = 0;
  int integer_level = 0;
  while (mutations < 50) {
    const SurfaceSignature sig{uniform(rng, 2, 6), uniform(rng, 0, 3)};
    const bool mod2 = mutations % 3 == 2;
    const GeneratedInstance g =
        generate_instance({sig, static_cast<std::size_t>(uniform(rng, 1, 20)), rng(), false, mod2});
    const Decision d = decide(g.instance);
    if (!d.realizable || !verify_certificate(g.instance, *d.certificate).accepted)
      return fail("unmutated certificate rejected");
    Certificate cert = *d.certificate;
    std::vector<std::size_t> positions;
    for (std::size_t k = 0; k < cert.moves.size(); ++k)
      if (cert.level == Level::Integer || std::holds_alternative<DehnTwist>(cert.moves[k])) positions.push_back(k);
    if (positions.empty()) continue;
    const std::size_t pos = positions[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(positions.size()) - 1))];
    MoveWord pool;
    if (cert.level == Level::Integer) {
      pool = integer_generators(sig);
    } else {
      for (const auto& t : all_twist_generators(sig.crosscaps)) pool.push_back(DehnTwist{t});
    }
    std::erase(pool, cert.moves[pos]);
    if (pool.empty()) continue;
    cert.moves[pos] = pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))];
    if (verify_certificate(g.instance, cert).accepted)
      return fail("mutation " + std::to_string(mutations) + " accepted: position " + std::to_string(pos) + " -> " +
                  to_string(cert.moves[pos]));
    ++mutations;
    integer_level += cert.level == Level::Integer;
  }
  return {true, "50 mutations rejected (" + std::to_string(integer_level) + " integer-level, " +
                    std::to_string(50 - integer_level) + " mod-2)"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"mod-2 generation matches the exhaustive filter", mod2_generation},
      {"characteristic vector is fixed", characteristic_vector},
      {"kernel round trip", kernel_round_trip},
      {"generators are involutions", involutions},
      {"crosscap slides vanish mod 2", slides_vanish_mod2},
      {"closed decision", closed_decision},
      {"punctured round trip", punctured_round_trip},
      {"quotient lift", quotient_lift},
      {"certificate fuzzing", certificate_fuzz},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %zu: %s (%s)\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                o.detail.c_str());
    failed += !o.pass;
  }
  return failed;
}
