#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "boundary_factor.hpp"
#include "kernel_factor.hpp"
#include "mod2_factor.hpp"

namespace crosscap {

struct Instance {
  SurfaceSignature signature;
  IntMatrix matrix;
};

enum class Level { Mod2, Integer };
enum class Completeness { FullInteger, Mod2Only };
enum class Reason { None, PairingNotPreserved };

const char* to_string(Level level);
const char* to_string(Completeness completeness);
const char* to_string(Reason reason);

struct MoveCounts {
  std::size_t dehn_twists = 0;
  std::size_t crosscap_slides = 0;
  std::size_t boundary_slides = 0;
  std::size_t puncture_perms = 0;

  std::size_t total() const noexcept { return dehn_twists + crosscap_slides + boundary_slides + puncture_perms; }
  friend bool operator==(const MoveCounts&, const MoveCounts&) = default;
};

MoveCounts count_moves(const MoveWord& word);

struct CertificateMeta {
  MoveCounts counts;
  // sum |c_ij| of the boundary residual once the punctures are in order
  std::optional<Integer> boundary_complexity;
  Trace kernel_trace;
  Trace boundary_trace;
};

// The moves multiply left to right, the last acting first. At integer level
// their product is the instance matrix (modulo r for punctured surfaces); at
// mod-2 level only the mod-2 images are claimed to agree.
struct Certificate {
  Level level = Level::Integer;
  MoveWord moves;
  CertificateMeta meta;
};

struct Decision {
  bool realizable = false;
  Reason reason = Reason::None;
  std::optional<Certificate> certificate;
  std::optional<Completeness> completeness;  // set when realizable
};

struct DecideOptions {
  KernelOptions kernel;
};

// Validation failures throw; "not realizable" is a Decision.
Decision decide_closed(const Instance& inst, const DecideOptions& options = {});
Decision decide_punctured(const Instance& inst, const DecideOptions& options = {});
Decision decide(const Instance& inst, const DecideOptions& options = {});

struct Verdict {
  bool accepted = false;
  std::string reason;  // empty when accepted
};

// Never throws on bad input; every failure is a rejection.
Verdict verify_certificate(const Instance& inst, const Certificate& cert);

struct GenerateOptions {
  SurfaceSignature signature;
  std::size_t length = 0;
  std::uint64_t seed = 0;
  bool corrupt = false;
  bool permute_crosscaps = false;  // follow the word by a random crosscap permutation
};

struct GeneratedInstance {
  Instance instance;
  MoveWord word;                     // sampled generator word
  std::vector<int> crosscap_perm;    // identity unless permute_crosscaps
  bool corrupted = false;
};

GeneratedInstance generate_instance(const GenerateOptions& options);

}  // namespace crosscap
