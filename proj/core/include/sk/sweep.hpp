#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sk/families.hpp"

namespace sk {

enum class SweepExceptionKind { ConjectureViolation, RealizabilityAnomaly };

// One failure of the biconditional "width < 2p <=> family member", recorded
// for the orbit representative min{k, p-k, k^{-1}, p-k^{-1}} so that the
// exception lists do not depend on the dedup policy.
struct SweepException {
  std::int64_t p = 0;
  std::int64_t k = 0;
  std::int64_t q = 0;  // k^2 mod p
  std::int64_t width = 0;
  SweepExceptionKind kind = SweepExceptionKind::ConjectureViolation;
  std::vector<FamilyMatch> families;

  friend bool operator==(const SweepException& a, const SweepException& b) {
    return a.p == b.p && a.k == b.k && a.q == b.q && a.width == b.width && a.kind == b.kind;
  }
};

std::string to_json_line(const SweepException& e);

struct SweepParams {
  std::int64_t max_p = 2;
  bool dedup = true;
  bool tange_negative_j = true;

  friend bool operator==(const SweepParams&, const SweepParams&) = default;
};

struct SweepControls {
  int workers = 1;
  std::string checkpoint_path;        // empty: no checkpointing
  std::int64_t checkpoint_every = 512;  // write after this many newly folded p
  bool progress = false;              // rate/ETA lines on stderr
  std::int64_t stop_after_p = -1;     // stop once the folded prefix reaches this (test hook)
  const std::atomic<bool>* cancel = nullptr;  // external stop request (e.g. SIGINT)
};

struct SweepReport {
  SweepParams params;
  std::int64_t last_completed_p = 1;  // == params.max_p iff the run finished
  std::uint64_t knots_checked = 0;    // (p,k) pairs processed under the dedup policy
  std::uint64_t lspace_count = 0;     // processed pairs with width < 2p
  std::vector<SweepException> conjecture_violations;
  std::vector<SweepException> realizability_anomalies;
  double elapsed_seconds = 0;  // accumulated over resumes; not part of determinism
  int worker_count = 1;

  bool complete() const { return last_completed_p >= params.max_p; }
  bool clean() const {
    return conjecture_violations.empty() && realizability_anomalies.empty();
  }
  // Everything except elapsed_seconds / worker_count, which depend on the
  // execution rather than on the mathematics.
  friend bool deterministically_equal(const SweepReport& a, const SweepReport& b) {
    return a.params == b.params && a.last_completed_p == b.last_completed_p &&
           a.knots_checked == b.knots_checked && a.lspace_count == b.lspace_count &&
           a.conjecture_violations == b.conjecture_violations &&
           a.realizability_anomalies == b.realizability_anomalies;
  }
};

std::string to_json(const SweepReport& report);

// Exhaustively checks the biconditional for every p in [2, max_p] and every
// k in [1,p-1] with gcd(k,p) = 1 (one orbit representative per knot when
// dedup is on), q = k^2 mod p. Throws ResourceLimit when max_p exceeds the
// word budget.
SweepReport verify_conjecture(const SweepParams& params, const SweepControls& controls = {});

// Continues a checkpointed run. Throws CheckpointCorrupt on parse/shape
// problems and ParameterMismatch when `expected` disagrees with the stored
// parameters. A checkpoint of a finished run returns its report unchanged.
SweepReport resume(const std::string& checkpoint_path, const SweepControls& controls = {},
                   const std::optional<SweepParams>& expected = std::nullopt);

// Parameters stored in a checkpoint file; throws CheckpointCorrupt.
SweepParams checkpoint_params(const std::string& checkpoint_path);

// Inner-loop step estimate (sum of p over processed knots); the CLI uses it
// to print a cost warning before large runs.
double estimate_sweep_ops(std::int64_t max_p, bool dedup);

}  // namespace sk
