#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sumfree/residue_set.hpp"

namespace sumfree {

/// Route the recovery pipeline took to its witness.
///   kEvenGap   — the dense window sits on a difference-2 progression; the
///                witness composes the halving dilation.
///   kShortSpan — the window span is below 3m/2 - 1, so the symmetric
///                difference interval clears the origin directly.
///   kFullScan  — neither shortcut verified; the witness (if any) comes from
///                the exhaustive dilation scan.
enum class RecoveryBranch { kEvenGap, kShortSpan, kFullScan };

const char* branch_name(RecoveryBranch b);

struct TraceEvent {
  std::string name;
  std::int64_t value = 0;
};

struct AssertionRecord {
  std::string name;
  bool holds = false;
  std::string detail;
};

/// Witness that A lies in d * [n, p-n] mod p, with the pipeline's working
/// trace. `contained` is always re-derived by direct membership, never
/// trusted from the trace. `theorem_scale_failure` marks instances where no
/// dilation works at all (possible at small p).
struct StructureCertificate {
  std::int64_t d = 1;
  std::int64_t n = 0;
  bool contained = false;
  RecoveryBranch branch = RecoveryBranch::kFullScan;
  std::vector<TraceEvent> trace;
  std::vector<AssertionRecord> assertions;
  bool theorem_scale_failure = false;
};

/// Working data threaded through the pipeline: the current dilate of the
/// input, the aligned frequency, the best half-interval window, its lift,
/// and the quarter bands near the origin.
struct PipelineState {
  explicit PipelineState(ResidueSet w);

  ResidueSet working;          // dilation * input
  std::int64_t dilation = 1;   // composed dilation factor
  std::int64_t z0 = 1;
  std::int64_t u0 = 0;
  std::int64_t half_count = 0;  // m, elements in the best half-interval
  std::int64_t span = 0;        // l, span of the lifted window
  ResidueSet half_part;         // working ∩ [u0, u0 + p/2)
  LiftedSet window_lift;
  // Quarter bands, filled by the partition step:
  ResidueSet inner_pos;  // working ∩ [m/2, l-m+1]
  ResidueSet inner_neg;  // working ∩ [-(l-m+1), -m/2]
  ResidueSet outer_pos;  // working ∩ [m, p/4)
  ResidueSet outer_neg;  // working ∩ (-p/4, -m]
  std::int64_t min_abs = 0;  // smallest |z| with z reducing into the set
  bool negated = false;
  bool partitioned = false;
};

/// Steps 1-2: align the largest coefficient to frequency 1 and pick the
/// fullest half-interval. Throws on the density / sum-free preconditions.
PipelineState init_pipeline(const ResidueSet& a, double alpha0 = 0.318);

/// Quarter-band split as defined above, plus min_abs. No symmetry fixup.
PipelineState partition_quarter_bands_raw(PipelineState state);

/// Same, but enforces |inner_pos| >= |inner_neg| by replacing the working
/// set with its negation (a dilation by p-1) and recomputing when needed.
PipelineState partition_quarter_bands(PipelineState state);

/// Excluded zone 2 * inner_pos + [-(2m-l-2), 2m-l-2]. Requires the
/// partition step, span <= 2m-4 and a nonempty inner band.
ResidueSet compute_excluded_zone(const PipelineState& state);

/// All d in [1, p-1] with A inside d * [n, p-n], by direct membership.
/// An empty result at n > 0 means no dilation witness exists.
std::vector<std::int64_t> exhaustive_d_scan(const ResidueSet& a);

/// Recomputes containment from scratch: every element of A must map into
/// [n, p-n] under the inverse dilation. Throws when p | d. The certificate
/// trace is advisory and ignored.
bool check_certificate(const ResidueSet& a, const StructureCertificate& cert);

/// Full pipeline: align, window, branch, verify; falls back to the
/// exhaustive scan when no shortcut verifies. Every returned `contained` is
/// confirmed by check_certificate. Requires a sum-free input with
/// |A| > 0.318 p.
StructureCertificate recover_structure(const ResidueSet& a);

}  // namespace sumfree
