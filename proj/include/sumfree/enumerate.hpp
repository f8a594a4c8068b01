#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "sumfree/residue_set.hpp"
#include "sumfree/structure.hpp"

namespace sumfree {

enum class EnumerationMode { kAll, kMaximal, kGreedyRandom };

const char* enumeration_mode_name(EnumerationMode m);
std::optional<EnumerationMode> enumeration_mode_from_name(const std::string& name);

struct EnumerationTask {
  Prime p;
  EnumerationMode mode = EnumerationMode::kAll;
  double min_density = 0.0;     // in [0, 1)
  std::int64_t budget = 1;      // instance count for greedy mode
  std::uint64_t seed = 0;
};

/// One generated sum-free set. `is_extremal` marks maximum cardinality
/// floor((p+1)/3); `seed` replays random instances.
struct InstanceRecord {
  ResidueSet set;
  std::int64_t n = 0;
  bool is_extremal = false;
  std::uint64_t seed = 0;
  std::optional<StructureCertificate> certificate;
};

/// Every sum-free subset of Z/pZ exactly once (the empty set included),
/// via depth-first growth over residues in ascending order; children that
/// would close a triple are pruned, so only sum-free nodes are ever visited.
/// Guarded to p <= 31.
void enumerate_all_sumfree(Prime p, const std::function<void(const InstanceRecord&)>& visit);

/// Same walk, emitting only sets with no sum-free proper superset.
void enumerate_maximal_sumfree(Prime p, const std::function<void(const InstanceRecord&)>& visit);

constexpr std::int64_t kEnumerationPrimeLimit = 31;

/// Seeded random sum-free instance with n >= min_density * p, or nullopt
/// once the attempt budget runs out (certain whenever the target exceeds
/// floor((p+1)/3) / p). Identical (p, min_density, seed) triples give
/// identical sets.
///
/// Growth is uniform random greedy first; densities beyond the reach of
/// plain greedy growth (about 0.2 p) come from thinning a random dilate of
/// the maximal interval and re-growing greedily with a randomized stop, so
/// the dense instances vary in cardinality and gap pattern.
std::optional<InstanceRecord> greedy_random_sumfree(Prime p, double min_density,
                                                    std::uint64_t seed);

/// d * [u, 2u-1] for u = floor((p+1)/3): the maximum-size sum-free set and
/// its dilates. Throws when p | d.
InstanceRecord extremal_interval(Prime p, std::int64_t d);

}  // namespace sumfree
