#include "sumfree/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace sumfree {

const char* enumeration_mode_name(EnumerationMode m) {
  switch (m) {
    case EnumerationMode::kAll: return "all";
    case EnumerationMode::kMaximal: return "maximal";
    case EnumerationMode::kGreedyRandom: return "greedy-random";
  }
  return "unknown";
}

std::optional<EnumerationMode> enumeration_mode_from_name(const std::string& name) {
  for (EnumerationMode m :
       {EnumerationMode::kAll, EnumerationMode::kMaximal, EnumerationMode::kGreedyRandom}) {
    if (name == enumeration_mode_name(m)) return m;
  }
  return std::nullopt;
}

namespace {

std::int64_t extremal_cardinality(std::int64_t p) { return (p + 1) / 3; }

// Incremental sum-free growth state over small dense masks. Tracks the
// sumset, difference set and doubles so candidate tests are O(1).
struct GrowthMasks {
  std::int64_t p;
  std::vector<bool> in_set, in_sumset, in_diffset;
  std::vector<std::int64_t> elems;

  explicit GrowthMasks(std::int64_t prime)
      : p(prime), in_set(static_cast<std::size_t>(prime), false),
        in_sumset(static_cast<std::size_t>(prime), false),
        in_diffset(static_cast<std::size_t>(prime), false) {}

  // r joins without closing a triple iff it avoids S+S, S-S, is not a
  // half of an element, and is nonzero.
  bool addable(std::int64_t r) const {
    if (r == 0 || in_set[static_cast<std::size_t>(r)]) return false;
    if (in_sumset[static_cast<std::size_t>(r)] || in_diffset[static_cast<std::size_t>(r)]) return false;
    return !in_set[static_cast<std::size_t>((2 * r) % p)];
  }

  void add(std::int64_t r) {
    for (std::int64_t s : elems) {
      in_sumset[static_cast<std::size_t>((s + r) % p)] = true;
      in_diffset[static_cast<std::size_t>((s - r + p) % p)] = true;
      in_diffset[static_cast<std::size_t>((r - s + p) % p)] = true;
    }
    in_sumset[static_cast<std::size_t>((2 * r) % p)] = true;
    in_diffset[0] = true;
    in_set[static_cast<std::size_t>(r)] = true;
    elems.push_back(r);
  }

  ResidueSet to_set(Prime prime) const { return ResidueSet::from_residues(prime, elems); }
};

struct DfsContext {
  Prime p;
  const std::function<void(const InstanceRecord&)>& visit;
  bool maximal_only;
  std::vector<std::int64_t> stack;
};

void emit(DfsContext& ctx, const GrowthMasks& masks) {
  InstanceRecord rec{masks.to_set(ctx.p), static_cast<std::int64_t>(masks.elems.size()), false, 0,
                     std::nullopt};
  rec.is_extremal = rec.n == extremal_cardinality(ctx.p.value());
  ctx.visit(rec);
}

void dfs(DfsContext& ctx, GrowthMasks& masks, std::int64_t next) {
  const std::int64_t p = ctx.p.value();
  if (ctx.maximal_only) {
    bool extendable = false;
    for (std::int64_t r = 1; r < p && !extendable; ++r) extendable = masks.addable(r);
    if (!extendable) emit(ctx, masks);
  } else {
    emit(ctx, masks);
  }
  for (std::int64_t r = next; r < p; ++r) {
    if (!masks.addable(r)) continue;
    GrowthMasks child = masks;  // small p: copying beats undo bookkeeping
    child.add(r);
    dfs(ctx, child, r + 1);
  }
}

void enumerate_impl(Prime p, const std::function<void(const InstanceRecord&)>& visit,
                    bool maximal_only) {
  if (p.value() > kEnumerationPrimeLimit) {
    throw std::invalid_argument("enumerate: p exceeds the exhaustive budget guard " +
                                std::to_string(kEnumerationPrimeLimit));
  }
  DfsContext ctx{p, visit, maximal_only, {}};
  GrowthMasks masks(p.value());
  dfs(ctx, masks, 1);
}

// Deterministic bounded draw; modulo bias is irrelevant at these ranges and
// keeping the raw stream fixed matters more than uniformity in the last ulp.
std::int64_t draw(std::mt19937_64& rng, std::int64_t bound) {
  return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(bound));
}

double draw_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform random greedy growth until the stop target or a stall.
void grow_random(GrowthMasks& masks, std::mt19937_64& rng, std::int64_t stop_target,
                 std::int64_t stall_cap) {
  std::int64_t stall = 0;
  while (stall < stall_cap && static_cast<std::int64_t>(masks.elems.size()) < stop_target) {
    const std::int64_t r = 1 + draw(rng, masks.p - 1);
    if (masks.addable(r)) {
      masks.add(r);
      stall = 0;
    } else {
      ++stall;
    }
  }
}

}  // namespace

void enumerate_all_sumfree(Prime p, const std::function<void(const InstanceRecord&)>& visit) {
  enumerate_impl(p, visit, false);
}

void enumerate_maximal_sumfree(Prime p, const std::function<void(const InstanceRecord&)>& visit) {
  enumerate_impl(p, visit, true);
}

std::optional<InstanceRecord> greedy_random_sumfree(Prime p, double min_density,
                                                    std::uint64_t seed) {
  const std::int64_t pv = p.value();
  const std::int64_t cap = extremal_cardinality(pv);
  const std::int64_t target =
      std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(min_density * static_cast<double>(pv))));
  std::mt19937_64 rng(seed);

  if (target > cap) return std::nullopt;  // no sum-free set is that large

  constexpr int kPlainRestarts = 8;
  constexpr int kSeededRestarts = 56;

  const auto finish = [&](const GrowthMasks& masks) -> std::optional<InstanceRecord> {
    InstanceRecord rec{masks.to_set(p), static_cast<std::int64_t>(masks.elems.size()), false, seed,
                       std::nullopt};
    rec.is_extremal = rec.n == cap;
    return rec;
  };

  // Plain uniform greedy first; enough for densities up to roughly 0.1-0.15.
  for (int attempt = 0; attempt < kPlainRestarts; ++attempt) {
    const std::int64_t stop = target + draw(rng, cap - target + 1);
    GrowthMasks masks(pv);
    grow_random(masks, rng, stop, 4 * pv);
    if (static_cast<std::int64_t>(masks.elems.size()) >= target) return finish(masks);
  }

  // Dense targets: thin a random dilate of the maximal interval and re-grow.
  // Plain greedy growth stalls far below 0.3 p, while instances above the
  // structure threshold are exactly dense interval-dilate subsets, so this
  // is the regime the generator has to cover.
  const std::int64_t u = extremal_cardinality(pv);
  for (int attempt = 0; attempt < kSeededRestarts; ++attempt) {
    const std::int64_t d = 1 + draw(rng, pv - 1);
    const double keep = 0.75 + 0.25 * draw_unit(rng);
    GrowthMasks masks(pv);
    for (std::int64_t x = u; x <= 2 * u - 1; ++x) {
      if (draw_unit(rng) < keep) {
        const std::int64_t r = (d % pv) * (x % pv) % pv;
        if (masks.addable(r)) masks.add(r);
      }
    }
    const std::int64_t stop = target + draw(rng, cap - target + 1);
    grow_random(masks, rng, stop, 4 * pv);
    if (static_cast<std::int64_t>(masks.elems.size()) >= target) return finish(masks);
  }
  return std::nullopt;
}

InstanceRecord extremal_interval(Prime p, std::int64_t d) {
  if (mod_reduce(d, p) == 0) {
    throw std::invalid_argument("extremal_interval: dilation factor divisible by p");
  }
  const std::int64_t u = extremal_cardinality(p.value());
  const ResidueSet base = ModularInterval(p, u, u - 1).to_set();  // [u, 2u-1]
  InstanceRecord rec{dilate_unit(base, d), u, true, 0, std::nullopt};
  return rec;
}

}  // namespace sumfree
