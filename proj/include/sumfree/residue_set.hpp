#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sumfree/prime.hpp"
#include "sumfree/rational.hpp"

namespace sumfree {

class ModularInterval;
class ResidueSet;
struct Dilation;

/// { d*a mod p : a in S }; see Dilation for the p | d case.
Dilation dilate(const ResidueSet& s, std::int64_t d);

/// Reduction image of the integers z with lo <= z <= hi (rational bounds).
/// Requires hi - lo < p so the image is injective.
ResidueSet rational_interval_set(Prime p, Rational lo, Rational hi);

/// Subset of Z/pZ stored as a dense bit vector, one bit per residue.
///
/// Immutable after construction; all set operations are free functions
/// returning fresh values, so instances can be shared across threads.
/// Cardinality is cached. Dense storage keeps sumsets and difference sets
/// exact: a sumset is |S1| shifted OR-passes over packed words, no FFT
/// rounding anywhere.
class ResidueSet {
 public:
  /// Empty set over Z/pZ.
  explicit ResidueSet(Prime p);

  /// Set holding the canonical reductions of `residues`. Arbitrary integer
  /// representatives are accepted; duplicates (after reduction) collapse.
  static ResidueSet from_residues(Prime p, std::span<const std::int64_t> residues);
  static ResidueSet from_residues(Prime p, std::initializer_list<std::int64_t> residues);

  /// All of Z/pZ.
  static ResidueSet full(Prime p);

  Prime modulus() const noexcept { return p_; }
  std::int64_t modulus_value() const noexcept { return p_.value(); }
  std::int64_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  /// Membership of an arbitrary integer representative.
  bool contains(std::int64_t x) const noexcept {
    std::int64_t r = mod_reduce(x, p_);
    return (words_[static_cast<std::size_t>(r >> 6)] >> (r & 63)) & 1u;
  }

  /// Sorted canonical residues in [0, p).
  std::vector<std::int64_t> residues() const;

  friend bool operator==(const ResidueSet& a, const ResidueSet& b);
  friend bool operator!=(const ResidueSet& a, const ResidueSet& b) { return !(a == b); }

  // -- set algebra ----------------------------------------------------------

  friend ResidueSet set_union(const ResidueSet& a, const ResidueSet& b);
  friend ResidueSet set_intersection(const ResidueSet& a, const ResidueSet& b);
  friend ResidueSet set_difference(const ResidueSet& a, const ResidueSet& b);
  friend bool is_subset(const ResidueSet& a, const ResidueSet& b);
  friend bool disjoint(const ResidueSet& a, const ResidueSet& b);

  /// { x + t mod p : x in S }.
  friend ResidueSet translated(const ResidueSet& s, std::int64_t t);
  /// { -x mod p : x in S }.
  friend ResidueSet negated(const ResidueSet& s);

  friend ResidueSet sumset(const ResidueSet& s1, const ResidueSet& s2);
  friend ResidueSet difference_set(const ResidueSet& s);
  friend bool is_sum_free(const ResidueSet& s);

 private:
  friend class ModularInterval;
  friend Dilation dilate(const ResidueSet& s, std::int64_t d);
  friend ResidueSet rational_interval_set(Prime p, Rational lo, Rational hi);

  void set_bit(std::int64_t r) noexcept;
  void recount() noexcept;

  Prime p_;
  std::vector<std::uint64_t> words_;  // bits [p, 64*words) stay zero
  std::int64_t count_ = 0;
};

/// Image of the integer interval [u, u+length] under reduction mod p.
/// `length` is the paper-style interval length: the set has length+1 elements.
class ModularInterval {
 public:
  ModularInterval(Prime p, std::int64_t u, std::int64_t length);

  Prime modulus() const noexcept { return p_; }
  std::int64_t start() const noexcept { return start_; }  // reduced to [0, p)
  std::int64_t length() const noexcept { return length_; }

  bool contains(std::int64_t x) const noexcept {
    return mod_reduce(x - start_, p_) <= length_;
  }

  ResidueSet to_set() const;

 private:
  Prime p_;
  std::int64_t start_;
  std::int64_t length_;
};

/// Integer preimage of a set known to lie in an interval shorter than p.
/// `integers` is sorted ascending and maps bijectively onto the residues.
struct LiftedSet {
  Prime modulus;
  std::vector<std::int64_t> integers;

  std::int64_t size() const noexcept { return static_cast<std::int64_t>(integers.size()); }
  bool empty() const noexcept { return integers.empty(); }
  std::int64_t min() const { return integers.front(); }
  std::int64_t max() const { return integers.back(); }
  /// max - min; the lemma-side interval length of the set.
  std::int64_t span() const { return integers.empty() ? 0 : integers.back() - integers.front(); }
};

/// Lifts S through the given interval window. Throws if S is not contained
/// in the interval or the interval wraps the whole group.
LiftedSet lift(const ResidueSet& s, const ModularInterval& interval);

/// Translates min to 0 and divides by the gcd g of the gaps.
/// Returns the normalized set (gap gcd 1) and g. Requires |L| >= 2.
std::pair<LiftedSet, std::int64_t> gcd_normalize(const LiftedSet& l);

/// Result of a dilation d * S. When p | d and S is nonempty the image
/// degenerates to {0}; that is reported through `degenerate` rather than an
/// error so the operation stays total. Callers certifying structure must
/// treat a degenerate dilation as an invalid witness.
struct Dilation {
  ResidueSet set;
  bool degenerate = false;
};

/// Convenience for unit dilations; throws if p | d.
ResidueSet dilate_unit(const ResidueSet& s, std::int64_t d);

}  // namespace sumfree
