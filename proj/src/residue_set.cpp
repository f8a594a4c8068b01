#include "sumfree/residue_set.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace sumfree {

namespace {

std::size_t words_for(std::int64_t p) {
  return static_cast<std::size_t>((p + 63) >> 6);
}

// dst |= src rotated left by k within a p-bit cyclic register.
// Rotation maps bit i of src to bit (i + k) mod p.
void or_rotated(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src,
                std::int64_t k, std::int64_t p) {
  const std::size_t nw = dst.size();
  const auto emit = [&](std::int64_t shift) {
    // OR src << shift (plain, non-cyclic) into dst, dropping bits >= p later.
    const std::size_t wshift = static_cast<std::size_t>(shift >> 6);
    const unsigned bshift = static_cast<unsigned>(shift & 63);
    for (std::size_t i = nw; i-- > wshift;) {
      std::uint64_t w = src[i - wshift] << bshift;
      if (bshift != 0 && i > wshift) {
        w |= src[i - wshift - 1] >> (64 - bshift);
      }
      dst[i] |= w;
    }
  };
  const auto emit_right = [&](std::int64_t shift) {
    // OR src >> shift into dst.
    const std::size_t wshift = static_cast<std::size_t>(shift >> 6);
    const unsigned bshift = static_cast<unsigned>(shift & 63);
    for (std::size_t i = 0; i + wshift < nw; ++i) {
      std::uint64_t w = src[i + wshift] >> bshift;
      if (bshift != 0 && i + wshift + 1 < nw) {
        w |= src[i + wshift + 1] << (64 - bshift);
      }
      dst[i] |= w;
    }
  };
  if (k == 0) {
    for (std::size_t i = 0; i < nw; ++i) dst[i] |= src[i];
  } else {
    emit(k);        // bits i with i + k < p land directly
    emit_right(p - k);  // bits i with i + k >= p wrap to i + k - p
  }
  // Clear any spill above bit p-1.
  const unsigned tail = static_cast<unsigned>(p & 63);
  if (tail != 0) dst[nw - 1] &= (~std::uint64_t{0}) >> (64 - tail);
}

}  // namespace

ResidueSet::ResidueSet(Prime p) : p_(p), words_(words_for(p.value()), 0) {}

void ResidueSet::set_bit(std::int64_t r) noexcept {
  words_[static_cast<std::size_t>(r >> 6)] |= std::uint64_t{1} << (r & 63);
}

void ResidueSet::recount() noexcept {
  std::int64_t c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  count_ = c;
}

ResidueSet ResidueSet::from_residues(Prime p, std::span<const std::int64_t> residues) {
  ResidueSet s(p);
  for (std::int64_t x : residues) s.set_bit(mod_reduce(x, p));
  s.recount();
  return s;
}

ResidueSet ResidueSet::from_residues(Prime p, std::initializer_list<std::int64_t> residues) {
  return from_residues(p, std::span<const std::int64_t>(residues.begin(), residues.size()));
}

ResidueSet ResidueSet::full(Prime p) {
  ResidueSet s(p);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  const unsigned tail = static_cast<unsigned>(p.value() & 63);
  if (tail != 0) s.words_.back() &= (~std::uint64_t{0}) >> (64 - tail);
  s.count_ = p.value();
  return s;
}

std::vector<std::int64_t> ResidueSet::residues() const {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(count_));
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w != 0) {
      out.push_back(static_cast<std::int64_t>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
      w &= w - 1;
    }
  }
  return out;
}

bool operator==(const ResidueSet& a, const ResidueSet& b) {
  return a.p_ == b.p_ && a.words_ == b.words_;
}

namespace {
void require_same_modulus(const ResidueSet& a, const ResidueSet& b) {
  if (a.modulus() != b.modulus()) {
    throw std::invalid_argument("ResidueSet: modulus mismatch");
  }
}
}  // namespace

ResidueSet set_union(const ResidueSet& a, const ResidueSet& b) {
  require_same_modulus(a, b);
  ResidueSet r(a.p_);
  for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] = a.words_[i] | b.words_[i];
  r.recount();
  return r;
}

ResidueSet set_intersection(const ResidueSet& a, const ResidueSet& b) {
  require_same_modulus(a, b);
  ResidueSet r(a.p_);
  for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] = a.words_[i] & b.words_[i];
  r.recount();
  return r;
}

ResidueSet set_difference(const ResidueSet& a, const ResidueSet& b) {
  require_same_modulus(a, b);
  ResidueSet r(a.p_);
  for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] = a.words_[i] & ~b.words_[i];
  r.recount();
  return r;
}

bool is_subset(const ResidueSet& a, const ResidueSet& b) {
  require_same_modulus(a, b);
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    if ((a.words_[i] & ~b.words_[i]) != 0) return false;
  }
  return true;
}

bool disjoint(const ResidueSet& a, const ResidueSet& b) {
  require_same_modulus(a, b);
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    if ((a.words_[i] & b.words_[i]) != 0) return false;
  }
  return true;
}

ResidueSet translated(const ResidueSet& s, std::int64_t t) {
  ResidueSet r(s.p_);
  or_rotated(r.words_, s.words_, mod_reduce(t, s.p_), s.p_.value());
  r.count_ = s.count_;
  return r;
}

ResidueSet negated(const ResidueSet& s) {
  ResidueSet r(s.p_);
  const std::int64_t p = s.p_.value();
  for (std::int64_t a : s.residues()) r.set_bit(a == 0 ? 0 : p - a);
  r.count_ = s.count_;
  return r;
}

ResidueSet sumset(const ResidueSet& s1, const ResidueSet& s2) {
  require_same_modulus(s1, s2);
  ResidueSet r(s1.p_);
  if (s1.empty() || s2.empty()) return r;
  // Shift the larger operand by each element of the smaller one.
  const ResidueSet& small = s1.size() <= s2.size() ? s1 : s2;
  const ResidueSet& large = s1.size() <= s2.size() ? s2 : s1;
  for (std::int64_t a : small.residues()) {
    or_rotated(r.words_, large.words_, a, r.p_.value());
  }
  r.recount();
  return r;
}

ResidueSet difference_set(const ResidueSet& s) {
  ResidueSet r(s.p_);
  if (s.empty()) return r;
  const std::int64_t p = s.p_.value();
  for (std::int64_t a : s.residues()) {
    or_rotated(r.words_, s.words_, a == 0 ? 0 : p - a, p);  // S - a
  }
  r.recount();
  return r;
}

bool is_sum_free(const ResidueSet& s) {
  // Direct scan: a in S closes a triple iff (S + a) meets S. This is a
  // separate code path from sumset-then-intersect; tests cross-check the two.
  if (s.empty()) return true;
  if (s.contains(0)) return false;
  std::vector<std::uint64_t> shifted(s.words_.size());
  for (std::int64_t a : s.residues()) {
    std::fill(shifted.begin(), shifted.end(), 0);
    or_rotated(shifted, s.words_, a, s.p_.value());
    for (std::size_t i = 0; i < shifted.size(); ++i) {
      if ((shifted[i] & s.words_[i]) != 0) return false;
    }
  }
  return true;
}

ModularInterval::ModularInterval(Prime p, std::int64_t u, std::int64_t length)
    : p_(p), start_(mod_reduce(u, p)), length_(length) {
  if (length < 0 || length >= p.value()) {
    throw std::invalid_argument("ModularInterval: length must lie in [0, p)");
  }
}

ResidueSet ModularInterval::to_set() const {
  ResidueSet s(p_);
  const std::int64_t p = p_.value();
  std::int64_t r = start_;
  for (std::int64_t i = 0; i <= length_; ++i) {
    s.set_bit(r);
    if (++r == p) r = 0;
  }
  s.recount();
  return s;
}

ResidueSet rational_interval_set(Prime p, Rational lo, Rational hi) {
  ResidueSet s(p);
  if (hi < lo) return s;
  const std::int64_t a = lo.ceil();
  const std::int64_t b = hi.floor();
  if (b - a + 1 > p.value()) {
    throw std::invalid_argument("rational_interval_set: interval wraps the whole group");
  }
  for (std::int64_t z = a; z <= b; ++z) s.set_bit(mod_reduce(z, p));
  s.recount();
  return s;
}

LiftedSet lift(const ResidueSet& s, const ModularInterval& interval) {
  if (s.modulus() != interval.modulus()) {
    throw std::invalid_argument("lift: modulus mismatch");
  }
  LiftedSet l{s.modulus(), {}};
  l.integers.reserve(static_cast<std::size_t>(s.size()));
  const std::int64_t u = interval.start();
  for (std::int64_t t = u; t <= u + interval.length(); ++t) {
    if (s.contains(t)) l.integers.push_back(t);
  }
  if (static_cast<std::int64_t>(l.integers.size()) != s.size()) {
    throw std::invalid_argument("lift: set is not contained in the interval");
  }
  return l;
}

std::pair<LiftedSet, std::int64_t> gcd_normalize(const LiftedSet& l) {
  if (l.size() < 2) {
    throw std::invalid_argument("gcd_normalize: need at least two elements");
  }
  std::int64_t g = 0;
  for (std::size_t i = 1; i < l.integers.size(); ++i) {
    g = std::gcd(g, l.integers[i] - l.integers[i - 1]);
  }
  LiftedSet out{l.modulus, {}};
  out.integers.reserve(l.integers.size());
  const std::int64_t base = l.integers.front();
  for (std::int64_t x : l.integers) out.integers.push_back((x - base) / g);
  return {out, g};
}

Dilation dilate(const ResidueSet& s, std::int64_t d) {
  const std::int64_t dr = mod_reduce(d, s.modulus());
  if (dr == 0) {
    ResidueSet degenerate_image(s.modulus());
    if (!s.empty()) degenerate_image = ResidueSet::from_residues(s.modulus(), {0});
    return {degenerate_image, !s.empty()};
  }
  ResidueSet r(s.modulus());
  const std::int64_t p = s.modulus_value();
  for (std::int64_t a : s.residues()) r.set_bit((dr * a) % p);
  r.count_ = s.count_;
  return {r, false};
}

ResidueSet dilate_unit(const ResidueSet& s, std::int64_t d) {
  if (mod_reduce(d, s.modulus()) == 0) {
    throw std::invalid_argument("dilate_unit: factor divisible by modulus");
  }
  return dilate(s, d).set;
}

}  // namespace sumfree
