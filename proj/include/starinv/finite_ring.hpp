#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "starinv/ring.hpp"

namespace starinv {

// A small *-ring whose carrier can be listed: ℤ/n with the identity
// involution, or 2x2 matrices over GF(p) with transpose.
//
// Elements are indices in [0, size()). For ℤ/n the index is the residue; for
// M₂(GF(p)) it is a00 + p·a01 + p²·a10 + p³·a11.
//
// Everything the order and inverse algorithms ask about (a†, canonical inner
// inverses, annihilators, idempotents, lp/rp) is tabulated once at
// construction, after the ring and involution axioms have been checked.
class FiniteStarRing {
 public:
  using Value = std::uint32_t;
  enum class Kind { zmod, m2gf };

  static constexpr std::size_t max_carrier = 10000;
  // Triple-quantified sweeps beyond this many tuples fall back to sampling.
  static constexpr std::size_t max_triples = 1000000;
  static constexpr std::uint64_t sample_seed = 0x5eed5eedULL;

  static FiniteStarRing zmod(std::uint32_t n);
  static FiniteStarRing m2gf(std::uint32_t p);
  // "z<n>" or "m2gf<p>"; throws Errc::unknown_ring.
  static FiniteStarRing from_id(std::string_view id);

  const std::string& id() const { return id_; }
  Kind kind() const { return kind_; }
  std::uint32_t modulus() const { return modulus_; }
  std::size_t size() const { return size_; }
  Value value_at(std::size_t i) const { return static_cast<Value>(i); }

  Value add(Value a, Value b) const;
  Value neg(Value a) const;
  Value mul(Value a, Value b) const {
    return mul_table_.empty() ? mul_raw(a, b) : mul_table_[a * size_ + b];
  }
  Value star(Value a) const;
  bool equal(Value a, Value b) const { return a == b; }
  Value one() const { return one_; }
  Value zero() const { return 0; }
  Value one_like(Value) const { return one_; }
  Value zero_like(Value) const { return 0; }

  std::optional<Value> mp_inverse(Value a) const { return dagger_[a]; }
  std::optional<Value> inner_inverse(Value a) const { return inner_[a]; }

  bool left_annihilator_leq(Value b, Value a) const {
    return left_ann_[b].is_subset_of(left_ann_[a]);
  }
  bool right_annihilator_leq(Value b, Value a) const {
    return right_ann_[b].is_subset_of(right_ann_[a]);
  }
  std::optional<Value> left_projection(Value a) const { return lp_[a]; }
  std::optional<Value> right_projection(Value a) const { return rp_[a]; }
  std::optional<Value> left_idempotent(Value a) const { return left_idem_[a]; }
  std::optional<Value> right_idempotent(Value a) const { return right_idem_[a]; }
  void check_unital(Value) const {}

  const std::vector<Value>& idempotents() const { return idempotents_; }
  const std::vector<Value>& projections() const { return projections_; }
  const boost::dynamic_bitset<>& left_annihilator(Value a) const { return left_ann_[a]; }
  const boost::dynamic_bitset<>& right_annihilator(Value a) const {
    return right_ann_[a];
  }

  // Every left annihilator is generated by a projection (so lp, rp exist).
  bool is_rickart_star() const { return rickart_star_; }
  // Every left and right annihilator is generated by an idempotent.
  bool is_rickart() const { return rickart_; }
  // How the construction-time axiom check ran.
  bool axioms_exhaustive() const { return axioms_exhaustive_; }
  std::size_t axiom_instances() const { return axiom_instances_; }

  std::string describe(Value a) const;
  std::string carrier_description() const;

  bool operator==(const FiniteStarRing& other) const {
    return kind_ == other.kind_ && modulus_ == other.modulus_;
  }

 private:
  FiniteStarRing(Kind kind, std::uint32_t modulus);

  struct M2 {
    std::uint32_t a00, a01, a10, a11;
  };
  M2 decode(Value v) const;
  Value encode(const M2& m) const;
  Value mul_raw(Value a, Value b) const;

  void check_axioms();
  void tabulate();

  Kind kind_;
  std::uint32_t modulus_;
  std::size_t size_;
  std::string id_;
  Value one_ = 0;

  std::vector<Value> mul_table_;
  std::vector<std::optional<Value>> dagger_;
  std::vector<std::optional<Value>> inner_;
  std::vector<boost::dynamic_bitset<>> left_ann_;
  std::vector<boost::dynamic_bitset<>> right_ann_;
  std::vector<Value> idempotents_;
  std::vector<Value> projections_;
  std::vector<std::optional<Value>> lp_, rp_, left_idem_, right_idem_;
  bool rickart_star_ = false;
  bool rickart_ = false;
  bool axioms_exhaustive_ = false;
  std::size_t axiom_instances_ = 0;
};

using FiniteElement = Element<FiniteStarRing>;

// Calls fn(i, j, k) for every triple in [0, n)³ when n³ ≤ cap, otherwise for
// `cap` triples drawn with a fixed seed. Returns true when exhaustive.
template <class Fn>
bool sweep_triples(std::size_t n, std::size_t cap, Fn&& fn) {
  const std::size_t total = n * n * n;
  if (total <= cap) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) fn(i, j, k);
    return true;
  }
  std::uint64_t state = FiniteStarRing::sample_seed;
  // splitmix64: deterministic across platforms, unlike std distributions.
  auto next = [&state]() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  for (std::size_t t = 0; t < cap; ++t) {
    fn(next() % n, next() % n, next() % n);
  }
  return false;
}

}  // namespace starinv
