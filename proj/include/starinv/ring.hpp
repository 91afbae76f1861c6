#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "starinv/error.hpp"

namespace starinv {

// A unital ring with involution, seen as a context object that owns the
// arithmetic; values are plain data (`R::Value`).
//
// Besides ring arithmetic every backend answers a handful of structural
// questions that the generic algorithms need and that each backend decides
// in its own way (rank arithmetic for matrices, table scans for finite rings):
//
//   mp_inverse(a)            Moore-Penrose inverse, if any
//   inner_inverse(a)         a canonical {1}-inverse (a† preferred), if any
//   left_annihilator_leq(b,a)    °b ⊆ °a   where °x = {t : tx = 0}
//   right_annihilator_leq(b,a)   b° ⊆ a°   where x° = {t : xt = 0}
//   left_projection(a)       the projection e with °e = °a, if any
//   left_idempotent(a)       lp(a) when it exists, else a canonical idempotent
//                            e with °e = °a, if any
//   check_unital(a)          throws unless a lives in a unital ring
//
// `one_like` / `zero_like` produce the identity / zero that multiplies the
// given value (matrix rings are "all matrices over a field", so the identity
// depends on the operand's size).
template <class R>
concept StarRing = std::equality_comparable<R> &&
    requires(const R& r, const typename R::Value& a, const typename R::Value& b) {
      { r.add(a, b) } -> std::convertible_to<typename R::Value>;
      { r.neg(a) } -> std::convertible_to<typename R::Value>;
      { r.mul(a, b) } -> std::convertible_to<typename R::Value>;
      { r.star(a) } -> std::convertible_to<typename R::Value>;
      { r.equal(a, b) } -> std::same_as<bool>;
      { r.one_like(a) } -> std::convertible_to<typename R::Value>;
      { r.zero_like(a) } -> std::convertible_to<typename R::Value>;
      { r.mp_inverse(a) } -> std::same_as<std::optional<typename R::Value>>;
      { r.inner_inverse(a) } -> std::same_as<std::optional<typename R::Value>>;
      { r.left_annihilator_leq(b, a) } -> std::same_as<bool>;
      { r.right_annihilator_leq(b, a) } -> std::same_as<bool>;
      { r.left_projection(a) } -> std::same_as<std::optional<typename R::Value>>;
      { r.right_projection(a) } -> std::same_as<std::optional<typename R::Value>>;
      { r.left_idempotent(a) } -> std::same_as<std::optional<typename R::Value>>;
      { r.right_idempotent(a) } -> std::same_as<std::optional<typename R::Value>>;
      r.check_unital(a);
      { r.describe(a) } -> std::convertible_to<std::string>;
    };

// Finite carriers whose elements can be listed; enables exhaustive decision
// procedures.
template <class R>
concept Enumerable = StarRing<R> && requires(const R& r, std::size_t i) {
  { r.size() } -> std::convertible_to<std::size_t>;
  { r.value_at(i) } -> std::convertible_to<typename R::Value>;
};

// Backends with a rank-subtractivity test for the minus order.
template <class R>
concept RankDecidable = StarRing<R> &&
    requires(const R& r, const typename R::Value& a, const typename R::Value& b) {
      { r.rank_subtractive(a, b) } -> std::same_as<bool>;
    };

// A ring element together with a handle to its ring. Arithmetic between
// elements of different rings raises Errc::ring_mismatch. The ring object
// must outlive every element that refers to it.
template <StarRing R>
class Element {
 public:
  using Ring = R;
  using Value = typename R::Value;

  Element(const R& ring, Value value) : ring_(&ring), value_(std::move(value)) {}

  const R& ring() const { return *ring_; }
  const Value& value() const { return value_; }

  Element with(Value v) const { return Element(*ring_, std::move(v)); }

  friend Element operator+(const Element& a, const Element& b) {
    a.require_same_ring(b);
    return a.with(a.ring_->add(a.value_, b.value_));
  }
  friend Element operator-(const Element& a) {
    return a.with(a.ring_->neg(a.value_));
  }
  friend Element operator-(const Element& a, const Element& b) {
    a.require_same_ring(b);
    return a.with(a.ring_->add(a.value_, a.ring_->neg(b.value_)));
  }
  friend Element operator*(const Element& a, const Element& b) {
    a.require_same_ring(b);
    return a.with(a.ring_->mul(a.value_, b.value_));
  }
  friend bool operator==(const Element& a, const Element& b) {
    a.require_same_ring(b);
    return a.ring_->equal(a.value_, b.value_);
  }

  bool same_ring(const Element& other) const {
    return ring_ == other.ring_ || *ring_ == *other.ring_;
  }

  std::string str() const { return ring_->describe(value_); }

 private:
  void require_same_ring(const Element& other) const {
    if (!same_ring(other)) {
      throw Error(Errc::ring_mismatch, "operands belong to different rings: " +
                                           str() + " and " + other.str());
    }
  }

  const R* ring_;
  Value value_;
};

template <StarRing R>
Element<R> star(const Element<R>& x) {
  return x.with(x.ring().star(x.value()));
}

// Identity / zero acting on x (for matrices: sized by x's row count).
template <StarRing R>
Element<R> unit(const Element<R>& x) {
  return x.with(x.ring().one_like(x.value()));
}

template <StarRing R>
Element<R> zero(const Element<R>& x) {
  return x.with(x.ring().zero_like(x.value()));
}

template <StarRing R>
Element<R> one_minus(const Element<R>& x) {
  return unit(x) - x;
}

template <StarRing R>
bool is_zero(const Element<R>& x) {
  return x == zero(x);
}

template <StarRing R>
bool is_idempotent(const Element<R>& x) {
  return x * x == x;
}

template <StarRing R>
bool is_projection(const Element<R>& x) {
  return is_idempotent(x) && star(x) == x;
}

// °b ⊆ °a
template <StarRing R>
bool left_annihilator_leq(const Element<R>& b, const Element<R>& a) {
  if (!a.same_ring(b)) throw Error(Errc::ring_mismatch, "annihilator comparison");
  return a.ring().left_annihilator_leq(b.value(), a.value());
}

// b° ⊆ a°
template <StarRing R>
bool right_annihilator_leq(const Element<R>& b, const Element<R>& a) {
  if (!a.same_ring(b)) throw Error(Errc::ring_mismatch, "annihilator comparison");
  return a.ring().right_annihilator_leq(b.value(), a.value());
}

// The opposite ring: same carrier, addition and involution, multiplication
// reversed (a ·_L b = b·a). It is a view over a base ring; element values are
// shared, never copied or transformed.
//
// Annihilators swap sides under the reversal, so do LP/RP and lp/rp.
template <StarRing R>
class OppositeRing {
 public:
  using Value = typename R::Value;
  using Base = R;

  explicit OppositeRing(const R& base) : base_(&base) {}

  const R& base_ring() const { return *base_; }

  Value add(const Value& a, const Value& b) const { return base_->add(a, b); }
  Value neg(const Value& a) const { return base_->neg(a); }
  Value mul(const Value& a, const Value& b) const { return base_->mul(b, a); }
  Value star(const Value& a) const { return base_->star(a); }
  bool equal(const Value& a, const Value& b) const { return base_->equal(a, b); }
  Value one_like(const Value& a) const { return base_->one_like(a); }
  Value zero_like(const Value& a) const { return base_->zero_like(a); }

  // a† and a{1} are unchanged by reversing multiplication.
  std::optional<Value> mp_inverse(const Value& a) const { return base_->mp_inverse(a); }
  std::optional<Value> inner_inverse(const Value& a) const {
    return base_->inner_inverse(a);
  }

  bool left_annihilator_leq(const Value& b, const Value& a) const {
    return base_->right_annihilator_leq(b, a);
  }
  bool right_annihilator_leq(const Value& b, const Value& a) const {
    return base_->left_annihilator_leq(b, a);
  }
  std::optional<Value> left_projection(const Value& a) const {
    return base_->right_projection(a);
  }
  std::optional<Value> right_projection(const Value& a) const {
    return base_->left_projection(a);
  }
  std::optional<Value> left_idempotent(const Value& a) const {
    return base_->right_idempotent(a);
  }
  std::optional<Value> right_idempotent(const Value& a) const {
    return base_->left_idempotent(a);
  }
  void check_unital(const Value& a) const { base_->check_unital(a); }
  std::string describe(const Value& a) const { return base_->describe(a); }

  std::size_t size() const requires Enumerable<R> { return base_->size(); }
  Value value_at(std::size_t i) const requires Enumerable<R> {
    return base_->value_at(i);
  }

  // The minus order's defining equations are symmetric under reversal.
  bool rank_subtractive(const Value& a, const Value& b) const
      requires RankDecidable<R> {
    return base_->rank_subtractive(a, b);
  }

  // Deduced return types defer the StarRing check until the class is complete.
  auto view(const Element<R>& x) const {
    if (!(x.ring() == *base_)) {
      throw Error(Errc::ring_mismatch, "opposite view of a foreign element");
    }
    return Element<OppositeRing>(*this, x.value());
  }

  template <class E>
  Element<R> base(const E& x) const {
    if (!(x.ring() == *this)) {
      throw Error(Errc::ring_mismatch, "element of a different opposite view");
    }
    return Element<R>(*base_, x.value());
  }

  bool operator==(const OppositeRing& other) const {
    return base_ == other.base_ || *base_ == *other.base_;
  }

 private:
  const R* base_;
};

// Pair of idempotents (left p, right q) defining a 2x2 Peirce decomposition.
template <StarRing R>
struct IdempotentPair {
  Element<R> p;
  Element<R> q;
};

// x = x11 + x12 + x21 + x22 with
//   x11 = p x q,  x12 = p x (1-q),  x21 = (1-p) x q,  x22 = (1-p) x (1-q).
// Blocks are full ring elements, zero outside their corner.
template <StarRing R>
struct PeirceBlocks {
  Element<R> x11;
  Element<R> x12;
  Element<R> x21;
  Element<R> x22;
  IdempotentPair<R> pair;
};

template <StarRing R>
void require_idempotent_pair(const IdempotentPair<R>& pair) {
  if (!is_idempotent(pair.p)) {
    throw Error(Errc::idempotent_violation, "left idempotent p has p*p != p: " +
                                                pair.p.str());
  }
  if (!is_idempotent(pair.q)) {
    throw Error(Errc::idempotent_violation, "right idempotent q has q*q != q: " +
                                                pair.q.str());
  }
}

// True iff e·x·f == x, i.e. x lies in the corner eRf.
template <StarRing R>
bool in_corner(const Element<R>& x, const Element<R>& e, const Element<R>& f) {
  return e * x * f == x;
}

template <StarRing R>
void require_corner(const Element<R>& x, const Element<R>& e, const Element<R>& f,
                    const char* name) {
  if (!in_corner(x, e, f)) {
    throw Error(Errc::corner_violation,
                std::string(name) + " = " + x.str() + " is outside its corner");
  }
}

template <StarRing R>
PeirceBlocks<R> peirce_decompose(const Element<R>& x, const IdempotentPair<R>& pair) {
  require_idempotent_pair(pair);
  x.ring().check_unital(x.value());
  const auto& p = pair.p;
  const auto& q = pair.q;
  const auto cp = one_minus(p);
  const auto cq = one_minus(q);
  return {p * x * q, p * x * cq, cp * x * q, cp * x * cq, pair};
}

template <StarRing R>
Element<R> peirce_recompose(const PeirceBlocks<R>& b) {
  require_idempotent_pair(b.pair);
  const auto& p = b.pair.p;
  const auto& q = b.pair.q;
  const auto cp = one_minus(p);
  const auto cq = one_minus(q);
  require_corner(b.x11, p, q, "x11");
  require_corner(b.x12, p, cq, "x12");
  require_corner(b.x21, cp, q, "x21");
  require_corner(b.x22, cp, cq, "x22");
  return b.x11 + b.x12 + b.x21 + b.x22;
}

// Block product: x in (p, q) form times z in (q, r) form gives xz in (p, r)
// form with (xz)_ij = sum_k x_ik z_kj.
template <StarRing R>
PeirceBlocks<R> peirce_multiply(const PeirceBlocks<R>& x, const PeirceBlocks<R>& z) {
  if (!(x.pair.q == z.pair.p)) {
    throw Error(Errc::idempotent_violation,
                "block product needs the right idempotent of x to equal the "
                "left idempotent of z");
  }
  return {x.x11 * z.x11 + x.x12 * z.x21, x.x11 * z.x12 + x.x12 * z.x22,
          x.x21 * z.x11 + x.x22 * z.x21, x.x21 * z.x12 + x.x22 * z.x22,
          IdempotentPair<R>{x.pair.p, z.pair.q}};
}

}  // namespace starinv
