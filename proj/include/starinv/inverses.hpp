#pragma once

#include <array>
#include <optional>
#include <string>

#include "starinv/error.hpp"
#include "starinv/ring.hpp"

namespace starinv {

struct PenroseProfile {
  bool eq1 = false;  // axa = a
  bool eq2 = false;  // xax = x
  bool eq3 = false;  // (ax)* = ax
  bool eq4 = false;  // (xa)* = xa

  bool operator==(const PenroseProfile&) const = default;
};

// Subsets of {1,2,3,4} as bitmasks.
using InverseClass = unsigned;
inline constexpr InverseClass eq1 = 1u, eq2 = 2u, eq3 = 4u, eq4 = 8u;
inline constexpr InverseClass class_1 = eq1;
inline constexpr InverseClass class_123 = eq1 | eq2 | eq3;
inline constexpr InverseClass class_124 = eq1 | eq2 | eq4;
inline constexpr InverseClass class_1234 = eq1 | eq2 | eq3 | eq4;

template <StarRing R>
PenroseProfile penrose_profile(const Element<R>& a, const Element<R>& x) {
  const auto ax = a * x;
  const auto xa = x * a;
  return {ax * a == a, xa * x == x, star(ax) == ax, star(xa) == xa};
}

template <StarRing R>
bool is_member(const Element<R>& a, const Element<R>& x, InverseClass cls) {
  const auto p = penrose_profile(a, x);
  return (!(cls & eq1) || p.eq1) && (!(cls & eq2) || p.eq2) &&
         (!(cls & eq3) || p.eq3) && (!(cls & eq4) || p.eq4);
}

template <StarRing R>
std::optional<Element<R>> try_dagger(const Element<R>& a) {
  if (auto v = a.ring().mp_inverse(a.value())) return a.with(*std::move(v));
  return std::nullopt;
}

template <StarRing R>
Element<R> dagger(const Element<R>& a) {
  if (auto x = try_dagger(a)) return *std::move(x);
  throw Error(Errc::not_mp_invertible, a.str() + " has no Moore-Penrose inverse");
}

// The backend's canonical {1}-inverse (a† when it exists).
template <StarRing R>
std::optional<Element<R>> try_inner(const Element<R>& a) {
  if (auto v = a.ring().inner_inverse(a.value())) return a.with(*std::move(v));
  return std::nullopt;
}

template <StarRing R>
void require_inner(const Element<R>& a, const Element<R>& a_minus) {
  if (!(a * a_minus * a == a)) {
    throw Error(Errc::not_inner_inverse,
                a_minus.str() + " is not an inner inverse of " + a.str());
  }
}

// xax = x and ax = aa†: membership in a{-†} (equivalently a{1,2,3}).
template <StarRing R>
bool satisfies_1mp_system(const Element<R>& a, const Element<R>& x,
                          const Element<R>& a_dagger) {
  return x * a * x == x && a * x == a * a_dagger;
}

// xax = x and xa = a†a: membership in a{†-} (equivalently a{1,2,4}).
template <StarRing R>
bool satisfies_mp1_system(const Element<R>& a, const Element<R>& x,
                          const Element<R>& a_dagger) {
  return x * a * x == x && x * a == a_dagger * a;
}

// a⁻·a·a†
template <StarRing R>
Element<R> one_mp(const Element<R>& a, const Element<R>& a_minus) {
  const auto ad = dagger(a);
  require_inner(a, a_minus);
  return a_minus * a * ad;
}

// a†·a·a⁻
template <StarRing R>
Element<R> mp_one(const Element<R>& a, const Element<R>& a_minus) {
  const auto ad = dagger(a);
  require_inner(a, a_minus);
  return ad * a * a_minus;
}

enum class FamilyKind { one_mp, mp_one };

// {base + left·w·right : w ∈ R}
template <StarRing R>
struct InverseFamily {
  Element<R> base;
  Element<R> left;
  Element<R> right;
  FamilyKind kind;

  Element<R> instantiate(const Element<R>& w) const { return base + left * w * right; }
};

// base + (1 − base·a)·w·(a·base)
template <StarRing R>
InverseFamily<R> family_1mp(const Element<R>& a, const Element<R>& base) {
  if (!satisfies_1mp_system(a, base, dagger(a))) {
    throw Error(Errc::not_a_1mp_inverse, base.str() + " is not a 1MP-inverse of " + a.str());
  }
  return {base, one_minus(base * a), a * base, FamilyKind::one_mp};
}

// The 1MP family of a in the opposite ring, read back in R:
// base + (base·a)·w·(1 − a·base).
template <StarRing R>
InverseFamily<R> family_mp1(const Element<R>& a, const Element<R>& base) {
  if (!satisfies_mp1_system(a, base, dagger(a))) {
    throw Error(Errc::not_an_mp1_inverse,
                base.str() + " is not an MP1-inverse of " + a.str());
  }
  const OppositeRing<R> op(a.ring());
  const auto dual = family_1mp(op.view(a), op.view(base));
  // left ·_L w ·_L right = right·w·left in R.
  return {base, op.base(dual.right), op.base(dual.left), FamilyKind::mp_one};
}

// Conditions (i)-(vii) characterizing x = a⁻aa† for a fixed a⁻.
template <StarRing R>
std::array<bool, 7> seven_conditions(const Element<R>& a, const Element<R>& a_minus,
                                     const Element<R>& x) {
  const auto ad = dagger(a);
  require_inner(a, a_minus);
  const auto as = star(a);
  const auto ax = a * x;
  const auto xa = x * a;
  const auto x_via_left = a_minus * ax;   // a⁻ax
  const auto x_via_right = xa * ad;       // xaa†
  return {
      x == a_minus * a * ad,
      ax == a * ad && x == x_via_left,
      as * ax == as && x == x_via_left,
      xa == a_minus * a && x == x_via_right,
      xa * a_minus == a_minus * a * a_minus && x == x_via_right,
      ax * a == a && a_minus * ax * a * ad == x,
      xa * x == x && as * ax == as,
  };
}

template <StarRing R>
struct ProjectionWitness {
  Element<R> p;        // projection, pR = aR
  Element<R> q;        // idempotent, Rq = Ra
  Element<R> witness;  // q·a⁻·p ∈ a{-†}
};

// p = aa†, q = a⁻a and the witness q·a⁻·p; nullopt when a ∉ R†.
template <StarRing R>
std::optional<ProjectionWitness<R>> existence_via_projections(const Element<R>& a,
                                                              const Element<R>& a_minus) {
  const auto ad = try_dagger(a);
  if (!ad) return std::nullopt;
  require_inner(a, a_minus);
  auto p = a * *ad;
  auto q = a_minus * a;
  auto witness = q * a_minus * p;
  if (!is_projection(p) || !is_idempotent(q) || !(p * a == a) || !(a * q == a) ||
      !satisfies_1mp_system(a, witness, *ad)) {
    internal_failure("projection witness for " + a.str() + " failed verification");
  }
  return ProjectionWitness<R>{std::move(p), std::move(q), std::move(witness)};
}

template <StarRing R>
std::optional<ProjectionWitness<R>> existence_via_projections(const Element<R>& a) {
  const auto g = try_inner(a);
  if (!g || !try_dagger(a)) return std::nullopt;
  return existence_via_projections(a, *g);
}

// x·a·y for x, y ∈ a{-†}.
template <StarRing R>
Element<R> closure_products(const Element<R>& a, const Element<R>& x, const Element<R>& y) {
  const auto ad = dagger(a);
  for (const auto* m : {&x, &y}) {
    if (!satisfies_1mp_system(a, *m, ad)) {
      throw Error(Errc::not_a_1mp_inverse, m->str() + " is not a 1MP-inverse of " + a.str());
    }
  }
  auto z = x * a * y;
  if (!satisfies_1mp_system(a, z, ad)) internal_failure("x·a·y left a{-†}");
  return z;
}

template <StarRing R>
bool is_partial_isometry(const Element<R>& a) {
  const auto ad = try_dagger(a);
  return ad && *ad == star(a);
}

// c = a⁻aa* + (1 − a⁻a)·w·aa*, a solution of xax = x, ax = aa*.
template <StarRing R>
Element<R> partial_isometry_solutions(const Element<R>& a, const Element<R>& a_minus,
                                      const Element<R>& w) {
  if (!is_partial_isometry(a)) {
    throw Error(Errc::not_partial_isometry, a.str() + " is not a partial isometry");
  }
  require_inner(a, a_minus);
  const auto as = star(a);
  const auto q = a_minus * a;
  auto c = q * as + one_minus(q) * w * a * as;
  if (!(c * a * c == c) || !(a * c == a * as)) {
    internal_failure("partial isometry solution failed its system");
  }
  return c;
}

}  // namespace starinv
