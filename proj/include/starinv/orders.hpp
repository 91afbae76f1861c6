#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "starinv/error.hpp"
#include "starinv/inverses.hpp"
#include "starinv/linalg.hpp"
#include "starinv/matrix_ring.hpp"
#include "starinv/ring.hpp"

namespace starinv {

// How a verdict was reached.
//   equational          the canonical witness satisfied the defining equations
//   structural          a closed-form criterion (rank test, annihilator and
//                       product identities) decided it
//   exhaustive          every candidate witness was examined
//   search              a bounded witness search found a witness
//   undecided_negative  the bounded search found nothing; the relation may
//                       still hold
enum class Method { equational, structural, exhaustive, search, undecided_negative };

inline std::string_view method_name(Method m) {
  switch (m) {
    case Method::equational: return "equational";
    case Method::structural: return "structural";
    case Method::exhaustive: return "exhaustive";
    case Method::search: return "search";
    case Method::undecided_negative: return "undecided-negative";
  }
  return "unknown";
}

template <StarRing R>
struct Witness {
  std::string name;
  Element<R> value;
};

template <StarRing R>
struct OrderVerdict {
  bool holds = false;
  Method method = Method::structural;
  std::vector<Witness<R>> witness;
  std::string reason;

  const Element<R>* find(std::string_view name) const {
    for (const auto& w : witness)
      if (w.name == name) return &w.value;
    return nullptr;
  }
};

template <StarRing R>
OrderVerdict<R> holds_with(Method m, std::vector<Witness<R>> w) {
  return {true, m, std::move(w), {}};
}

template <StarRing R>
OrderVerdict<R> fails_with(Method m, std::string reason) {
  return {false, m, {}, std::move(reason)};
}

template <class R>
struct is_matrix_ring : std::false_type {};
template <class F>
struct is_matrix_ring<MatrixRing<F>> : std::true_type {};

// Both operands live in one unital ring and, for matrices, share a shape.
template <StarRing R>
void require_comparable(const Element<R>& a, const Element<R>& b) {
  if (!a.same_ring(b)) throw Error(Errc::ring_mismatch, "order operands from different rings");
  a.ring().check_unital(a.value());
  b.ring().check_unital(b.value());
  if (!(unit(a) == unit(b))) {
    throw Error(Errc::dimension_mismatch, "order operands differ in size");
  }
}

// ---------------------------------------------------------------- lp / rp

template <StarRing R>
Element<R> lp(const Element<R>& a) {
  a.ring().check_unital(a.value());
  if (auto e = a.ring().left_projection(a.value())) return a.with(*std::move(e));
  throw Error(Errc::not_rickart, "no projection generates the left annihilator of " + a.str());
}

template <StarRing R>
Element<R> rp(const Element<R>& a) {
  a.ring().check_unital(a.value());
  if (auto e = a.ring().right_projection(a.value())) return a.with(*std::move(e));
  throw Error(Errc::not_rickart, "no projection generates the right annihilator of " + a.str());
}

// Canonical members of LP(a), RP(a): lp(a), rp(a) when they exist, otherwise
// an idempotent with the same annihilator.
template <StarRing R>
Element<R> lp_idempotent(const Element<R>& a) {
  a.ring().check_unital(a.value());
  if (auto e = a.ring().left_idempotent(a.value())) return a.with(*std::move(e));
  throw Error(Errc::not_rickart, "no idempotent generates the left annihilator of " + a.str());
}

template <StarRing R>
Element<R> rp_idempotent(const Element<R>& a) {
  a.ring().check_unital(a.value());
  if (auto e = a.ring().right_idempotent(a.value())) return a.with(*std::move(e));
  throw Error(Errc::not_rickart, "no idempotent generates the right annihilator of " + a.str());
}

template <StarRing R>
bool in_lp_set(const Element<R>& a, const Element<R>& e) {
  return is_idempotent(e) && left_annihilator_leq(e, a) && left_annihilator_leq(a, e);
}

template <StarRing R>
bool in_rp_set(const Element<R>& a, const Element<R>& e) {
  return is_idempotent(e) && right_annihilator_leq(e, a) && right_annihilator_leq(a, e);
}

// lp(a) + p1 with p1 ∈ lp(a)·R·(1 − lp(a)).
template <StarRing R>
Element<R> lp_family_member(const Element<R>& a, const Element<R>& p1) {
  const auto l = lp_idempotent(a);
  require_corner(p1, l, one_minus(l), "p1");
  auto e = l + p1;
  if (!in_lp_set(a, e)) internal_failure("lp(a) + p1 left LP(a)");
  return e;
}

// rp(a) + q1 with q1 ∈ (1 − rp(a))·R·rp(a).
template <StarRing R>
Element<R> rp_family_member(const Element<R>& a, const Element<R>& q1) {
  const auto r = rp_idempotent(a);
  require_corner(q1, one_minus(r), r, "q1");
  auto e = r + q1;
  if (!in_rp_set(a, e)) internal_failure("rp(a) + q1 left RP(a)");
  return e;
}

// ---------------------------------------------------------------- minus

template <StarRing R>
bool minus_equations(const Element<R>& a, const Element<R>& b, const Element<R>& g) {
  return a * g * a == a && g * a == g * b && a * g == b * g;
}

template <StarRing R>
std::vector<Witness<R>> minus_witness(const Element<R>& a, const Element<R>& g) {
  return {{"a_minus", g}, {"p", a * g}, {"q", g * a}};
}

// a⁻a = a⁻b and aa⁻ = ba⁻ for some a⁻ ∈ a{1}. Positive verdicts carry a⁻
// and the idempotents p = aa⁻, q = a⁻a with a = pb = bq.
template <StarRing R>
OrderVerdict<R> leq_minus(const Element<R>& a, const Element<R>& b) {
  require_comparable(a, b);
  const auto g0 = try_inner(a);
  if (!g0) throw Error(Errc::not_regular, a.str() + " has no inner inverse");
  if (minus_equations(a, b, *g0)) {
    return holds_with<R>(Method::equational, minus_witness(a, *g0));
  }
  if constexpr (RankDecidable<R>) {
    if (!a.ring().rank_subtractive(a.value(), b.value())) {
      return fails_with<R>(Method::structural, "rank(b - a) ≠ rank(b) - rank(a)");
    }
    // Below b in the minus order, b⁻ab⁻ ∈ a{1} for every b⁻ ∈ b{1}.
    const auto gb = try_inner(b);
    if (!gb) internal_failure("matrix without inner inverse");
    const auto g = *gb * a * *gb;
    if (!minus_equations(a, b, g)) internal_failure("rank test and minus witness disagree");
    return holds_with<R>(Method::structural, minus_witness(a, g));
  } else if constexpr (Enumerable<R>) {
    const auto& ring = a.ring();
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const auto g = a.with(ring.value_at(i));
      if (minus_equations(a, b, g)) return holds_with<R>(Method::exhaustive, minus_witness(a, g));
    }
    return fails_with<R>(Method::exhaustive, "no a⁻ ∈ a{1} with a⁻a = a⁻b and aa⁻ = ba⁻");
  } else {
    static_assert(RankDecidable<R> || Enumerable<R>, "no minus-order decision procedure");
  }
}

// ---------------------------------------------------------------- 1MP / MP1

template <StarRing R>
bool one_mp_witness_ok(const Element<R>& a, const Element<R>& b, const Element<R>& x,
                       const Element<R>& a_dagger) {
  return satisfies_1mp_system(a, x, a_dagger) && x * a == x * b && a * x == b * x;
}

template <StarRing R>
bool mp_one_witness_ok(const Element<R>& a, const Element<R>& b, const Element<R>& x,
                       const Element<R>& a_dagger) {
  return satisfies_mp1_system(a, x, a_dagger) && x * a == x * b && a * x == b * x;
}

inline constexpr std::string_view reason_not_minus = "a is not below b in the minus order";
inline constexpr std::string_view reason_dagger_left = "a†b ≠ a†a";
inline constexpr std::string_view reason_dagger_right = "ba† ≠ aa†";

// Some x ∈ a{-†} with xa = xb and ax = bx.
template <StarRing R>
OrderVerdict<R> leq_1mp(const Element<R>& a, const Element<R>& b) {
  require_comparable(a, b);
  const auto ad = dagger(a);
  if (one_mp_witness_ok(a, b, ad, ad)) {
    return holds_with<R>(Method::equational, {{"x", ad}});
  }
  if constexpr (RankDecidable<R>) {
    const auto minus = leq_minus(a, b);
    if (!minus.holds) return fails_with<R>(Method::structural, std::string(reason_not_minus));
    if (!(ad * b == ad * a)) {
      return fails_with<R>(Method::structural, std::string(reason_dagger_left));
    }
    const auto& g = *minus.find("a_minus");
    const auto x = g * a * ad;
    if (!one_mp_witness_ok(a, b, x, ad)) internal_failure("1MP witness from a⁻aa† failed");
    return holds_with<R>(Method::structural, {{"x", x}, {"a_minus", g}});
  } else if constexpr (Enumerable<R>) {
    const auto& ring = a.ring();
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const auto x = a.with(ring.value_at(i));
      if (one_mp_witness_ok(a, b, x, ad)) return holds_with<R>(Method::exhaustive, {{"x", x}});
    }
    return fails_with<R>(Method::exhaustive, "no x ∈ a{-†} with xa = xb and ax = bx");
  } else {
    static_assert(RankDecidable<R> || Enumerable<R>, "no 1MP-order decision procedure");
  }
}

// Decided as the 1MP relation of the opposite ring; the witness is carried
// back unchanged and re-checked against the MP1 equations.
template <StarRing R>
OrderVerdict<R> leq_mp1(const Element<R>& a, const Element<R>& b) {
  const OppositeRing<R> op(a.ring());
  const auto dual = leq_1mp(op.view(a), op.view(b));
  OrderVerdict<R> out{dual.holds, dual.method, {}, dual.reason};
  if (out.reason == reason_dagger_left) out.reason = reason_dagger_right;
  for (const auto& w : dual.witness) out.witness.push_back({w.name, op.base(w.value)});
  if (out.holds && !mp_one_witness_ok(a, b, *out.find("x"), dagger(a))) {
    internal_failure("transported MP1 witness failed");
  }
  return out;
}

// ---------------------------------------------------------------- diamond

// °b ⊆ °a, b° ⊆ a° and ab*a = aa*a.
template <StarRing R>
OrderVerdict<R> leq_diamond(const Element<R>& a, const Element<R>& b) {
  require_comparable(a, b);
  if (!left_annihilator_leq(b, a)) return fails_with<R>(Method::structural, "°b ⊄ °a");
  if (!right_annihilator_leq(b, a)) return fails_with<R>(Method::structural, "b° ⊄ a°");
  const auto lhs = a * star(b) * a;
  if (!(lhs == a * star(a) * a)) return fails_with<R>(Method::structural, "ab*a ≠ aa*a");
  return holds_with<R>(Method::structural, {{"ab*a", lhs}});
}

// ---------------------------------------------------------------- plus

template <StarRing R>
bool plus_witness_ok(const Element<R>& a, const Element<R>& b, const Element<R>& q_tilde,
                     const Element<R>& q) {
  return in_lp_set(a, q_tilde) && in_rp_set(a, q) && left_annihilator_leq(b, a) &&
         right_annihilator_leq(b, a) && a == q_tilde * b * q;
}

template <StarRing R>
std::vector<Witness<R>> plus_witness(const Element<R>& q_tilde, const Element<R>& q) {
  return {{"q_tilde", q_tilde}, {"q", q}};
}

namespace detail {

// Independent basis of the corner e·M·f inside n x n matrices, as matrices.
template <class F>
std::vector<Matrix<F>> corner_basis(const Matrix<F>& e, const Matrix<F>& f) {
  const std::size_t n = e.rows();
  const F& field = e.field();
  std::vector<Matrix<F>> images;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<typename F::Scalar> unit_entries(n * n, field.zero());
      unit_entries[i * n + j] = field.one();
      images.push_back(e * Matrix<F>(field, n, n, std::move(unit_entries)) * f);
    }
  }
  Matrix<F> stacked(field, n * n, 0);
  for (const auto& m : images) stacked = hstack(stacked, vectorize(m));
  std::vector<Matrix<F>> basis;
  for (auto p : rref(stacked).pivots) basis.push_back(images[p]);
  return basis;
}

template <class F>
Matrix<F> combine(const std::vector<Matrix<F>>& basis, const std::vector<long>& coeff,
                  const Matrix<F>& zero) {
  Matrix<F> out = zero;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (coeff[k] != 0) out = out + zero.field().from_int(coeff[k]) * basis[k];
  }
  return out;
}

// Calls fn(coefficients) over `digits`^dim coefficient vectors (first entry
// of `digits` must be 0, so the zero combination comes first), stopping when
// fn returns true or after `cap` vectors. Returns {found, complete}.
template <class Fn>
std::pair<bool, bool> for_each_combination(std::size_t dim, const std::vector<long>& digits,
                                           std::size_t cap, Fn&& fn) {
  std::vector<std::size_t> idx(dim, 0);
  std::vector<long> coeff(dim, 0);
  for (std::size_t tried = 0; tried < cap; ++tried) {
    for (std::size_t k = 0; k < dim; ++k) coeff[k] = digits[idx[k]];
    if (fn(coeff)) return {true, false};
    std::size_t k = 0;
    while (k < dim && ++idx[k] == digits.size()) idx[k++] = 0;
    if (k == dim) return {false, true};
  }
  return {false, false};
}

// Searches LP(a) × RP(a) = (l + lM(1-l)) × (r + (1-r)Mr) for a = q̃bq. Each
// side is bilinear, so one factor is enumerated from a bounded set and the
// other solved for exactly. Over GF(p) the enumeration covers the whole
// corner when it is small enough, which makes a negative answer definitive.
template <class F>
OrderVerdict<MatrixRing<F>> plus_matrix_search(const Element<MatrixRing<F>>& a,
                                               const Element<MatrixRing<F>>& b,
                                               const Element<MatrixRing<F>>& l,
                                               const Element<MatrixRing<F>>& r) {
  using M = Matrix<F>;
  const std::size_t n = a.value().rows();
  const M one = M::identity(a.value().field(), n);
  const M zero(a.value().field(), n, n);
  const M& av = a.value();
  const M& bv = b.value();
  const M& lv = l.value();
  const M& rv = r.value();
  const auto lbasis = corner_basis(lv, one - lv);
  const auto rbasis = corner_basis(one - rv, rv);

  std::vector<long> digits{0, 1, -1};
  std::size_t cap = 2187;
  bool may_complete = false;
  if constexpr (std::is_same_v<F, PrimeField>) {
    const long p = static_cast<long>(av.field().modulus());
    digits.clear();
    for (long d = 0; d < p; ++d) digits.push_back(d);
    cap = 4096;
    may_complete = true;
  }

  std::optional<std::pair<M, M>> found;
  auto try_pair = [&](const M& qt, const M& q) {
    if (plus_witness_ok(a, b, a.with(qt), a.with(q))) {
      found = std::make_pair(qt, q);
      return true;
    }
    return false;
  };

  // q̃ = l + p1 fixed: solve a - q̃br = q̃b(1-r)Y r for Y, q = r + (1-r)Yr.
  auto solve_right = [&](const std::vector<long>& coeff) {
    const M qt = lv + combine(lbasis, coeff, zero);
    const M lhs = qt * bv * (one - rv);
    const auto sys = kronecker(rv.transpose(), lhs);
    const auto y = solve_linear(sys, vectorize(av - qt * bv * rv));
    if (!y) return false;
    return try_pair(qt, rv + (one - rv) * unvectorize(*y, n, n) * rv);
  };
  // q = r + q1 fixed: solve a - lbq = lX(1-l)bq for X, q̃ = l + lX(1-l).
  auto solve_left = [&](const std::vector<long>& coeff) {
    const M q = rv + combine(rbasis, coeff, zero);
    const M rhs = (one - lv) * bv * q;
    const auto sys = kronecker(rhs.transpose(), lv);
    const auto x = solve_linear(sys, vectorize(av - lv * bv * q));
    if (!x) return false;
    return try_pair(lv + lv * unvectorize(*x, n, n) * (one - lv), q);
  };

  const auto [found_right, complete_right] =
      for_each_combination(lbasis.size(), digits, cap, solve_right);
  if (found_right) {
    return holds_with<MatrixRing<F>>(Method::search,
                                     plus_witness(a.with(found->first), a.with(found->second)));
  }
  if (may_complete && complete_right) {
    return fails_with<MatrixRing<F>>(Method::exhaustive,
                                     "no q̃ ∈ LP(a), q ∈ RP(a) with a = q̃bq");
  }
  const auto [found_left, complete_left] =
      for_each_combination(rbasis.size(), digits, cap, solve_left);
  if (found_left) {
    return holds_with<MatrixRing<F>>(Method::search,
                                     plus_witness(a.with(found->first), a.with(found->second)));
  }
  if (may_complete && complete_left) {
    return fails_with<MatrixRing<F>>(Method::exhaustive,
                                     "no q̃ ∈ LP(a), q ∈ RP(a) with a = q̃bq");
  }
  return fails_with<MatrixRing<F>>(Method::undecided_negative,
                                   "no witness in the bounded LP(a) x RP(a) search");
}

}  // namespace detail

// °b ⊆ °a, b° ⊆ a° and a = q̃bq for some q̃ ∈ LP(a), q ∈ RP(a).
//
// Ladder: containments, canonical witness (lp(a), rp(a)), the minus-order
// witness (aa⁻, a⁻a), then exhaustive LP x RP scan (finite rings) or the
// bounded corner search (matrices).
template <StarRing R>
OrderVerdict<R> leq_plus(const Element<R>& a, const Element<R>& b) {
  require_comparable(a, b);
  const auto l = lp_idempotent(a);
  const auto r = rp_idempotent(a);
  if (!left_annihilator_leq(b, a)) return fails_with<R>(Method::structural, "°b ⊄ °a");
  if (!right_annihilator_leq(b, a)) return fails_with<R>(Method::structural, "b° ⊄ a°");
  if (a == l * b * r) return holds_with<R>(Method::structural, plus_witness(l, r));

  if (try_inner(a)) {
    const auto minus = leq_minus(a, b);
    if (minus.holds) {
      const auto& p = *minus.find("p");
      const auto& q = *minus.find("q");
      if (!plus_witness_ok(a, b, p, q)) internal_failure("minus witness is not a plus witness");
      return holds_with<R>(Method::structural, plus_witness(p, q));
    }
  }

  if constexpr (Enumerable<R>) {
    const auto& ring = a.ring();
    std::vector<Element<R>> lefts, rights;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const auto e = a.with(ring.value_at(i));
      if (in_lp_set(a, e)) lefts.push_back(e);
      if (in_rp_set(a, e)) rights.push_back(e);
    }
    for (const auto& qt : lefts)
      for (const auto& q : rights)
        if (a == qt * b * q) return holds_with<R>(Method::exhaustive, plus_witness(qt, q));
    return fails_with<R>(Method::exhaustive, "no q̃ ∈ LP(a), q ∈ RP(a) with a = q̃bq");
  } else if constexpr (is_matrix_ring<R>::value) {
    return detail::plus_matrix_search(a, b, l, r);
  } else {
    return fails_with<R>(Method::undecided_negative, "no plus-order search for this ring");
  }
}

// ---------------------------------------------------------------- dispatch

enum class Relation { one_mp, mp_one, minus, diamond, plus };

inline std::string_view relation_name(Relation r) {
  switch (r) {
    case Relation::one_mp: return "1mp";
    case Relation::mp_one: return "mp1";
    case Relation::minus: return "minus";
    case Relation::diamond: return "diamond";
    case Relation::plus: return "plus";
  }
  return "unknown";
}

inline std::optional<Relation> parse_relation(std::string_view text) {
  for (auto r : {Relation::one_mp, Relation::mp_one, Relation::minus, Relation::diamond,
                 Relation::plus}) {
    if (text == relation_name(r)) return r;
  }
  return std::nullopt;
}

template <StarRing R>
OrderVerdict<R> decide(Relation rel, const Element<R>& a, const Element<R>& b) {
  switch (rel) {
    case Relation::one_mp: return leq_1mp(a, b);
    case Relation::mp_one: return leq_mp1(a, b);
    case Relation::minus: return leq_minus(a, b);
    case Relation::diamond: return leq_diamond(a, b);
    case Relation::plus: return leq_plus(a, b);
  }
  internal_failure("unhandled relation");
}

// ---------------------------------------------------------------- 1MP block forms

template <StarRing R>
struct OneMPAboveForm {
  Element<R> b4;  // ∈ (1 - aa†) R (1 - a†a)
  Element<R> d;   // ∈ (1 - a†a) R aa†
};

// b = a - b4·d·a + b4, the element with blocks [[a, 0], [-b4da, b4]]
// relative to (aa†, a†a).
template <StarRing R>
Element<R> above_1mp(const Element<R>& a, const OneMPAboveForm<R>& form) {
  a.ring().check_unital(a.value());
  const auto ad = dagger(a);
  const auto p = a * ad;
  const auto q = ad * a;
  require_corner(form.b4, one_minus(p), one_minus(q), "b4");
  require_corner(form.d, one_minus(q), p, "d");
  auto b = a - form.b4 * form.d * a + form.b4;
  if (!leq_1mp(a, b).holds) internal_failure("above_1mp produced b not above a");
  return b;
}

// The opposite-ring image of above_1mp: b = a - a·d·b4 + b4 with
// b4 ∈ (1 - aa†) R (1 - a†a) and d ∈ a†a R (1 - aa†).
template <StarRing R>
Element<R> above_mp1(const Element<R>& a, const OneMPAboveForm<R>& form) {
  const OppositeRing<R> op(a.ring());
  const auto b = op.base(above_1mp(
      op.view(a), OneMPAboveForm<OppositeRing<R>>{op.view(form.b4), op.view(form.d)}));
  if (!leq_mp1(a, b).holds) internal_failure("above_mp1 produced b not above a");
  return b;
}

// x ∈ b{-†} via its blocks relative to (a†a, aa†): x11 = a†, x12 = 0,
// b4·x21 = b4·d (= -b3·a†) and x22 ∈ b4{-†}.
template <StarRing R>
bool b_1mp_inverse_check(const Element<R>& a, const Element<R>& b, const Element<R>& x) {
  if (!leq_1mp(a, b).holds) {
    throw Error(Errc::order_violation, a.str() + " is not below " + b.str() + " (1MP)");
  }
  dagger(b);
  const auto ad = dagger(a);
  const auto p = a * ad;
  const auto q = ad * a;
  const auto blocks = peirce_decompose(x, IdempotentPair<R>{q, p});
  const auto b4 = one_minus(p) * b * one_minus(q);
  const auto b3 = one_minus(p) * b * q;
  if (!(blocks.x11 == ad) || !is_zero(blocks.x12)) return false;
  if (!(b4 * blocks.x21 == -(b3 * ad))) return false;
  const auto b4d = try_dagger(b4);
  return b4d && satisfies_1mp_system(b4, blocks.x22, *b4d);
}

template <StarRing R>
bool b_mp1_inverse_check(const Element<R>& a, const Element<R>& b, const Element<R>& x) {
  const OppositeRing<R> op(a.ring());
  try {
    return b_1mp_inverse_check(op.view(a), op.view(b), op.view(x));
  } catch (const Error& e) {
    if (e.code() != Errc::order_violation) throw;
    throw Error(Errc::order_violation, a.str() + " is not below " + b.str() + " (MP1)");
  }
}

// ---------------------------------------------------------------- plus block form

// Free data relative to l = LP-canonical(a), r = RP-canonical(a).
template <StarRing R>
struct PlusBlockData {
  Element<R> b22;  // (1-l) R (1-r)
  Element<R> y;    // l R (1-l)
  Element<R> x;    // (1-r) R r
  Element<R> w;    // (1-l) R r
  Element<R> z;    // l R (1-r)
};

struct PlusConditionFailure {
  enum class Which { left_annihilator, right_annihilator } which;
  std::string detail;
};

// b = [[a + y(b22·x + w) + z·x, y·b22 + z], [b22·x + w, b22]] relative to
// (l, r), subject to °b ⊆ °((y+1)w) and b° ⊆ (z(x+1))°. A successful
// composition is checked against the witness q̃ = l - y, q = r - x.
template <StarRing R>
std::variant<Element<R>, PlusConditionFailure> plus_block_compose(
    const Element<R>& a, const PlusBlockData<R>& data) {
  const auto l = lp_idempotent(a);
  const auto r = rp_idempotent(a);
  const auto cl = one_minus(l);
  const auto cr = one_minus(r);
  require_corner(data.b22, cl, cr, "b22");
  require_corner(data.y, l, cl, "y");
  require_corner(data.x, cr, r, "x");
  require_corner(data.w, cl, r, "w");
  require_corner(data.z, l, cr, "z");

  const auto b21 = data.b22 * data.x + data.w;
  const auto b = (a + data.y * b21 + data.z * data.x) + (data.y * data.b22 + data.z) + b21 +
                 data.b22;
  const auto one = unit(a);
  if (!left_annihilator_leq(b, (data.y + one) * data.w)) {
    return PlusConditionFailure{PlusConditionFailure::Which::left_annihilator,
                                "°b ⊄ °((y+1)w)"};
  }
  if (!right_annihilator_leq(b, data.z * (data.x + one))) {
    return PlusConditionFailure{PlusConditionFailure::Which::right_annihilator,
                                "b° ⊄ (z(x+1))°"};
  }
  if (!plus_witness_ok(a, b, l - data.y, r - data.x)) {
    internal_failure("plus block composition failed its witness (l - y, r - x)");
  }
  return b;
}

// Inverse direction: the block data of b read off a plus witness (q̃, q),
// with y = l - q̃ and x = r - q.
template <StarRing R>
PlusBlockData<R> plus_block_decompose(const Element<R>& a, const Element<R>& b,
                                      const Element<R>& q_tilde, const Element<R>& q) {
  if (!plus_witness_ok(a, b, q_tilde, q)) {
    throw Error(Errc::order_violation, "(q̃, q) does not witness a ≤⁺ b");
  }
  const auto l = lp_idempotent(a);
  const auto r = rp_idempotent(a);
  const auto cl = one_minus(l);
  const auto cr = one_minus(r);
  const auto y = l - q_tilde;
  const auto x = r - q;
  const auto b22 = cl * b * cr;
  const auto w = cl * b * r - b22 * x;
  const auto z = l * b * cr - y * b22;
  return {b22, y, x, w, z};
}

}  // namespace starinv
