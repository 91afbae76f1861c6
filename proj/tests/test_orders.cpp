#include "doctest.h"

#include <set>

#include "starinv/finite_ring.hpp"
#include "starinv/orders.hpp"
#include "support.hpp"

using namespace starinv;
using test::imat;
using test::qmat;

namespace {

const RationalMatrixRing Q;

auto q(std::initializer_list<std::initializer_list<long>> rows) { return Q.element(imat(rows)); }

template <class Fn>
Errc code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return Errc::internal_error;
}

const auto diag10 = [] { return q({{1, 0}, {0, 0}}); };
const auto id2 = [] { return q({{1, 0}, {0, 1}}); };
const auto upper = [] { return q({{1, 1}, {0, 1}}); };

}  // namespace

TEST_CASE("lp and rp of matrices") {
  const auto a = q({{1, 1}, {0, 0}});
  CHECK(lp(a) == diag10());
  CHECK(rp(a) == Q.element(qmat({{"1/2", "1/2"}, {"1/2", "1/2"}})));
  CHECK(lp(a) == a * dagger(a));
  CHECK(rp(a) == dagger(a) * a);
  CHECK(is_zero(lp(zero(a))));
  CHECK(is_zero(rp(zero(a))));
  CHECK(lp(q({{2, 1}, {1, 1}})) == id2());
  CHECK(rp(q({{2, 1}, {1, 1}})) == id2());
}

TEST_CASE("LP family members") {
  const auto a = diag10();
  CHECK(lp_family_member(a, zero(a)) == lp(a));
  const auto e = lp_family_member(a, q({{0, 5}, {0, 0}}));
  CHECK(e == q({{1, 5}, {0, 0}}));
  CHECK(is_idempotent(e));
  CHECK(left_annihilator_leq(e, a));
  CHECK(left_annihilator_leq(a, e));
  CHECK(code_of([&] { lp_family_member(a, q({{0, 0}, {5, 0}})); }) == Errc::corner_violation);
  const auto f = rp_family_member(a, q({{0, 0}, {5, 0}}));
  CHECK(in_rp_set(a, f));

  const auto z6 = FiniteStarRing::zmod(6);
  const FiniteElement three(z6, 3);
  std::set<FiniteStarRing::Value> lps;
  for (FiniteStarRing::Value e6 : z6.projections())
    if (in_lp_set(three, FiniteElement(z6, e6))) lps.insert(e6);
  CHECK(lps == std::set<FiniteStarRing::Value>{3});
  CHECK(lp(three) == three);
}

TEST_CASE("minus order") {
  CHECK(leq_minus(diag10(), id2()).holds);
  const auto v = leq_minus(diag10(), upper());
  CHECK(v.holds);
  const auto& g = *v.find("a_minus");
  CHECK(minus_equations(diag10(), upper(), g));
  CHECK(*v.find("p") * upper() == diag10());
  CHECK(upper() * *v.find("q") == diag10());

  const auto no = leq_minus(diag10(), q({{0, 0}, {0, 1}}));
  CHECK_FALSE(no.holds);
  CHECK(no.reason == "rank(b - a) ≠ rank(b) - rank(a)");
  CHECK(leq_minus(upper(), upper()).holds);

  const auto z4 = FiniteStarRing::zmod(4);
  CHECK(code_of([&] { leq_minus(FiniteElement(z4, 2), FiniteElement(z4, 2)); }) ==
        Errc::not_regular);
}

TEST_CASE("1MP order") {
  const auto yes = leq_1mp(diag10(), id2());
  CHECK(yes.holds);
  CHECK(dagger(diag10()) * id2() == diag10());

  const auto no = leq_1mp(diag10(), upper());
  CHECK_FALSE(no.holds);
  CHECK(no.reason == "a†b ≠ a†a");
  CHECK(dagger(diag10()) * upper() == q({{1, 1}, {0, 0}}));
  CHECK(leq_minus(diag10(), upper()).holds);

  CHECK(leq_1mp(upper(), upper()).holds);
}

TEST_CASE("MP1 order is the transpose of the 1MP order") {
  CHECK(leq_mp1(star(diag10()), star(id2())).holds);
  const auto no = leq_mp1(star(diag10()), star(upper()));
  CHECK_FALSE(no.holds);
  CHECK(no.reason == "ba† ≠ aa†");
  CHECK(leq_mp1(upper(), upper()).holds);
}

TEST_CASE("diamond order") {
  const auto yes = leq_diamond(diag10(), id2());
  CHECK(yes.holds);
  CHECK(*yes.find("ab*a") == diag10());
  CHECK(leq_diamond(upper(), upper()).holds);
  const auto no = leq_diamond(diag10(), q({{2, 0}, {0, 1}}));
  CHECK_FALSE(no.holds);
  CHECK(no.reason == "ab*a ≠ aa*a");
  CHECK(leq_diamond(id2(), diag10()).reason == "°b ⊄ °a");
}

TEST_CASE("plus order") {
  CHECK(leq_plus(diag10(), id2()).holds);
  CHECK(leq_plus(upper(), upper()).holds);
  const auto v = leq_plus(diag10(), upper());
  CHECK(v.holds);
  CHECK(plus_witness_ok(diag10(), upper(), *v.find("q_tilde"), *v.find("q")));
  CHECK_FALSE(leq_plus(id2(), diag10()).holds);
}

TEST_CASE("zero is below everything") {
  test::RationalSampler s(0x2e50);
  const auto z = q({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  CHECK(dagger(z) == z);
  CHECK(is_zero(lp(z)));
  for (int i = 0; i < 10; ++i) {
    const auto b = Q.element(s.matrix(3, 3));
    for (auto rel : {Relation::one_mp, Relation::mp_one, Relation::minus, Relation::diamond,
                     Relation::plus}) {
      CHECK(decide(rel, z, b).holds);
    }
  }
}

TEST_CASE("every relation is reflexive on random matrices") {
  test::RationalSampler s(0x4ef1);
  for (int i = 0; i < 25; ++i) {
    const auto n = s.size(1, 4);
    const auto a = Q.element(s.of_rank_at_most(n, n, s.size(1, n)));
    for (auto rel : {Relation::one_mp, Relation::mp_one, Relation::minus, Relation::diamond,
                     Relation::plus}) {
      CHECK(decide(rel, a, a).holds);
    }
  }
}

TEST_CASE("order operands must be comparable") {
  const auto rect = q({{1, 0, 0}, {0, 0, 0}});
  CHECK(code_of([&] { leq_minus(rect, rect); }) == Errc::dimension_mismatch);
  CHECK(code_of([&] { leq_1mp(diag10(), q({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})); }) ==
        Errc::dimension_mismatch);
  CHECK(parse_relation("1mp") == Relation::one_mp);
  CHECK(parse_relation("mp1") == Relation::mp_one);
  CHECK_FALSE(parse_relation("star").has_value());
}

TEST_CASE("above_1mp") {
  const auto a = diag10();
  CHECK(above_1mp(a, {zero(a), zero(a)}) == a);
  CHECK(above_1mp(a, {q({{0, 0}, {0, 1}}), zero(a)}) == id2());
  CHECK(code_of([&] { above_1mp(a, {q({{0, 1}, {0, 0}}), zero(a)}); }) ==
        Errc::corner_violation);

  const auto z6 = FiniteStarRing::zmod(6);
  const FiniteElement two(z6, 2);
  // p = q = 2·2† = 4, so b4 ∈ 3·ℤ₆·3 = {0, 3} and d ∈ 3·ℤ₆·4 = {0}.
  std::set<FiniteStarRing::Value> image, above;
  for (FiniteStarRing::Value b4 : {0u, 3u})
    image.insert(above_1mp(two, {FiniteElement(z6, b4), FiniteElement(z6, 0)}).value());
  for (FiniteStarRing::Value b = 0; b < 6; ++b)
    if (leq_1mp(two, FiniteElement(z6, b)).holds) above.insert(b);
  CHECK(image == above);
  CHECK(image == std::set<FiniteStarRing::Value>{2, 5});
}

TEST_CASE("above_1mp lands above a on random rational data") {
  test::RationalSampler s(0xab0e);
  for (int i = 0; i < 40; ++i) {
    const auto n = s.size(2, 4);
    const auto a = Q.element(s.of_rank_at_most(n, n, s.size(1, n - 1)));
    const auto ad = dagger(a);
    const auto p = a * ad, qq = ad * a;
    const auto w1 = Q.element(s.matrix(n, n)), w2 = Q.element(s.matrix(n, n));
    const auto b4 = one_minus(p) * w1 * one_minus(qq);
    const auto d = one_minus(qq) * w2 * p;
    const auto b = above_1mp(a, {b4, d});
    CHECK(leq_1mp(a, b).holds);
    const auto bm = above_mp1(a, {b4, qq * w2 * one_minus(p)});
    CHECK(leq_mp1(a, bm).holds);
  }
}

TEST_CASE("block check of b{-†}") {
  const auto a = diag10();
  const auto b = id2();
  CHECK(b_1mp_inverse_check(a, b, dagger(b)));
  // x21 block [[0,0],[1,0]] breaks b4·x21 = -b3·a† while x stays outside b{1,2,3}.
  const auto x = q({{1, 0}, {1, 1}});
  CHECK_FALSE(b_1mp_inverse_check(a, b, x));
  CHECK_FALSE(is_member(b, x, class_123));
  CHECK(code_of([&] { b_1mp_inverse_check(a, upper(), x); }) == Errc::order_violation);
  CHECK(b_mp1_inverse_check(a, b, dagger(b)));
}

TEST_CASE("plus block composition") {
  const auto a = diag10();
  const auto z = zero(a);
  const auto r0 = plus_block_compose(a, {z, z, z, z, z});
  REQUIRE(std::holds_alternative<Element<RationalMatrixRing>>(r0));
  CHECK(std::get<0>(r0) == a);

  const auto r1 = plus_block_compose(a, {q({{0, 0}, {0, 1}}), z, z, z, z});
  REQUIRE(std::holds_alternative<Element<RationalMatrixRing>>(r1));
  CHECK(std::get<0>(r1) == id2());
  CHECK(leq_plus(a, id2()).holds);

  const auto v = leq_plus(a, upper());
  REQUIRE(v.holds);
  const auto data = plus_block_decompose(a, upper(), *v.find("q_tilde"), *v.find("q"));
  const auto back = plus_block_compose(a, data);
  REQUIRE(std::holds_alternative<Element<RationalMatrixRing>>(back));
  CHECK(std::get<0>(back) == upper());

  // w ≠ 0 with b22 = 0 makes b's left annihilator too large.
  const auto fail = plus_block_compose(a, {z, z, z, q({{0, 0}, {1, 0}}), z});
  REQUIRE(std::holds_alternative<PlusConditionFailure>(fail));
  CHECK(std::get<1>(fail).which == PlusConditionFailure::Which::left_annihilator);
}
