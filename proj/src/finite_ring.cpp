#include "starinv/finite_ring.hpp"

#include <charconv>

#include "starinv/error.hpp"
#include "starinv/field.hpp"

namespace starinv {

namespace {

std::optional<std::uint32_t> parse_suffix(std::string_view id, std::string_view prefix) {
  if (id.substr(0, prefix.size()) != prefix) return std::nullopt;
  const auto digits = id.substr(prefix.size());
  std::uint32_t value = 0;
  const auto* end = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(digits.data(), end, value);
  if (digits.empty() || ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

}  // namespace

FiniteStarRing FiniteStarRing::zmod(std::uint32_t n) {
  if (n < 2 || n > max_carrier) {
    throw Error(Errc::unknown_ring, "z" + std::to_string(n) +
                                        ": modulus must lie in [2, " +
                                        std::to_string(max_carrier) + "]");
  }
  return FiniteStarRing(Kind::zmod, n);
}

FiniteStarRing FiniteStarRing::m2gf(std::uint32_t p) {
  if (!is_prime(p) || std::uint64_t{p} * p * p * p > max_carrier) {
    throw Error(Errc::unknown_ring,
                "m2gf" + std::to_string(p) + ": need a prime p with p^4 <= " +
                    std::to_string(max_carrier));
  }
  return FiniteStarRing(Kind::m2gf, p);
}

FiniteStarRing FiniteStarRing::from_id(std::string_view id) {
  if (auto p = parse_suffix(id, "m2gf")) return m2gf(*p);
  if (auto n = parse_suffix(id, "z")) return zmod(*n);
  throw Error(Errc::unknown_ring, "unknown ring id \"" + std::string(id) +
                                      "\" (expected z<n> or m2gf<p>)");
}

FiniteStarRing::FiniteStarRing(Kind kind, std::uint32_t modulus)
    : kind_(kind), modulus_(modulus) {
  if (kind_ == Kind::zmod) {
    size_ = modulus_;
    id_ = "z" + std::to_string(modulus_);
    one_ = 1;
  } else {
    size_ = std::size_t{modulus_} * modulus_ * modulus_ * modulus_;
    id_ = "m2gf" + std::to_string(modulus_);
    one_ = encode({1, 0, 0, 1});
  }
  if (size_ <= 256) {
    mul_table_.resize(size_ * size_);
    for (Value a = 0; a < size_; ++a)
      for (Value b = 0; b < size_; ++b) mul_table_[a * size_ + b] = mul_raw(a, b);
  }
  check_axioms();
  tabulate();
}

FiniteStarRing::M2 FiniteStarRing::decode(Value v) const {
  const std::uint32_t p = modulus_;
  return {v % p, (v / p) % p, (v / (p * p)) % p, v / (p * p * p)};
}

FiniteStarRing::Value FiniteStarRing::encode(const M2& m) const {
  const std::uint32_t p = modulus_;
  return m.a00 + p * (m.a01 + p * (m.a10 + p * m.a11));
}

FiniteStarRing::Value FiniteStarRing::add(Value a, Value b) const {
  if (kind_ == Kind::zmod) return (a + b) % modulus_;
  const auto x = decode(a), y = decode(b);
  const std::uint32_t p = modulus_;
  return encode({(x.a00 + y.a00) % p, (x.a01 + y.a01) % p, (x.a10 + y.a10) % p,
                 (x.a11 + y.a11) % p});
}

FiniteStarRing::Value FiniteStarRing::neg(Value a) const {
  const std::uint32_t p = modulus_;
  if (kind_ == Kind::zmod) return (p - a) % p;
  const auto x = decode(a);
  return encode({(p - x.a00) % p, (p - x.a01) % p, (p - x.a10) % p, (p - x.a11) % p});
}

FiniteStarRing::Value FiniteStarRing::mul_raw(Value a, Value b) const {
  const std::uint32_t p = modulus_;
  if (kind_ == Kind::zmod) {
    return static_cast<Value>(std::uint64_t{a} * b % p);
  }
  const auto x = decode(a), y = decode(b);
  return encode({(x.a00 * y.a00 + x.a01 * y.a10) % p, (x.a00 * y.a01 + x.a01 * y.a11) % p,
                 (x.a10 * y.a00 + x.a11 * y.a10) % p, (x.a10 * y.a01 + x.a11 * y.a11) % p});
}

FiniteStarRing::Value FiniteStarRing::star(Value a) const {
  if (kind_ == Kind::zmod) return a;
  const auto x = decode(a);
  return encode({x.a00, x.a10, x.a01, x.a11});
}

std::string FiniteStarRing::describe(Value a) const {
  if (kind_ == Kind::zmod) return std::to_string(a);
  const auto x = decode(a);
  return "[[" + std::to_string(x.a00) + "," + std::to_string(x.a01) + "],[" +
         std::to_string(x.a10) + "," + std::to_string(x.a11) + "]]";
}

std::string FiniteStarRing::carrier_description() const {
  if (kind_ == Kind::zmod) {
    return "integers mod " + std::to_string(modulus_) + ", identity involution";
  }
  return "2x2 matrices over GF(" + std::to_string(modulus_) + "), transpose involution";
}

void FiniteStarRing::check_axioms() {
  std::size_t count = 0;
  auto fail = [this](const std::string& law, Value a, Value b, Value c) {
    throw Error(Errc::internal_error, id_ + " violates " + law + " at (" +
                                          describe(a) + ", " + describe(b) + ", " +
                                          describe(c) + ")");
  };
  axioms_exhaustive_ = sweep_triples(size_, max_triples, [&](std::size_t i, std::size_t j,
                                                             std::size_t k) {
    const auto a = static_cast<Value>(i), b = static_cast<Value>(j),
               c = static_cast<Value>(k);
    ++count;
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("associativity", a, b, c);
    if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("left distributivity", a, b, c);
    if (mul(add(a, b), c) != add(mul(a, c), mul(b, c))) fail("right distributivity", a, b, c);
    if (add(add(a, b), c) != add(a, add(b, c))) fail("additive associativity", a, b, c);
  });
  for (Value a = 0; a < size_; ++a) {
    if (star(star(a)) != a) fail("(a*)* = a", a, a, a);
    if (mul(one_, a) != a || mul(a, one_) != a) fail("unit law", a, one_, a);
    if (add(a, neg(a)) != 0) fail("additive inverse", a, a, a);
    for (Value b = 0; b < size_; ++b) {
      ++count;
      if (star(mul(a, b)) != mul(star(b), star(a))) fail("(ab)* = b*a*", a, b, 0);
      if (star(add(a, b)) != add(star(a), star(b))) fail("(a+b)* = a*+b*", a, b, 0);
      if (add(a, b) != add(b, a)) fail("additive commutativity", a, b, 0);
    }
  }
  if (star(one_) != one_) fail("1* = 1", one_, one_, one_);
  axiom_instances_ = count;
}

void FiniteStarRing::tabulate() {
  const std::size_t n = size_;
  dagger_.assign(n, std::nullopt);
  inner_.assign(n, std::nullopt);
  left_ann_.assign(n, boost::dynamic_bitset<>(n));
  right_ann_.assign(n, boost::dynamic_bitset<>(n));

  for (Value a = 0; a < n; ++a) {
    std::optional<Value> first_inner;
    for (Value x = 0; x < n; ++x) {
      const Value ax = mul(a, x), xa = mul(x, a);
      if (xa == 0) left_ann_[a].set(x);
      if (ax == 0) right_ann_[a].set(x);
      if (mul(ax, a) != a) continue;
      if (!first_inner) first_inner = x;
      if (mul(xa, x) == x && star(ax) == ax && star(xa) == xa) {
        if (dagger_[a]) {
          throw Error(Errc::uniqueness_violation,
                      id_ + ": two Moore-Penrose inverses of " + describe(a) + ": " +
                          describe(*dagger_[a]) + " and " + describe(x));
        }
        dagger_[a] = x;
      }
    }
    inner_[a] = dagger_[a] ? dagger_[a] : first_inner;
    if (mul(a, a) == a) {
      idempotents_.push_back(a);
      if (star(a) == a) projections_.push_back(a);
    }
  }

  lp_.assign(n, std::nullopt);
  rp_.assign(n, std::nullopt);
  left_idem_.assign(n, std::nullopt);
  right_idem_.assign(n, std::nullopt);
  for (Value a = 0; a < n; ++a) {
    for (Value e : projections_) {
      if (left_ann_[e] == left_ann_[a]) {
        if (lp_[a]) {
          throw Error(Errc::uniqueness_violation,
                      id_ + ": two left projections of " + describe(a));
        }
        lp_[a] = e;
      }
      if (right_ann_[e] == right_ann_[a]) {
        if (rp_[a]) {
          throw Error(Errc::uniqueness_violation,
                      id_ + ": two right projections of " + describe(a));
        }
        rp_[a] = e;
      }
    }
    left_idem_[a] = lp_[a];
    right_idem_[a] = rp_[a];
    for (Value e : idempotents_) {
      if (!left_idem_[a] && left_ann_[e] == left_ann_[a]) left_idem_[a] = e;
      if (!right_idem_[a] && right_ann_[e] == right_ann_[a]) right_idem_[a] = e;
    }
  }

  rickart_star_ = rickart_ = true;
  for (Value a = 0; a < n; ++a) {
    if (!lp_[a] || !rp_[a]) rickart_star_ = false;
    if (!left_idem_[a] || !right_idem_[a]) rickart_ = false;
  }
}

}  // namespace starinv
