#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace starinv {

using Rational = mpq_class;

// The field of rationals with arbitrary-precision numerator and denominator.
// Scalars are kept canonical: lowest terms, positive denominator.
struct RationalField {
  using Scalar = Rational;

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_int(long value) const { return Scalar(value); }

  Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
  Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
  Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
  Scalar neg(const Scalar& a) const { return -a; }
  Scalar inv(const Scalar& a) const;
  bool is_zero(const Scalar& a) const { return sgn(a) == 0; }
  bool equal(const Scalar& a, const Scalar& b) const { return a == b; }

  // "-7/2", "3", "0": sign on the numerator, no denominator when it is 1.
  std::string format(const Scalar& a) const { return a.get_str(); }
  // Accepts [+-]digits or [+-]digits/digits; throws Error(parse_error).
  Scalar parse(std::string_view text) const;
  std::string tag() const { return "rational"; }

  bool operator==(const RationalField&) const = default;
};

// GF(p) for a prime p < 2^31; residues live in [0, p).
class PrimeField {
 public:
  using Scalar = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }

  Scalar zero() const { return 0; }
  Scalar one() const { return 1; }
  Scalar from_int(long value) const;

  Scalar add(Scalar a, Scalar b) const {
    return static_cast<Scalar>((std::uint64_t{a} + b) % p_);
  }
  Scalar sub(Scalar a, Scalar b) const {
    return static_cast<Scalar>((std::uint64_t{a} + p_ - b) % p_);
  }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>((std::uint64_t{a} * b) % p_);
  }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar inv(Scalar a) const;
  bool is_zero(Scalar a) const { return a == 0; }
  bool equal(Scalar a, Scalar b) const { return a == b; }

  std::string format(Scalar a) const { return std::to_string(a); }
  // Accepts residue digits strictly below p.
  Scalar parse(std::string_view text) const;
  std::string tag() const { return "gf:" + std::to_string(p_); }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace starinv
