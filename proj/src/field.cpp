#include "starinv/field.hpp"

#include <algorithm>
#include <cctype>

#include "starinv/error.hpp"

namespace starinv {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ring_mismatch: return "RingMismatch";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::idempotent_violation: return "IdempotentViolation";
    case Errc::corner_violation: return "CornerViolation";
    case Errc::not_mp_invertible: return "NotMPInvertible";
    case Errc::not_inner_inverse: return "NotInnerInverse";
    case Errc::not_a_1mp_inverse: return "NotA1MPInverse";
    case Errc::not_an_mp1_inverse: return "NotAnMP1Inverse";
    case Errc::not_partial_isometry: return "NotPartialIsometry";
    case Errc::not_rickart: return "NotRickart";
    case Errc::not_regular: return "NotRegular";
    case Errc::order_violation: return "OrderViolation";
    case Errc::uniqueness_violation: return "UniquenessViolation";
    case Errc::unknown_theorem: return "UnknownTheorem";
    case Errc::unknown_ring: return "UnknownRing";
    case Errc::parse_error: return "ParseError";
    case Errc::internal_error: return "InternalError";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

[[noreturn]] void bad_scalar(std::string_view text, const std::string& why) {
  throw Error(Errc::parse_error,
              "invalid scalar \"" + std::string(text) + "\": " + why);
}

}  // namespace

RationalField::Scalar RationalField::inv(const Scalar& a) const {
  if (is_zero(a)) internal_failure("inverse of zero rational");
  return Scalar(1) / a;
}

RationalField::Scalar RationalField::parse(std::string_view text) const {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num)) bad_scalar(text, "expected an integer or a fraction");
  if (slash != std::string_view::npos && !all_digits(den)) {
    bad_scalar(text, "malformed denominator");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(1);
  if (slash != std::string_view::npos) {
    d = mpz_class(std::string(den), 10);
    if (d == 0) bad_scalar(text, "zero denominator");
  }
  if (negative) n = -n;
  Scalar out(n, d);
  out.canonicalize();
  return out;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw Error(Errc::parse_error,
                "field modulus " + std::to_string(p) + " is not a supported prime");
  }
}

PrimeField::Scalar PrimeField::from_int(long value) const {
  const long m = static_cast<long>(p_);
  long r = value % m;
  if (r < 0) r += m;
  return static_cast<Scalar>(r);
}

PrimeField::Scalar PrimeField::inv(Scalar a) const {
  if (a == 0) internal_failure("inverse of zero residue");
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a, e = p_ - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<Scalar>(result);
}

PrimeField::Scalar PrimeField::parse(std::string_view text) const {
  if (!all_digits(text)) bad_scalar(text, "expected residue digits");
  if (text.size() > 10) bad_scalar(text, "residue out of range");
  const std::uint64_t v = std::stoull(std::string(text));
  if (v >= p_) {
    bad_scalar(text, "residue must be below " + std::to_string(p_));
  }
  return static_cast<Scalar>(v);
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace starinv
