#pragma once

#include <concepts>
#include <optional>
#include <string>

#include "starinv/error.hpp"
#include "starinv/linalg.hpp"
#include "starinv/matrix.hpp"
#include "starinv/ring.hpp"

namespace starinv {

template <class F>
std::string format_matrix(const Matrix<F>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i == 0 ? "[" : ",[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ",";
      out += m.field().format(m(i, j));
    }
    out += "]";
  }
  return out + "]";
}

// All matrices over F with transpose as the involution. Ring-generic
// operations that need 1 (orders, Peirce blocks) require square operands;
// inverse computations accept any shape.
template <class F>
class MatrixRing {
 public:
  using Value = Matrix<F>;

  MatrixRing() requires std::default_initializable<F> : field_() {}
  explicit MatrixRing(F field) : field_(std::move(field)) {}

  const F& field() const { return field_; }

  auto element(Value m) const {
    if (!(m.field() == field_)) {
      throw Error(Errc::ring_mismatch, "matrix over " + m.field().tag() +
                                           " used in ring over " + field_.tag());
    }
    return Element<MatrixRing>(*this, std::move(m));
  }

  Value add(const Value& a, const Value& b) const { return a + b; }
  Value neg(const Value& a) const { return -a; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value star(const Value& a) const { return a.transpose(); }
  bool equal(const Value& a, const Value& b) const { return a == b; }

  // Identity acting on a from the left.
  Value one_like(const Value& a) const { return Value::identity(field_, a.rows()); }
  Value zero_like(const Value& a) const { return Value(field_, a.rows(), a.cols()); }

  std::optional<Value> mp_inverse(const Value& a) const { return try_mp_inverse(a); }

  std::optional<Value> inner_inverse(const Value& a) const {
    if (auto x = try_mp_inverse(a)) return x;
    return starinv::inner_inverse(a);
  }

  // °b ⊆ °a  ⇔  Im a ⊆ Im b
  bool left_annihilator_leq(const Value& b, const Value& a) const {
    return column_space_leq(a, b);
  }
  // b° ⊆ a°  ⇔  row space of a ⊆ row space of b
  bool right_annihilator_leq(const Value& b, const Value& a) const {
    return row_space_leq(a, b);
  }

  std::optional<Value> left_projection(const Value& a) const {
    check_unital(a);
    return orthogonal_projector(a);
  }
  std::optional<Value> right_projection(const Value& a) const {
    check_unital(a);
    return orthogonal_projector(a.transpose());
  }

  // a·a⁻ is idempotent with the column space of a; a⁻·a with its row space.
  std::optional<Value> left_idempotent(const Value& a) const {
    if (auto e = left_projection(a)) return e;
    return a * starinv::inner_inverse(a);
  }
  std::optional<Value> right_idempotent(const Value& a) const {
    if (auto e = right_projection(a)) return e;
    return starinv::inner_inverse(a) * a;
  }

  void check_unital(const Value& a) const {
    if (!a.is_square()) {
      throw Error(Errc::dimension_mismatch,
                  "operation needs a square matrix, got " + a.shape());
    }
  }

  bool rank_subtractive(const Value& a, const Value& b) const {
    return starinv::rank_subtractive(a, b);
  }

  std::string describe(const Value& a) const { return format_matrix(a); }

  bool operator==(const MatrixRing& other) const { return field_ == other.field_; }

 private:
  F field_;
};

using RationalMatrixRing = MatrixRing<RationalField>;
using PrimeMatrixRing = MatrixRing<PrimeField>;

}  // namespace starinv
