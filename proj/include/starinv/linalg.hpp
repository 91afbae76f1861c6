#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "starinv/error.hpp"
#include "starinv/matrix.hpp"

namespace starinv {

template <class F>
struct Echelon {
  Matrix<F> reduced;                // reduced row-echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Gauss-Jordan elimination to reduced row-echelon form. Exact over any field.
template <class F>
Echelon<F> rref(const Matrix<F>& m) {
  const F& f = m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<typename F::Scalar> e(m.entries().begin(), m.entries().end());
  auto at = [&](std::size_t i, std::size_t j) -> typename F::Scalar& {
    return e[i * cols + j];
  };

  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && f.is_zero(at(pivot, col))) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(pivot, j), at(row, j));
    }
    const auto scale = f.inv(at(row, col));
    for (std::size_t j = col; j < cols; ++j) at(row, j) = f.mul(at(row, j), scale);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || f.is_zero(at(i, col))) continue;
      const auto factor = at(i, col);
      for (std::size_t j = col; j < cols; ++j)
        at(i, j) = f.sub(at(i, j), f.mul(factor, at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {Matrix<F>(f, rows, cols, std::move(e)), std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).pivots.size();
}

// a = left * right with left m x r of full column rank and right r x n of
// full row rank.
template <class F>
struct RankFactorization {
  Matrix<F> left;
  Matrix<F> right;
  std::size_t rank;
};

// left = pivot columns of a, right = nonzero rows of rref(a).
template <class F>
RankFactorization<F> full_rank_factorize(const Matrix<F>& a) {
  auto ech = rref(a);
  const std::size_t r = ech.pivots.size();
  std::vector<std::size_t> lead_rows(r);
  for (std::size_t i = 0; i < r; ++i) lead_rows[i] = i;
  return {a.select_columns(ech.pivots), ech.reduced.select_rows(lead_rows), r};
}

// Inverse of a nonsingular square matrix; nullopt when singular.
template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  if (!m.is_square()) {
    throw Error(Errc::dimension_mismatch, "inverse of non-square " + m.shape());
  }
  const std::size_t n = m.rows();
  auto ech = rref(hstack(m, Matrix<F>::identity(m.field(), n)));
  if (ech.pivots.size() < n || (n > 0 && ech.pivots[n - 1] != n - 1)) {
    return std::nullopt;
  }
  std::vector<typename F::Scalar> e;
  e.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e.push_back(ech.reduced(i, n + j));
  return Matrix<F>(m.field(), n, n, std::move(e));
}

template <class F>
bool satisfies_penrose(const Matrix<F>& a, const Matrix<F>& x) {
  if (x.rows() != a.cols() || x.cols() != a.rows()) return false;
  const auto ax = a * x;
  const auto xa = x * a;
  return ax * a == a && xa * x == x && ax.transpose() == ax &&
         xa.transpose() == xa;
}

// Moore-Penrose inverse under the transpose involution, computed from a rank
// factorization a = FG as G*(GG*)^-1 (F*F)^-1 F*. Over GF(p) the Gram
// factors can be singular, in which case a has no Moore-Penrose inverse.
template <class F>
std::optional<Matrix<F>> try_mp_inverse(const Matrix<F>& a) {
  const auto fac = full_rank_factorize(a);
  if (fac.rank == 0) return Matrix<F>(a.field(), a.cols(), a.rows());
  const auto ft = fac.left.transpose();
  const auto gt = fac.right.transpose();
  const auto row_gram_inv = inverse(fac.right * gt);
  const auto col_gram_inv = inverse(ft * fac.left);
  if (!row_gram_inv || !col_gram_inv) return std::nullopt;
  auto x = gt * *row_gram_inv * *col_gram_inv * ft;
  if (!satisfies_penrose(a, x)) {
    internal_failure("rank-factorization pseudoinverse of " + a.shape() +
                     " fails the Penrose equations");
  }
  return x;
}

template <class F>
Matrix<F> mp_inverse(const Matrix<F>& a) {
  auto x = try_mp_inverse(a);
  if (!x) {
    throw Error(Errc::not_mp_invertible,
                a.shape() + " matrix over " + a.field().tag() +
                    " has no Moore-Penrose inverse under transpose");
  }
  return *std::move(x);
}

// Some inner inverse x (axa = a). Matrices over a field are always regular:
// with a = FG, x = G_r F_l where G_r selects the pivot columns of G (which
// form an identity block) and F_l inverts r independent rows of F.
template <class F>
Matrix<F> inner_inverse(const Matrix<F>& a) {
  const F& f = a.field();
  const auto fac = full_rank_factorize(a);
  const std::size_t r = fac.rank;
  if (r == 0) return Matrix<F>(f, a.cols(), a.rows());

  const auto col_pivots = rref(fac.right).pivots;
  std::vector<typename F::Scalar> gr(a.cols() * r, f.zero());
  for (std::size_t k = 0; k < r; ++k) gr[col_pivots[k] * r + k] = f.one();
  const Matrix<F> right_inv(f, a.cols(), r, std::move(gr));

  const auto row_pivots = rref(fac.left.transpose()).pivots;
  const auto block_inv = inverse(fac.left.select_rows(row_pivots));
  if (!block_inv) internal_failure("independent rows did not form a basis");
  std::vector<typename F::Scalar> sel(r * a.rows(), f.zero());
  for (std::size_t k = 0; k < r; ++k) sel[k * a.rows() + row_pivots[k]] = f.one();
  const auto left_inv = *block_inv * Matrix<F>(f, r, a.rows(), std::move(sel));

  auto x = right_inv * left_inv;
  if (!(a * x * a == a)) internal_failure("inner inverse construction");
  return x;
}

// Every column of a lies in the column space of b. For square matrices this
// is the left-annihilator containment  {x : xb = 0} ⊆ {x : xa = 0}.
template <class F>
bool column_space_leq(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows()) {
    throw Error(Errc::dimension_mismatch,
                "column spaces of " + a.shape() + " and " + b.shape());
  }
  if (!(a.field() == b.field())) {
    throw Error(Errc::ring_mismatch, "column spaces over different fields");
  }
  return rank(hstack(b, a)) == rank(b);
}

// Every row of a lies in the row space of b; equivalently
// {x : bx = 0} ⊆ {x : ax = 0}.
template <class F>
bool row_space_leq(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.cols()) {
    throw Error(Errc::dimension_mismatch,
                "row spaces of " + a.shape() + " and " + b.shape());
  }
  return column_space_leq(a.transpose(), b.transpose());
}

// The symmetric idempotent with the same column space as a, if one exists
// (it need not over GF(p), where a basis can have a singular Gram matrix).
template <class F>
std::optional<Matrix<F>> orthogonal_projector(const Matrix<F>& a) {
  const auto ech = rref(a);
  if (ech.pivots.empty()) return Matrix<F>(a.field(), a.rows(), a.rows());
  const auto basis = a.select_columns(ech.pivots);
  const auto bt = basis.transpose();
  const auto gram_inv = inverse(bt * basis);
  if (!gram_inv) return std::nullopt;
  return basis * *gram_inv * bt;
}

// One solution of A v = rhs (rhs a column), or nullopt if inconsistent.
template <class F>
std::optional<Matrix<F>> solve_linear(const Matrix<F>& a, const Matrix<F>& rhs) {
  if (rhs.cols() != 1 || rhs.rows() != a.rows()) {
    throw Error(Errc::dimension_mismatch,
                "solve " + a.shape() + " against " + rhs.shape());
  }
  const F& f = a.field();
  const auto ech = rref(hstack(a, rhs));
  const std::size_t n = a.cols();
  std::vector<typename F::Scalar> v(n, f.zero());
  for (std::size_t k = 0; k < ech.pivots.size(); ++k) {
    if (ech.pivots[k] == n) return std::nullopt;
    v[ech.pivots[k]] = ech.reduced(k, n);
  }
  return Matrix<F>(f, n, 1, std::move(v));
}

// Basis of {v : A v = 0}, one column vector per free variable.
template <class F>
std::vector<Matrix<F>> nullspace_basis(const Matrix<F>& a) {
  const F& f = a.field();
  const auto ech = rref(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<Matrix<F>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::Scalar> v(n, f.zero());
    v[free] = f.one();
    for (std::size_t k = 0; k < ech.pivots.size(); ++k)
      v[ech.pivots[k]] = f.neg(ech.reduced(k, free));
    basis.emplace_back(f, n, 1, std::move(v));
  }
  return basis;
}

// rank(b - a) = rank(b) - rank(a): the rank-subtractivity criterion for the
// minus order on matrices over a field.
template <class F>
bool rank_subtractive(const Matrix<F>& a, const Matrix<F>& b) {
  return rank(b - a) + rank(a) == rank(b);
}

}  // namespace starinv
