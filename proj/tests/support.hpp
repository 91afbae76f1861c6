#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "starinv/matrix_ring.hpp"

namespace starinv::test {

inline RationalMatrix qmat(std::initializer_list<std::initializer_list<const char*>> rows) {
  const RationalField f;
  std::vector<Rational> e;
  std::size_t cols = 0;
  for (const auto& row : rows) {
    cols = row.size();
    for (const char* s : row) e.push_back(f.parse(s));
  }
  return RationalMatrix(f, rows.size(), cols, std::move(e));
}

inline RationalMatrix imat(std::initializer_list<std::initializer_list<long>> rows) {
  return RationalMatrix::from_rows(RationalField{}, rows);
}

inline PrimeMatrix pmat(std::uint32_t p, std::initializer_list<std::initializer_list<long>> rows) {
  return PrimeMatrix::from_rows(PrimeField(p), rows);
}

// Entries n/d with n in [-9, 9], d in [1, 9].
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

  Rational scalar() {
    Rational q(mpz_class(num_(rng_)), mpz_class(den_(rng_)));
    q.canonicalize();
    return q;
  }

  RationalMatrix matrix(std::size_t rows, std::size_t cols) {
    std::vector<Rational> e;
    for (std::size_t i = 0; i < rows * cols; ++i) e.push_back(scalar());
    return RationalMatrix(RationalField{}, rows, cols, std::move(e));
  }

  // Product of random factors through an inner dimension k, so ranks below
  // min(rows, cols) are common.
  RationalMatrix of_rank_at_most(std::size_t rows, std::size_t cols, std::size_t k) {
    return matrix(rows, k) * matrix(k, cols);
  }

  std::size_t size(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  std::uniform_int_distribution<long> num_{-9, 9};
  std::uniform_int_distribution<long> den_{1, 9};
};

}  // namespace starinv::test
