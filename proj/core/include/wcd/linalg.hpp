#pragma once

#include <gmpxx.h>

#include <vector>

namespace wcd {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix(int rows, int cols);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  mpz_class& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const mpz_class& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int rows_;
  int cols_;
  std::vector<mpz_class> e_;
};

/// Field selector: characteristic 0 (the rationals) or a prime p < 2^32
/// (the elimination kernels work in machine words). Construction rejects
/// composite characteristics via deterministic trial division.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(0); }
  static FieldSpec gf(const mpz_class& p);

  bool is_rationals() const { return characteristic_ == 0; }
  const mpz_class& characteristic() const { return characteristic_; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(mpz_class c) : characteristic_(std::move(c)) {}
  mpz_class characteristic_;
};

/// Rank of m over the chosen field: fraction-free Bareiss elimination over
/// the rationals, ordinary elimination on the mod-p image over GF(p).
int rank(const IntMatrix& m, const FieldSpec& f);

/// Nonzero Smith normal form diagonal d1 | d2 | ... | dr, normalized
/// positive. r equals the rank over the rationals, and for any prime p the
/// rank over GF(p) equals the number of factors not divisible by p.
struct InvariantFactors {
  std::vector<mpz_class> factors;
};

InvariantFactors invariant_factors(const IntMatrix& m);

/// Basis of {x : m x = 0} over the chosen field. Over the rationals the
/// vectors are primitive integer vectors (content 1, leading entry
/// positive); over GF(p) the entries lie in [0, p). Basis size is
/// cols - rank(m, f).
std::vector<std::vector<mpz_class>> nullspace_basis(const IntMatrix& m, const FieldSpec& f);

/// Distinct prime divisors of |n|, ascending. Empty for n in {-1, 0, 1}.
std::vector<mpz_class> distinct_prime_factors(const mpz_class& n);

}  // namespace wcd
