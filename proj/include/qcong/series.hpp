#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "qcong/ring.hpp"

namespace qcong {

// Truncated formal power series in q. A Series knows its coefficients for
// exponents 0..precision()-1 and nothing beyond; every operation returns the
// tightest sound precision (documented per operation). Values are immutable
// once constructed, so they are safe to share across threads.
class Series {
 public:
  static Series zero(const Ring& ring, std::size_t precision);
  static Series one(const Ring& ring, std::size_t precision);
  // canonicalizes into the ring; an empty sequence is rejected
  static Series from_ints(const Ring& ring, std::span<const long long> coeffs);
  static Series from_ints(const Ring& ring, std::initializer_list<long long> coeffs);
  static Series from_mpz(const Ring& ring, std::vector<mpz_class> coeffs);

  const Ring& ring() const { return ring_; }
  std::size_t precision() const;

  // canonical coefficient value (the residue in a modular ring)
  mpz_class at(std::size_t i) const;
  bool nonzero_at(std::size_t i) const;
  bool is_zero() const;
  std::optional<std::size_t> first_nonzero() const;

  // coefficientwise; operands must share a ring, result precision = min
  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  // Cauchy product truncated to min precision, O(N^2) ring operations
  friend Series operator*(const Series& a, const Series& b);
  Series operator-() const;
  Series scaled(long long c) const;

  // 1/a by the linear recurrence b_n = -a_0^{-1} sum_{i=1..n} a_i b_{n-i};
  // the constant term must be a unit (+-1 exact, coprime to m modular)
  Series inverse() const;
  // binary exponentiation; pow(a, 0) = 1, negative e routes through inverse()
  Series pow(long long e) const;
  // q -> q^t substitution; result precision (precision()-1)*t + 1
  Series dilated(std::uint64_t t) const;
  // multiply by q^t; result precision precision() + t
  Series shifted(std::uint64_t t) const;
  // coefficient n of the result is coefficient step*n+offset of the input;
  // result precision floor((precision()-1-offset)/step) + 1
  Series extract_progression(std::uint64_t step, std::uint64_t offset) const;
  // exact -> modular coefficient reduction, same precision
  Series reduced_mod(std::uint64_t m) const;
  // forget coefficients beyond the first n (no-op when already shorter)
  Series truncated(std::size_t n) const;

  bool operator==(const Series&) const = default;

 private:
  using ZVec = std::vector<mpz_class>;
  using MVec = std::vector<std::uint64_t>;

  Series(Ring ring, ZVec coeffs) : ring_(ring), coeffs_(std::move(coeffs)) {}
  Series(Ring ring, MVec coeffs) : ring_(ring), coeffs_(std::move(coeffs)) {}

  const ZVec& zc() const { return std::get<ZVec>(coeffs_); }
  const MVec& mc() const { return std::get<MVec>(coeffs_); }

  Ring ring_;
  std::variant<ZVec, MVec> coeffs_;

  friend class SeriesBuilder;
};

// index of the first differing coefficient below the shared precision
std::optional<std::size_t> first_mismatch(const Series& a, const Series& b);

// mutable coefficient buffer for constructors that assemble a series in
// place (pentagonal sums, sparse binomial products); freezes into a Series
class SeriesBuilder {
 public:
  SeriesBuilder(const Ring& ring, std::size_t precision);

  std::size_t precision() const { return n_; }
  const Ring& ring() const { return ring_; }

  void add_term(std::size_t exponent, long long value);
  // in-place multiply by (1 + sign*q^c), c >= 1
  void mul_binomial(std::size_t c, int sign);
  // in-place divide by (1 - q^c), c >= 1
  void div_one_minus(std::size_t c);

  Series build() &&;

 private:
  Ring ring_;
  std::size_t n_;
  std::variant<std::vector<mpz_class>, std::vector<std::uint64_t>> buf_;
};

}  // namespace qcong
