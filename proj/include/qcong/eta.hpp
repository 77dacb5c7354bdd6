#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcong/series.hpp"

namespace qcong {

struct EtaFactor {
  std::uint64_t scale = 1;  // ell in f_ell = (q^ell; q^ell)_inf
  long long exponent = 0;
  friend bool operator==(const EtaFactor&, const EtaFactor&) = default;
};

// Formal product prod_ell f_ell^{e_ell}. The generating functions used
// throughout are instances, e.g. [(2, k-1), (1, -k)].
struct EtaQuotientSpec {
  std::vector<EtaFactor> factors;

  // merge duplicate scales, drop zero exponents, order by scale
  EtaQuotientSpec normalized() const;
  std::string to_string() const;  // "2^3 * 1^-4"
  friend bool operator==(const EtaQuotientSpec&, const EtaQuotientSpec&) = default;
};

struct PochhammerFactor {
  std::uint64_t offset = 1;  // a in (q^a; q^b)_inf, a >= 1
  bool denominator = false;
  friend bool operator==(const PochhammerFactor&, const PochhammerFactor&) = default;
};

// prod over residues of (q^a; q^b)_inf^{+-1}
struct PochhammerProductSpec {
  std::uint64_t modulus = 1;  // b
  std::vector<PochhammerFactor> factors;

  PochhammerProductSpec dilated(std::uint64_t t) const;
  PochhammerProductSpec reciprocal() const;
  std::string to_string() const;  // "[2,3;5]/[1,4;5]"
  friend bool operator==(const PochhammerProductSpec&, const PochhammerProductSpec&) = default;
};

// (q^ell; q^ell)_inf by the pentagonal number theorem: exponents
// ell*k(3k-1)/2 over k in Z, sign (-1)^k
Series f_ell(std::uint64_t ell, const Ring& ring, std::size_t terms);

// prod f_ell^{e}; negative exponents invert f_ell first and then raise the
// inverse to the positive power
Series eta_quotient(const EtaQuotientSpec& spec, const Ring& ring, std::size_t terms);

// sparse two-term factors (1 - q^{a+ib}) multiplied or divided in place with
// early truncation at the working precision
Series pochhammer_product(const PochhammerProductSpec& spec, const Ring& ring,
                          std::size_t terms);

// sum side of f_1^3: sum_k (-1)^k (2k+1) q^{k(k+1)/2}
Series jacobi_cube_sum(const Ring& ring, std::size_t terms);

// a(q) = (q^2,q^3;q^5)_inf / (q,q^4;q^5)_inf, the helper of the 5-dissection
PochhammerProductSpec quintic_helper_spec();

struct ThetaCheckResult {
  bool equal = false;
  std::optional<std::size_t> first_mismatch;
};

// compares the sum side sum_n q^{s n(n+1)/2 + t n(n-1)/2} of f(q^s, q^t) with
// the triple-product side (-q^s;q^{s+t}) (-q^t;q^{s+t}) (q^{s+t};q^{s+t}),
// both expanded independently in the exact ring
ThetaCheckResult theta_triple_product_check(std::uint64_t s, std::uint64_t t,
                                            std::size_t terms);

}  // namespace qcong
