#include "qcong/eta.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qcong {

EtaQuotientSpec EtaQuotientSpec::normalized() const {
  std::map<std::uint64_t, long long> merged;
  for (const auto& f : factors) {
    if (f.scale == 0) throw std::invalid_argument("eta scale must be positive");
    merged[f.scale] += f.exponent;
  }
  EtaQuotientSpec out;
  for (const auto& [scale, e] : merged)
    if (e != 0) out.factors.push_back({scale, e});
  return out;
}

std::string EtaQuotientSpec::to_string() const {
  if (factors.empty()) return "1^0";
  std::string s;
  for (const auto& f : factors) {
    if (!s.empty()) s += " * ";
    s += std::to_string(f.scale) + "^" + std::to_string(f.exponent);
  }
  return s;
}

PochhammerProductSpec PochhammerProductSpec::dilated(std::uint64_t t) const {
  if (t == 0) throw std::invalid_argument("dilation factor must be positive");
  PochhammerProductSpec out{modulus * t, factors};
  for (auto& f : out.factors) f.offset *= t;
  return out;
}

PochhammerProductSpec PochhammerProductSpec::reciprocal() const {
  PochhammerProductSpec out = *this;
  for (auto& f : out.factors) f.denominator = !f.denominator;
  return out;
}

std::string PochhammerProductSpec::to_string() const {
  auto group = [&](bool denom) {
    std::string s;
    for (const auto& f : factors) {
      if (f.denominator != denom) continue;
      if (!s.empty()) s += ",";
      s += std::to_string(f.offset);
    }
    if (s.empty()) return std::string{};
    return "[" + s + ";" + std::to_string(modulus) + "]";
  };
  std::string num = group(false), den = group(true);
  if (num.empty() && den.empty()) return "[;" + std::to_string(modulus) + "]";
  if (den.empty()) return num;
  if (num.empty()) return "1/" + den;
  return num + "/" + den;
}

Series f_ell(std::uint64_t ell, const Ring& ring, std::size_t terms) {
  if (ell == 0) throw std::invalid_argument("eta scale must be positive");
  SeriesBuilder b(ring, terms);
  for (std::uint64_t k = 0;; ++k) {
    // generalized pentagonal exponents ell*k(3k-1)/2 and ell*k(3k+1)/2
    std::uint64_t g1 = ell * (k * (3 * k - 1) / 2);
    std::uint64_t g2 = ell * (k * (3 * k + 1) / 2);
    if (g1 >= terms && g2 >= terms) break;
    long long sign = (k % 2 == 0) ? 1 : -1;
    if (g1 < terms) b.add_term(g1, sign);
    if (k > 0 && g2 < terms) b.add_term(g2, sign);
  }
  return std::move(b).build();
}

Series eta_quotient(const EtaQuotientSpec& spec, const Ring& ring, std::size_t terms) {
  EtaQuotientSpec norm = spec.normalized();
  Series result = Series::one(ring, terms);
  for (const auto& f : norm.factors) {
    Series base = f_ell(f.scale, ring, terms);
    if (f.exponent > 0)
      result = result * base.pow(f.exponent);
    else
      result = result * base.inverse().pow(-f.exponent);
  }
  return result;
}

Series pochhammer_product(const PochhammerProductSpec& spec, const Ring& ring,
                          std::size_t terms) {
  if (spec.modulus == 0) throw std::invalid_argument("pochhammer modulus must be positive");
  SeriesBuilder b(ring, terms);
  b.add_term(0, 1);
  for (const auto& f : spec.factors) {
    if (f.offset == 0) throw std::invalid_argument("pochhammer offset must be positive");
    for (std::uint64_t c = f.offset; c < terms; c += spec.modulus) {
      if (f.denominator)
        b.div_one_minus(c);
      else
        b.mul_binomial(c, -1);
    }
  }
  return std::move(b).build();
}

Series jacobi_cube_sum(const Ring& ring, std::size_t terms) {
  SeriesBuilder b(ring, terms);
  for (std::uint64_t k = 0;; ++k) {
    std::uint64_t e = k * (k + 1) / 2;
    if (e >= terms) break;
    long long coeff = static_cast<long long>(2 * k + 1);
    b.add_term(e, (k % 2 == 0) ? coeff : -coeff);
  }
  return std::move(b).build();
}

PochhammerProductSpec quintic_helper_spec() {
  return PochhammerProductSpec{5,
                               {{2, false}, {3, false}, {1, true}, {4, true}}};
}

ThetaCheckResult theta_triple_product_check(std::uint64_t s, std::uint64_t t,
                                            std::size_t terms) {
  if (s == 0 || t == 0) throw std::invalid_argument("theta arguments must be positive");
  Ring ring = Ring::exact();

  SeriesBuilder sum(ring, terms);
  for (std::uint64_t n = 0;; ++n) {
    // n and -n branches of sum_n a^{n(n+1)/2} b^{n(n-1)/2} at a=q^s, b=q^t
    std::uint64_t tri_up = n * (n + 1) / 2, tri_dn = n * (n - 1) / 2;
    std::uint64_t ep = s * tri_up + t * tri_dn;
    std::uint64_t en = s * tri_dn + t * tri_up;
    if (ep >= terms && en >= terms) break;
    if (ep < terms) sum.add_term(ep, 1);
    if (n > 0 && en < terms) sum.add_term(en, 1);
  }

  SeriesBuilder prod(ring, terms);
  prod.add_term(0, 1);
  std::uint64_t base = s + t;
  for (std::uint64_t off : {s, t})
    for (std::uint64_t c = off; c < terms; c += base) prod.mul_binomial(c, +1);
  for (std::uint64_t c = base; c < terms; c += base) prod.mul_binomial(c, -1);

  auto mismatch = first_mismatch(std::move(sum).build(), std::move(prod).build());
  return {!mismatch.has_value(), mismatch};
}

}  // namespace qcong
