#include "qcong/dissection.hpp"

#include <stdexcept>

namespace qcong {

ExprPtr expr_one() { return std::make_shared<SeriesExpr>(SeriesExpr::One{}); }
ExprPtr expr_cube_sum() { return std::make_shared<SeriesExpr>(SeriesExpr::CubeSum{}); }
ExprPtr expr_eta(EtaQuotientSpec spec) {
  return std::make_shared<SeriesExpr>(std::move(spec));
}
ExprPtr expr_pochhammer(PochhammerProductSpec spec) {
  return std::make_shared<SeriesExpr>(std::move(spec));
}
ExprPtr expr_sum(std::vector<SumTerm> terms) {
  return std::make_shared<SeriesExpr>(std::move(terms));
}
ExprPtr expr_product(std::vector<ExprPtr> factors) {
  return std::make_shared<SeriesExpr>(std::move(factors));
}
ExprPtr expr_extract(ExprPtr inner, std::uint64_t step, std::uint64_t offset) {
  return std::make_shared<SeriesExpr>(SeriesExpr::Extract{std::move(inner), step, offset});
}

Series eval_expr(const SeriesExpr& expr, const Ring& ring, std::size_t terms) {
  return std::visit(
      [&](const auto& node) -> Series {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, SeriesExpr::One>) {
          return Series::one(ring, terms);
        } else if constexpr (std::is_same_v<T, SeriesExpr::CubeSum>) {
          return jacobi_cube_sum(ring, terms);
        } else if constexpr (std::is_same_v<T, EtaQuotientSpec>) {
          return eta_quotient(node, ring, terms);
        } else if constexpr (std::is_same_v<T, PochhammerProductSpec>) {
          return pochhammer_product(node, ring, terms);
        } else if constexpr (std::is_same_v<T, std::vector<SumTerm>>) {
          Series acc = Series::zero(ring, terms);
          for (const auto& term : node) {
            Series part = eval_expr(*term.factor, ring, terms)
                              .scaled(term.scalar)
                              .shifted(term.shift);
            acc = acc + part;
          }
          return acc;
        } else if constexpr (std::is_same_v<T, std::vector<ExprPtr>>) {
          Series acc = Series::one(ring, terms);
          for (const auto& factor : node) acc = acc * eval_expr(*factor, ring, terms);
          return acc;
        } else {  // Extract
          std::size_t inner_terms = node.step * (terms - 1) + node.offset + 1;
          Series inner = eval_expr(*node.inner, ring, inner_terms);
          return inner.extract_progression(node.step, node.offset);
        }
      },
      expr.node());
}

IdentityOutcome verify_identity(const DissectionIdentity& id, std::size_t terms) {
  if (terms == 0) throw std::invalid_argument("zero precision");
  Ring ring = id.congruence_modulus ? Ring::modular(*id.congruence_modulus)
                                    : Ring::exact();
  Series lhs = eval_expr(*id.lhs, ring, terms);
  Series rhs = eval_expr(*id.rhs, ring, terms);
  if (auto idx = first_mismatch(lhs, rhs))
    return {false, terms, IdentityMismatch{*idx, lhs.at(*idx), rhs.at(*idx)}};
  return {true, terms, std::nullopt};
}

std::set<std::uint64_t> support_classes(const Series& series,
                                        std::uint64_t exponent_modulus,
                                        std::uint64_t coeff_modulus) {
  if (exponent_modulus < 2) throw std::invalid_argument("exponent modulus must be >= 2");
  if (coeff_modulus < 2) throw std::invalid_argument("coefficient modulus must be >= 2");
  if (series.ring().is_modular() && series.ring().modulus() % coeff_modulus != 0)
    throw std::invalid_argument("series ring does not refine the coefficient modulus");
  std::set<std::uint64_t> classes;
  for (std::size_t i = 0; i < series.precision(); ++i) {
    if (mod_reduce(series.at(i), coeff_modulus) != 0) classes.insert(i % exponent_modulus);
  }
  return classes;
}

SupportOutcome verify_support_claim(const SupportClaim& claim, std::size_t terms) {
  if (terms == 0) throw std::invalid_argument("zero precision");
  Series s = eval_expr(*claim.series, Ring::modular(claim.coeff_modulus), terms);
  for (std::size_t i = 0; i < s.precision(); ++i) {
    if (s.nonzero_at(i) && !claim.allowed.contains(i % claim.exponent_modulus))
      return {false, terms, i};
  }
  return {true, terms, std::nullopt};
}

const std::string& RegistryEntry::name() const {
  return std::visit([](const auto& x) -> const std::string& { return x.name; }, item);
}

const std::string& RegistryEntry::description() const {
  return std::visit([](const auto& x) -> const std::string& { return x.description; },
                    item);
}

namespace {

EtaQuotientSpec eta_spec(std::initializer_list<EtaFactor> factors) {
  return EtaQuotientSpec{factors};
}

PochhammerProductSpec quotient_spec(std::uint64_t b, std::uint64_t n1, std::uint64_t n2,
                                    std::uint64_t d1, std::uint64_t d2) {
  return PochhammerProductSpec{
      b, {{n1, false}, {n2, false}, {d1, true}, {d2, true}}};
}

std::vector<RegistryEntry> make_registry() {
  std::vector<RegistryEntry> reg;

  // f_1 by two independent routes: pentagonal sum vs binomial product.
  // (In the source material this identity's label and statement disagree;
  // the cube expansion it states is entry L2.)
  reg.push_back({DissectionIdentity{"L1",
                                    "f_1: pentagonal sum side vs binomial product",
                                    expr_eta(eta_spec({{1, 1}})),
                                    expr_pochhammer({1, {{1, false}}}),
                                    std::nullopt},
                 false});

  // f_1^3 = sum_k (-1)^k (2k+1) q^{k(k+1)/2}
  reg.push_back({DissectionIdentity{"L2",
                                    "f_1^3: sum side vs cubed product",
                                    expr_eta(eta_spec({{1, 3}})), expr_cube_sum(),
                                    std::nullopt},
                 false});

  // support classes of f_1^3: triangular exponents with surviving coefficients
  reg.push_back({SupportClaim{"L2-support",
                              "f_1^3 mod 11 lives on exponent classes 0,1,3,6,10 mod 11",
                              expr_eta(eta_spec({{1, 3}})), 11, 11,
                              {0, 1, 3, 6, 10}},
                 false});
  reg.push_back({SupportClaim{"L3-support",
                              "f_1^3 mod 2 lives on exponent classes 0,1,3,6 mod 7",
                              expr_eta(eta_spec({{1, 3}})), 2, 7, {0, 1, 3, 6}},
                 false});
  reg.push_back({SupportClaim{"L4-support",
                              "f_1^3 mod 2 lives on exponent classes 0,1,3,4,6,10 mod 11",
                              expr_eta(eta_spec({{1, 3}})), 2, 11,
                              {0, 1, 3, 4, 6, 10}},
                 false});

  // 3-dissection of f_2^2/f_1, with the q prefactor the printed form omits
  ExprPtr l5_first = expr_eta(eta_spec({{6, 1}, {9, 2}, {3, -1}, {18, -1}}));
  ExprPtr l5_second = expr_eta(eta_spec({{18, 2}, {9, -1}}));
  reg.push_back({DissectionIdentity{
                     "L5", "3-dissection of f_2^2/f_1 (corrected: q prefactor)",
                     expr_eta(eta_spec({{2, 2}, {1, -1}})),
                     expr_sum({{1, 0, l5_first}, {1, 1, l5_second}}), std::nullopt},
                 false});
  reg.push_back({DissectionIdentity{
                     "L5-literal",
                     "3-dissection of f_2^2/f_1 as printed (missing q; fails at 0)",
                     expr_eta(eta_spec({{2, 2}, {1, -1}})),
                     expr_sum({{1, 0, l5_first}, {1, 0, l5_second}}), std::nullopt},
                 true});

  // 3-dissection of f_1^3
  reg.push_back(
      {DissectionIdentity{
           "L6", "3-dissection of f_1^3",
           expr_eta(eta_spec({{1, 3}})),
           expr_sum({{1, 0, expr_eta(eta_spec({{6, 1}, {9, 6}, {3, -1}, {18, -3}}))},
                     {-3, 1, expr_eta(eta_spec({{9, 3}}))},
                     {4, 3, expr_eta(eta_spec({{3, 2}, {18, 6}, {6, -2}, {9, -3}}))}}),
           std::nullopt},
       false});

  // 5-dissection of f_1 via a(q^5)
  PochhammerProductSpec a_q5 = quintic_helper_spec().dilated(5);
  reg.push_back({DissectionIdentity{
                     "L7", "5-dissection of f_1 via the quintic quotient a(q)",
                     expr_eta(eta_spec({{1, 1}})),
                     expr_product({expr_eta(eta_spec({{25, 1}})),
                                   expr_sum({{1, 0, expr_pochhammer(a_q5)},
                                             {-1, 1, expr_one()},
                                             {-1, 2, expr_pochhammer(a_q5.reciprocal())}})}),
                     std::nullopt},
                 false});

  // 7-dissection of f_1
  reg.push_back({DissectionIdentity{
                     "L8", "7-dissection of f_1",
                     expr_eta(eta_spec({{1, 1}})),
                     expr_product(
                         {expr_eta(eta_spec({{49, 1}})),
                          expr_sum({{1, 0, expr_pochhammer(quotient_spec(49, 14, 35, 7, 42))},
                                    {-1, 1, expr_pochhammer(quotient_spec(49, 21, 28, 14, 35))},
                                    {-1, 2, expr_one()},
                                    {1, 5, expr_pochhammer(quotient_spec(49, 7, 42, 21, 28))}})}),
                     std::nullopt},
                 false});

  // 11-dissection of f_1
  reg.push_back({DissectionIdentity{
                     "L9", "11-dissection of f_1",
                     expr_eta(eta_spec({{1, 1}})),
                     expr_product(
                         {expr_eta(eta_spec({{121, 1}})),
                          expr_sum({{1, 0, expr_pochhammer(quotient_spec(121, 44, 77, 22, 99))},
                                    {-1, 1, expr_pochhammer(quotient_spec(121, 22, 99, 11, 110))},
                                    {-1, 2, expr_pochhammer(quotient_spec(121, 55, 66, 33, 88))},
                                    {1, 5, expr_one()},
                                    {1, 7, expr_pochhammer(quotient_spec(121, 33, 88, 44, 77))},
                                    {-1, 15, expr_pochhammer(quotient_spec(121, 11, 110, 55, 66))}})}),
                     std::nullopt},
                 false});

  // proof step behind a_11(9n+6) = 0 mod 2: the q^{3n} part of a_11, written
  // on the cube grid (every f_{3s} becomes f_s, shifts divided by 3).
  // Squaring the L6 dissection and multiplying by L5 gives coefficients
  // 1, 17, 16 here; the printed display has 4 for 17 and drops an 18-power.
  ExprPtr a11_3n = expr_extract(expr_eta(eta_spec({{2, 10}, {1, -11}})), 3, 0);
  ExprPtr i14_first = expr_eta(eta_spec({{2, 3}, {3, 14}, {1, -3}, {6, -7}}));
  reg.push_back({DissectionIdentity{
                     "I1.4-step",
                     "q^{3n} part of a_11 mod 2 (corrected coefficients)",
                     a11_3n,
                     expr_sum({{1, 0, i14_first},
                               {17, 1, expr_eta(eta_spec({{3, 5}, {6, 2}}))},
                               {16, 2, expr_eta(eta_spec({{1, 3}, {6, 11}, {2, -3}, {3, -4}}))}}),
                     2},
                 false});
  reg.push_back({DissectionIdentity{
                     "I1.4-step-literal",
                     "q^{3n} part of a_11 mod 2 as printed (fails at 1)",
                     a11_3n,
                     expr_sum({{1, 0, i14_first},
                               {4, 1, expr_eta(eta_spec({{3, 5}, {6, 2}}))},
                               {16, 2, expr_eta(eta_spec({{1, 3}, {6, 1}, {2, -3}, {3, -4}}))}}),
                     2},
                 true});

  return reg;
}

}  // namespace

const std::vector<RegistryEntry>& builtin_identities() {
  static const std::vector<RegistryEntry> registry = make_registry();
  return registry;
}

const RegistryEntry* find_identity(const std::string& name) {
  for (const auto& entry : builtin_identities())
    if (entry.name() == name) return &entry;
  return nullptr;
}

}  // namespace qcong
