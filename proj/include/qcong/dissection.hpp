#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "qcong/eta.hpp"
#include "qcong/series.hpp"

namespace qcong {

// Minimal closed expression algebra for the dissection registry: eta and
// Pochhammer specs, the f_1^3 sum side, shifted/scaled sums, products, and
// progression extraction. Nothing more is needed to state the identities.
class SeriesExpr;
using ExprPtr = std::shared_ptr<const SeriesExpr>;

struct SumTerm {
  long long scalar = 1;
  std::uint64_t shift = 0;  // multiplies by q^shift
  ExprPtr factor;
};

class SeriesExpr {
 public:
  struct One {};
  struct CubeSum {};
  struct Extract {
    ExprPtr inner;
    std::uint64_t step = 1;
    std::uint64_t offset = 0;
  };
  using Node = std::variant<One, CubeSum, EtaQuotientSpec, PochhammerProductSpec,
                            std::vector<SumTerm>, std::vector<ExprPtr>, Extract>;

  explicit SeriesExpr(Node node) : node_(std::move(node)) {}
  const Node& node() const { return node_; }

 private:
  Node node_;
};

ExprPtr expr_one();
ExprPtr expr_cube_sum();
ExprPtr expr_eta(EtaQuotientSpec spec);
ExprPtr expr_pochhammer(PochhammerProductSpec spec);
ExprPtr expr_sum(std::vector<SumTerm> terms);
ExprPtr expr_product(std::vector<ExprPtr> factors);
ExprPtr expr_extract(ExprPtr inner, std::uint64_t step, std::uint64_t offset);

// evaluates to exactly `terms` coefficients; extraction nodes evaluate their
// operand at the precision the extraction needs
Series eval_expr(const SeriesExpr& expr, const Ring& ring, std::size_t terms);

// lhs = rhs either exactly or as a congruence mod m, checked coefficientwise
struct DissectionIdentity {
  std::string name;
  std::string description;
  ExprPtr lhs;
  ExprPtr rhs;
  std::optional<std::uint64_t> congruence_modulus;  // empty = exact
};

// support of the series mod m is contained in the allowed exponent classes
struct SupportClaim {
  std::string name;
  std::string description;
  ExprPtr series;
  std::uint64_t coeff_modulus = 2;
  std::uint64_t exponent_modulus = 2;
  std::set<std::uint64_t> allowed;
};

struct IdentityMismatch {
  std::size_t index = 0;
  mpz_class lhs;
  mpz_class rhs;
};

struct IdentityOutcome {
  bool verified = false;
  std::size_t terms = 0;
  std::optional<IdentityMismatch> mismatch;
};

IdentityOutcome verify_identity(const DissectionIdentity& id, std::size_t terms);

// exponent residues mod `exponent_modulus` carrying a coefficient that is
// nonzero mod `coeff_modulus`
std::set<std::uint64_t> support_classes(const Series& series,
                                        std::uint64_t exponent_modulus,
                                        std::uint64_t coeff_modulus);

struct SupportOutcome {
  bool verified = false;
  std::size_t terms = 0;
  std::optional<std::uint64_t> violating_exponent;
};

SupportOutcome verify_support_claim(const SupportClaim& claim, std::size_t terms);

struct RegistryEntry {
  std::variant<DissectionIdentity, SupportClaim> item;
  // negative controls state a published-but-incorrect form verbatim; they are
  // expected to fail and are excluded from --all gating
  bool negative_control = false;

  const std::string& name() const;
  const std::string& description() const;
};

const std::vector<RegistryEntry>& builtin_identities();
const RegistryEntry* find_identity(const std::string& name);

}  // namespace qcong
