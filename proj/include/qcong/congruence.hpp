#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qcong/series.hpp"

namespace qcong {

// k = c*j + k0 over j >= 0; c = 0 pins a single k = k0
struct KFamily {
  std::uint64_t c = 0;
  std::uint64_t k0 = 1;
  friend bool operator==(const KFamily&, const KFamily&) = default;
};

struct Progression {
  std::uint64_t step = 1;    // A
  std::uint64_t offset = 0;  // B
  friend bool operator==(const Progression&, const Progression&) = default;
};

// two_power marks Theorem-5 style entries where the modulus 2^r is coupled
// to k = 2^r; it is descriptive, each instantiated claim carries fixed values
enum class ModulusFamily { fixed, two_power };

// "a_{c j + k0}(A n + B) = 0 (mod M) for all j, n >= 0"
struct CongruenceClaim {
  KFamily k;
  Progression progression;
  std::uint64_t modulus = 2;
  ModulusFamily family = ModulusFamily::fixed;

  std::string to_string() const;  // a{7j+1}(7n+5)%7
  friend bool operator==(const CongruenceClaim&, const CongruenceClaim&) = default;
};

struct Counterexample {
  std::uint64_t j = 0;
  std::uint64_t k = 0;
  std::uint64_t n = 0;
  std::uint64_t residue = 0;
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct VerificationResult {
  bool verified = false;
  long long checked_n_up_to = -1;
  long long checked_j_up_to = -1;
  std::optional<Counterexample> witness;
  friend bool operator==(const VerificationResult&, const VerificationResult&) = default;
};

// builds a_k mod M to `terms`, extracts the progression, and reports the
// first nonzero residue if any; j runs 0..j_max when the family is open
// (c > 0), otherwise only k0 is tested. modulus 1 claims are vacuously true.
VerificationResult verify_claim(const CongruenceClaim& claim, std::size_t terms,
                                std::uint64_t j_max);

struct CatalogEntry {
  std::string name;
  std::string note;  // empty, or e.g. "conjectural, from extended search"
  CongruenceClaim claim;
};

// the built-in claim catalog, kept verbatim as published; entries that fail
// verification are regression-tested with their witnesses rather than edited
const std::vector<CatalogEntry>& builtin_catalog();

// does any catalog entry instantiate to (k, A, B, M)?
bool catalog_covers(std::uint64_t k, std::uint64_t step, std::uint64_t offset,
                    std::uint64_t modulus);

struct NamedResult {
  std::string name;
  CongruenceClaim claim;
  VerificationResult result;
  friend bool operator==(const NamedResult&, const NamedResult&) = default;
};

// runs the whole catalog; claims are distributed across workers and results
// are merged in catalog order, so output is deterministic
std::vector<NamedResult> verify_catalog(std::size_t terms, std::uint64_t j_max,
                                        unsigned threads = 0);

inline constexpr std::uint64_t kDefaultScanCeiling = 1'000'000'000;

struct ScanConfig {
  std::vector<std::uint64_t> k_values;
  std::vector<std::uint64_t> moduli;
  std::vector<std::uint64_t> steps;                   // A values
  std::optional<std::vector<std::uint64_t>> offsets;  // B values; default all B < A
  std::size_t terms = 2000;
  bool survivors_only = false;
  std::uint64_t max_cost = kDefaultScanCeiling;  // bound on grid size x terms
  friend bool operator==(const ScanConfig&, const ScanConfig&) = default;
};

class ScanCeilingError : public std::runtime_error {
 public:
  ScanCeilingError(std::uint64_t estimate, std::uint64_t ceiling)
      : std::runtime_error("scan grid too large: estimated cost " +
                           std::to_string(estimate) + " exceeds ceiling " +
                           std::to_string(ceiling)),
        estimate_(estimate) {}
  std::uint64_t estimate() const { return estimate_; }

 private:
  std::uint64_t estimate_;
};

struct Survivor {
  std::uint64_t k = 0;
  std::uint64_t step = 1;
  std::uint64_t offset = 0;
  std::uint64_t modulus = 2;
  bool listed = false;  // instantiates some catalog entry
  friend bool operator==(const Survivor&, const Survivor&) = default;
};

struct ScanReport {
  ScanConfig config;
  std::string timestamp;
  std::vector<NamedResult> results;  // empty when survivors_only is set
  std::vector<Survivor> survivors;   // sorted by (modulus, k, step, offset)
  friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

// exhaustively tests every (k, M, A, B) in the grid; a claim survives iff
// the extracted progression is identically zero to config.terms
ScanReport scan(const ScanConfig& config, unsigned threads = 0);

struct CongruenceCheck {
  bool ok = false;
  std::optional<std::size_t> first_mismatch;
};

// f_m^{p^k} vs f_{mp}^{p^{k-1}} in Z/p^k (the binomial-theorem congruence)
CongruenceCheck verify_frobenius_congruence(std::uint64_t m, std::uint64_t p,
                                            std::uint64_t kexp, std::size_t terms);

// JSON wire formats:
//   claim  {"k":{"c":..,"k0":..},"A":..,"B":..,"M":..}
//   result {"claim":..,"status":"verified"|"counterexample",
//           "checked_n_up_to":..,"checked_j_up_to":..,
//           "witness":{"j":..,"n":..,"residue":..}|null}
nlohmann::json claim_to_json(const CongruenceClaim& claim);
CongruenceClaim claim_from_json(const nlohmann::json& j);
nlohmann::json result_to_json(const NamedResult& r);
NamedResult result_from_json(const nlohmann::json& j);
nlohmann::json report_to_json(const ScanReport& report);
ScanReport report_from_json(const nlohmann::json& j);
nlohmann::json scan_config_to_json(const ScanConfig& config);
ScanConfig scan_config_from_json(const nlohmann::json& j);

}  // namespace qcong
