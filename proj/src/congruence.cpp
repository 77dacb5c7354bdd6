#include "qcong/congruence.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>

#include "qcong/eta.hpp"
#include "qcong/parallel.hpp"
#include "qcong/partitions.hpp"

namespace qcong {

namespace {

std::string k_to_string(const KFamily& k) {
  if (k.c == 0) return std::to_string(k.k0);
  return std::to_string(k.c) + "j+" + std::to_string(k.k0);
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

std::string CongruenceClaim::to_string() const {
  return "a{" + k_to_string(k) + "}(" + std::to_string(progression.step) + "n+" +
         std::to_string(progression.offset) + ")%" + std::to_string(modulus);
}

VerificationResult verify_claim(const CongruenceClaim& claim, std::size_t terms,
                                std::uint64_t j_max) {
  const auto& prog = claim.progression;
  if (prog.step == 0) throw std::invalid_argument("progression step must be positive");
  if (terms <= prog.offset)
    throw std::invalid_argument("terms must exceed the progression offset");
  long long extracted = static_cast<long long>((terms - 1 - prog.offset) / prog.step);
  long long top_j = claim.k.c > 0 ? static_cast<long long>(j_max) : 0;

  if (claim.modulus == 1) {
    // every residue vanishes mod 1; keeps "for all r >= 0" quantifiers representable
    return {true, extracted, top_j, std::nullopt};
  }

  Ring ring = Ring::modular(claim.modulus);
  for (std::uint64_t j = 0; j <= static_cast<std::uint64_t>(top_j); ++j) {
    std::uint64_t k = claim.k.c * j + claim.k.k0;
    Series a_k = a_table_series(k, ring, terms).values;
    Series ext = a_k.extract_progression(prog.step, prog.offset);
    if (auto idx = ext.first_nonzero()) {
      Counterexample w{j, k, static_cast<std::uint64_t>(*idx),
                       ext.at(*idx).get_ui()};
      return {false, static_cast<long long>(*idx), static_cast<long long>(j), w};
    }
  }
  return {true, extracted, top_j, std::nullopt};
}

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    std::vector<CatalogEntry> entries;
    auto add = [&](CongruenceClaim claim, std::string note = "",
                   std::string suffix = "") {
      entries.push_back({claim.to_string() + suffix, std::move(note), claim});
    };

    // five families mod 7
    constexpr std::pair<std::uint64_t, std::uint64_t> mod7[] = {
        {1, 5}, {3, 2}, {4, 4}, {5, 6}, {7, 3}};
    for (auto [k0, b] : mod7) add({{7, k0}, {7, b}, 7});
    // a_5 mod 5
    add({{0, 5}, {5, 3}, 5});
    // a_5 mod 3 along powers of three
    add({{0, 5}, {9, 19}, 3});
    add({{0, 5}, {81, 172}, 3});
    // the 5j+5 family mod 5
    add({{5, 5}, {5, 3}, 5});
    // k = 2^r coupled with modulus 2^r; named by the exponent to keep the
    // r = 1 instance distinct from the even-k family below
    for (unsigned r = 0; r <= 6; ++r)
      entries.push_back({"a{2^" + std::to_string(r) + "}(2n+1)%2^" + std::to_string(r),
                         r == 0 ? "vacuous: modulus 1" : "",
                         {{0, std::uint64_t{1} << r},
                          {2, 1},
                          std::uint64_t{1} << r,
                          ModulusFamily::two_power}});
    // even k mod 2
    for (std::uint64_t r = 1; r <= 8; ++r) add({{0, 2 * r}, {2, 1}, 2});
    // a_3 mod 2 at prime progressions
    constexpr std::pair<std::uint64_t, std::uint64_t> a3_pairs[] = {
        {5, 3}, {7, 3}, {11, 3}, {13, 3}, {17, 3},
        {5, 4}, {7, 4}, {7, 6},  {11, 6}, {13, 6}};
    for (auto [a, b] : a3_pairs) add({{0, 3}, {a, b}, 2});
    // a_5 and a_11 mod 2
    for (std::uint64_t a : {7, 11, 13, 17, 19}) add({{0, 5}, {a, 3}, 2});
    add({{0, 5}, {3, 2}, 2});
    add({{0, 5}, {6, 5}, 2});
    add({{0, 11}, {9, 6}, 2});
    // five families mod 11
    constexpr std::pair<std::uint64_t, std::uint64_t> mod11[] = {
        {1, 6}, {4, 10}, {6, 9}, {8, 8}, {11, 1}};
    for (auto [k0, b] : mod11) add({{11, k0}, {11, b}, 11});
    // extended-search congruences; duplicates of entries above, kept as the
    // separately published list
    constexpr std::uint64_t extended[][3] = {{3, 13, 3}, {3, 17, 3}, {3, 13, 6},
                                             {5, 13, 3}, {5, 17, 3}, {5, 19, 3}};
    for (auto [k, a, b] : extended)
      add({{0, k}, {a, b}, 2}, "conjectural, from extended search", ".x");

    return entries;
  }();
  return catalog;
}

bool catalog_covers(std::uint64_t k, std::uint64_t step, std::uint64_t offset,
                    std::uint64_t modulus) {
  for (const auto& entry : builtin_catalog()) {
    const auto& c = entry.claim;
    if (c.progression.step != step || c.progression.offset != offset ||
        c.modulus != modulus)
      continue;
    if (c.k.c == 0) {
      if (c.k.k0 == k) return true;
    } else if (k >= c.k.k0 && (k - c.k.k0) % c.k.c == 0) {
      return true;
    }
  }
  return false;
}

std::vector<NamedResult> verify_catalog(std::size_t terms, std::uint64_t j_max,
                                        unsigned threads) {
  const auto& catalog = builtin_catalog();
  std::vector<NamedResult> results(catalog.size());
  parallel_for(
      catalog.size(),
      [&](std::size_t i) {
        results[i] = {catalog[i].name, catalog[i].claim,
                      verify_claim(catalog[i].claim, terms, j_max)};
      },
      threads);
  return results;
}

namespace {

std::string utc_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%FT%TZ", &tm);
  return buf;
}

}  // namespace

ScanReport scan(const ScanConfig& config, unsigned threads) {
  if (config.k_values.empty() || config.moduli.empty() || config.steps.empty())
    throw std::invalid_argument("scan grid is empty");
  if (config.terms == 0) throw std::invalid_argument("zero precision");

  // enumerate the grid ordered by (modulus, k, step, offset)
  std::vector<CongruenceClaim> grid;
  std::vector<std::uint64_t> moduli = config.moduli;
  std::vector<std::uint64_t> ks = config.k_values;
  std::vector<std::uint64_t> steps = config.steps;
  std::sort(moduli.begin(), moduli.end());
  std::sort(ks.begin(), ks.end());
  std::sort(steps.begin(), steps.end());
  for (std::uint64_t m : moduli)
    for (std::uint64_t k : ks)
      for (std::uint64_t a : steps) {
        if (config.offsets) {
          for (std::uint64_t b : *config.offsets)
            if (b < a) grid.push_back({{0, k}, {a, b}, m});
        } else {
          for (std::uint64_t b = 0; b < a; ++b) grid.push_back({{0, k}, {a, b}, m});
        }
      }
  if (grid.empty()) throw std::invalid_argument("scan grid is empty");

  std::uint64_t cost = static_cast<std::uint64_t>(grid.size()) * config.terms;
  if (cost > config.max_cost) throw ScanCeilingError(cost, config.max_cost);

  // one series build per (modulus, k); extraction per claim is cheap
  struct Group {
    std::uint64_t modulus, k;
  };
  std::vector<Group> groups;
  for (std::uint64_t m : moduli)
    for (std::uint64_t k : ks) groups.push_back({m, k});
  std::vector<Series> built(groups.size(), Series::one(Ring::exact(), 1));
  parallel_for(
      groups.size(),
      [&](std::size_t i) {
        built[i] = a_table_series(groups[i].k, Ring::modular(groups[i].modulus),
                                  config.terms)
                       .values;
      },
      threads);
  auto series_for = [&](std::uint64_t m, std::uint64_t k) -> const Series& {
    for (std::size_t i = 0; i < groups.size(); ++i)
      if (groups[i].modulus == m && groups[i].k == k) return built[i];
    throw std::logic_error("missing scan group");
  };

  ScanReport report;
  report.config = config;
  report.timestamp = utc_timestamp();
  std::vector<NamedResult> results(grid.size());
  parallel_for(
      grid.size(),
      [&](std::size_t i) {
        const CongruenceClaim& claim = grid[i];
        const Series& s = series_for(claim.modulus, claim.k.k0);
        VerificationResult r;
        if (claim.progression.offset >= s.precision()) {
          throw std::invalid_argument("terms must exceed the progression offset");
        }
        Series ext =
            s.extract_progression(claim.progression.step, claim.progression.offset);
        if (auto idx = ext.first_nonzero()) {
          r = {false, static_cast<long long>(*idx), 0,
               Counterexample{0, claim.k.k0, static_cast<std::uint64_t>(*idx),
                              ext.at(*idx).get_ui()}};
        } else {
          r = {true, static_cast<long long>(ext.precision()) - 1, 0, std::nullopt};
        }
        results[i] = {claim.to_string(), claim, r};
      },
      threads);

  for (const auto& nr : results) {
    if (!nr.result.verified) continue;
    const auto& c = nr.claim;
    report.survivors.push_back({c.k.k0, c.progression.step, c.progression.offset,
                                c.modulus,
                                catalog_covers(c.k.k0, c.progression.step,
                                               c.progression.offset, c.modulus)});
  }
  if (!config.survivors_only) report.results = std::move(results);
  return report;
}

CongruenceCheck verify_frobenius_congruence(std::uint64_t m, std::uint64_t p,
                                            std::uint64_t kexp, std::size_t terms) {
  if (m == 0) throw std::invalid_argument("scale must be positive");
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (kexp == 0) throw std::invalid_argument("exponent must be positive");
  std::uint64_t pk = 1;
  for (std::uint64_t i = 0; i < kexp; ++i) {
    if (pk > Ring::kMaxModulus / p) throw std::invalid_argument("modulus too large for word arithmetic");
    pk *= p;
  }
  Ring ring = Ring::modular(pk);
  Series lhs = f_ell(m, ring, terms).pow(static_cast<long long>(pk));
  Series rhs = f_ell(m * p, ring, terms).pow(static_cast<long long>(pk / p));
  auto mismatch = first_mismatch(lhs, rhs);
  return {!mismatch.has_value(), mismatch};
}

// ---- JSON wire formats ----

nlohmann::json claim_to_json(const CongruenceClaim& claim) {
  nlohmann::json j{{"k", {{"c", claim.k.c}, {"k0", claim.k.k0}}},
                   {"A", claim.progression.step},
                   {"B", claim.progression.offset},
                   {"M", claim.modulus}};
  if (claim.family == ModulusFamily::two_power) j["family"] = "two_power";
  return j;
}

CongruenceClaim claim_from_json(const nlohmann::json& j) {
  CongruenceClaim claim;
  claim.k.c = j.at("k").at("c").get<std::uint64_t>();
  claim.k.k0 = j.at("k").at("k0").get<std::uint64_t>();
  claim.progression.step = j.at("A").get<std::uint64_t>();
  claim.progression.offset = j.at("B").get<std::uint64_t>();
  claim.modulus = j.at("M").get<std::uint64_t>();
  if (j.contains("family") && j["family"] == "two_power")
    claim.family = ModulusFamily::two_power;
  return claim;
}

nlohmann::json result_to_json(const NamedResult& r) {
  nlohmann::json j{{"name", r.name},
                   {"claim", claim_to_json(r.claim)},
                   {"status", r.result.verified ? "verified" : "counterexample"},
                   {"checked_n_up_to", r.result.checked_n_up_to},
                   {"checked_j_up_to", r.result.checked_j_up_to}};
  if (r.result.witness) {
    const auto& w = *r.result.witness;
    j["witness"] = {{"j", w.j}, {"k", w.k}, {"n", w.n}, {"residue", w.residue}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

NamedResult result_from_json(const nlohmann::json& j) {
  NamedResult r;
  r.name = j.at("name").get<std::string>();
  r.claim = claim_from_json(j.at("claim"));
  r.result.verified = j.at("status") == "verified";
  r.result.checked_n_up_to = j.at("checked_n_up_to").get<long long>();
  r.result.checked_j_up_to = j.at("checked_j_up_to").get<long long>();
  if (!j.at("witness").is_null()) {
    const auto& w = j.at("witness");
    r.result.witness = Counterexample{
        w.at("j").get<std::uint64_t>(), w.at("k").get<std::uint64_t>(),
        w.at("n").get<std::uint64_t>(), w.at("residue").get<std::uint64_t>()};
  }
  return r;
}

nlohmann::json scan_config_to_json(const ScanConfig& config) {
  nlohmann::json j{{"k", config.k_values},
                   {"moduli", config.moduli},
                   {"A", config.steps},
                   {"terms", config.terms},
                   {"survivors_only", config.survivors_only},
                   {"max_cost", config.max_cost}};
  if (config.offsets)
    j["B"] = *config.offsets;
  else
    j["B"] = nullptr;
  return j;
}

ScanConfig scan_config_from_json(const nlohmann::json& j) {
  ScanConfig config;
  config.k_values = j.at("k").get<std::vector<std::uint64_t>>();
  config.moduli = j.at("moduli").get<std::vector<std::uint64_t>>();
  config.steps = j.at("A").get<std::vector<std::uint64_t>>();
  if (j.contains("B") && !j.at("B").is_null())
    config.offsets = j.at("B").get<std::vector<std::uint64_t>>();
  if (j.contains("terms")) config.terms = j.at("terms").get<std::size_t>();
  if (j.contains("survivors_only"))
    config.survivors_only = j.at("survivors_only").get<bool>();
  if (j.contains("max_cost")) config.max_cost = j.at("max_cost").get<std::uint64_t>();
  return config;
}

nlohmann::json report_to_json(const ScanReport& report) {
  nlohmann::json survivors = nlohmann::json::array();
  for (const auto& s : report.survivors)
    survivors.push_back({{"k", s.k},
                         {"A", s.step},
                         {"B", s.offset},
                         {"M", s.modulus},
                         {"listed", s.listed}});
  nlohmann::json results = nlohmann::json::array();
  for (const auto& r : report.results) results.push_back(result_to_json(r));
  return {{"config", scan_config_to_json(report.config)},
          {"timestamp", report.timestamp},
          {"results", results},
          {"survivors", survivors}};
}

ScanReport report_from_json(const nlohmann::json& j) {
  ScanReport report;
  report.config = scan_config_from_json(j.at("config"));
  report.timestamp = j.at("timestamp").get<std::string>();
  for (const auto& r : j.at("results")) report.results.push_back(result_from_json(r));
  for (const auto& s : j.at("survivors"))
    report.survivors.push_back({s.at("k").get<std::uint64_t>(),
                                s.at("A").get<std::uint64_t>(),
                                s.at("B").get<std::uint64_t>(),
                                s.at("M").get<std::uint64_t>(),
                                s.at("listed").get<bool>()});
  return report;
}

}  // namespace qcong
