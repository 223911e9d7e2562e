/**
 * @file report.hpp
 * @brief Run configuration, machine-readable reports and the on-disk cache.
 */
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "soule/group_ring.hpp"
#include "soule/padic.hpp"
#include "soule/real.hpp"
#include "soule/verify.hpp"

namespace soule {

struct RunConfig {
  long precision_bits = 256;
  long guard_bits = 32;
  std::string cache_dir;
  std::string format = "json";
  unsigned jobs = 1;

  /// Throws PreconditionError unless precision_bits >= 128, guard_bits >= 16
  /// and the format is json or csv.
  void validate() const;
  PrecisionSpec precision() const { return {precision_bits, guard_bits}; }
};

nlohmann::json to_json(const VerificationReport& r, bool with_timing = true);
nlohmann::json to_json(const CriterionVerdict& v);
nlohmann::json to_json(const NuTable& t);
nlohmann::json to_json(const PaperClaim& c);

/// Columns c,b,nu,is_integer.
std::string nu_csv(const std::vector<NuTable>& tables);
/// Columns p,split,verdict,witnesses.
std::string criterion_csv(const std::vector<CriterionVerdict>& scan);
/// Columns identity,label,lhs,rhs,abs_diff,scale,tolerance,pass.
std::string verification_csv(const std::vector<VerificationReport>& reports);

class Report {
 public:
  Report(std::string command, RunConfig config);

  void add_result(nlohmann::json result) { results_.push_back(std::move(result)); }
  void add_claim(PaperClaim claim) { claims_.push_back(std::move(claim)); }
  const std::vector<PaperClaim>& claims() const { return claims_; }

  /// Keys: command, config, results, paper_claims, version and, if requested, timestamp.
  /// Without the timestamp the document depends only on the command and config.
  nlohmann::json to_json(bool with_timestamp = true) const;

 private:
  std::string command_;
  RunConfig config_;
  std::vector<nlohmann::json> results_;
  std::vector<PaperClaim> claims_;
};

/// Seeds the Bernoulli table and the q-series cache from dir (missing files are ignored).
void load_cache(const std::string& dir);
/// Writes both caches to dir, creating it if needed.
void save_cache(const std::string& dir);

}  // namespace soule
