#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "bwl/core.hpp"
#include "bwl/enumerate.hpp"

namespace bwl {

enum class Verdict { Pass, Fail, Skip, Info };
const char* to_string(Verdict v);

struct ClaimReport {
  std::string claim;
  Verdict verdict = Verdict::Pass;
  std::string params;
  std::vector<std::string> details;
  std::vector<std::filesystem::path> witnesses;
  double seconds = 0;
};

struct VerifyOptions {
  /// Largest order examined by the finite-range checks.
  int max_n = 7;
  bool long_run = false;
  /// Witness and counterexample files go to out_dir/<claim>/; empty disables them.
  std::filesystem::path out_dir;
  /// Parallel claims in verify_all; 0 picks the hardware concurrency.
  unsigned workers = 0;
};

struct ClaimInfo {
  std::string id;
  std::string summary;
  std::string range;
  std::string runtime_class;  // "seconds", "minutes" or "hour"
};

/// Registered claims in a fixed order.
std::vector<ClaimInfo> claim_registry();

/// Runs one claim; throws Error for an unknown id.
ClaimReport verify(const std::string& claim_id, const VerifyOptions& opt);

/// Every registered claim, in registry order.
std::vector<ClaimReport> verify_all(const VerifyOptions& opt);

/// Versioned line-oriented key=value ledger.
inline constexpr int kLedgerVersion = 1;
std::string ledger_header();
std::string ledger_line(const ClaimReport& r);
std::string text_report(const ClaimReport& r);

/// Writes data/exceptional/*.wg: the fixed small graphs plus the two order-6
/// spanners derived by enumeration. Returns the written paths.
std::vector<std::filesystem::path> regenerate_catalog(const std::filesystem::path& data_dir);

/// Labeled structures on {0..n-1} isomorphic to b.
std::vector<BetweennessStructure> labeled_members(const BetweennessStructure& b);

}  // namespace bwl
