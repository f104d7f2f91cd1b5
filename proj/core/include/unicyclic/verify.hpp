#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "unicyclic/enumerate.hpp"

namespace unicyclic {

enum class ClaimStatus { Pass, Fail, RangeTooSmall };

std::string to_string(ClaimStatus s);

enum class ClaimKind {
  Identity,     // holds for every graph in a class
  Inequality,   // strict inequality between two constructions
  Delta,        // difference formula vs direct difference
  Extremal,     // exhaustive witness sets vs the families registry
  Structure,    // exhaustive witnesses lie in a stated family
  ClosedForm,   // closed form vs direct computation
  Positivity,   // polynomial difference > 0 on its domain
};

std::string to_string(ClaimKind k);

using ParamList = std::vector<std::pair<std::string, std::string>>;

struct Counterexample {
  ParamList params;
  std::string expected;
  std::string actual;
  std::vector<std::string> witnesses;  // graph6
};

struct ClaimRange {
  int n_min = 0;
  int n_max = 0;
  std::size_t points_checked = 0;
  std::string grid;                  // what one point is
  std::vector<std::string> skipped;  // regions of the stated range not run
};

struct ClaimReport {
  std::string id;
  std::string description;
  ClaimKind kind = ClaimKind::Identity;
  ClaimRange range;
  ClaimStatus status = ClaimStatus::Pass;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> notes;
  double wall_seconds = 0.0;

  bool failed() const { return status == ClaimStatus::Fail; }
};

struct ClaimInfo {
  std::string id;
  std::string description;
  ClaimKind kind;
  bool exhaustive;  // limited by the enumeration ceiling
  int n_min;        // smallest n at which the stated range starts
};

const std::vector<ClaimInfo>& claim_catalog();

using WienerFormula = std::function<std::int64_t(int, int, int, int, int)>;

struct VerifyOptions {
  int ceiling = kDefaultCeiling;
  /// Replaces wiener_closed in "lemma8-consistency" (mutation testing).
  WienerFormula wiener_override;
  /// Counterexamples kept per claim; the count is always noted.
  std::size_t max_counterexamples = 20;
  bool parallel = true;
};

/// Runs one claim for all n up to n_max. Throws ParameterError for an
/// unknown id, or when an exhaustive claim asks for n_max above the
/// ceiling.
ClaimReport verify_claim(const std::string& id, int n_max,
                         const VerifyOptions& options = {});

/// Runs every claim. Exhaustive claims are clipped at the ceiling and the
/// clipped region is listed as skipped. Reports come back in catalog
/// order.
std::vector<ClaimReport> verify_all(int n_max,
                                    const VerifyOptions& options = {});

bool any_failed(const std::vector<ClaimReport>& reports);

}  // namespace unicyclic
