#pragma once

// Shared plumbing for the claim registry. Not installed.

#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "unicyclic/verify.hpp"

namespace unicyclic::detail {

class ClaimContext {
 public:
  ClaimContext(int n_max, const VerifyOptions& options, ClaimReport& report)
      : n_max_(n_max), options_(options), report_(report) {}

  int n_max() const { return n_max_; }
  const VerifyOptions& options() const { return options_; }

  void checked(std::size_t points = 1) { report_.range.points_checked += points; }
  void fail(Counterexample c) {
    ++failures_;
    if (report_.counterexamples.size() < options_.max_counterexamples) {
      report_.counterexamples.push_back(std::move(c));
    }
  }
  void note(std::string text) { report_.notes.push_back(std::move(text)); }
  void skip(std::string region) {
    report_.range.skipped.push_back(std::move(region));
  }
  std::size_t failures() const { return failures_; }

 private:
  int n_max_;
  const VerifyOptions& options_;
  ClaimReport& report_;
  std::size_t failures_ = 0;
};

struct ClaimEntry {
  ClaimInfo info;
  std::string grid;  // what one checked point is
  std::function<void(ClaimContext&)> run;
};

void register_structural_claims(std::vector<ClaimEntry>& out);
void register_formula_claims(std::vector<ClaimEntry>& out);
void register_extremal_claims(std::vector<ClaimEntry>& out);

inline ParamList params(
    std::initializer_list<std::pair<const char*, long long>> values) {
  ParamList out;
  for (const auto& [k, v] : values) out.emplace_back(k, std::to_string(v));
  return out;
}

}  // namespace unicyclic::detail
