#include "unicyclic/verify.hpp"

#include <algorithm>
#include <chrono>
#include <future>

#include "claims.hpp"
#include "unicyclic/error.hpp"

namespace unicyclic {
namespace {

using detail::ClaimContext;
using detail::ClaimEntry;

const std::vector<ClaimEntry>& registry() {
  static const std::vector<ClaimEntry> entries = [] {
    std::vector<ClaimEntry> out;
    detail::register_structural_claims(out);
    detail::register_formula_claims(out);
    detail::register_extremal_claims(out);
    return out;
  }();
  return entries;
}

const ClaimEntry& find_claim(const std::string& id) {
  for (const ClaimEntry& e : registry()) {
    if (e.info.id == id) return e;
  }
  throw ParameterError("unknown claim id '" + id + "'");
}

ClaimReport run_claim(const ClaimEntry& entry, int n_max,
                      const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  ClaimReport report;
  report.id = entry.info.id;
  report.description = entry.info.description;
  report.kind = entry.info.kind;
  report.range.n_min = entry.info.n_min;
  report.range.n_max = n_max;
  report.range.grid = entry.grid;

  if (n_max < entry.info.n_min) {
    report.status = ClaimStatus::RangeTooSmall;
    report.notes.push_back("stated range starts at n = " +
                           std::to_string(entry.info.n_min));
  } else {
    ClaimContext ctx(n_max, options, report);
    entry.run(ctx);
    if (ctx.failures() > 0) {
      report.status = ClaimStatus::Fail;
      if (ctx.failures() > report.counterexamples.size()) {
        report.notes.push_back(std::to_string(ctx.failures()) +
                               " counterexamples, first " +
                               std::to_string(report.counterexamples.size()) +
                               " kept");
      }
    } else if (report.range.points_checked == 0) {
      report.status = ClaimStatus::RangeTooSmall;
    } else {
      report.status = ClaimStatus::Pass;
    }
  }
  report.wall_seconds = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return report;
}

}  // namespace

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass:
      return "pass";
    case ClaimStatus::Fail:
      return "fail";
    case ClaimStatus::RangeTooSmall:
      return "range-too-small";
  }
  return {};
}

std::string to_string(ClaimKind k) {
  switch (k) {
    case ClaimKind::Identity:
      return "identity";
    case ClaimKind::Inequality:
      return "inequality";
    case ClaimKind::Delta:
      return "delta";
    case ClaimKind::Extremal:
      return "extremal";
    case ClaimKind::Structure:
      return "structure";
    case ClaimKind::ClosedForm:
      return "closed-form";
    case ClaimKind::Positivity:
      return "positivity";
  }
  return {};
}

const std::vector<ClaimInfo>& claim_catalog() {
  static const std::vector<ClaimInfo> catalog = [] {
    std::vector<ClaimInfo> out;
    for (const ClaimEntry& e : registry()) out.push_back(e.info);
    return out;
  }();
  return catalog;
}

ClaimReport verify_claim(const std::string& id, int n_max,
                         const VerifyOptions& options) {
  const ClaimEntry& entry = find_claim(id);
  if (entry.info.exhaustive && n_max > options.ceiling) {
    throw ParameterError("claim " + id + " enumerates exhaustively; n_max " +
                         std::to_string(n_max) + " exceeds the ceiling " +
                         std::to_string(options.ceiling) +
                         " (raise it with --ceiling)");
  }
  return run_claim(entry, n_max, options);
}

std::vector<ClaimReport> verify_all(int n_max, const VerifyOptions& options) {
  auto one = [&](const ClaimEntry& entry) {
    const int effective =
        entry.info.exhaustive ? std::min(n_max, options.ceiling) : n_max;
    ClaimReport report = run_claim(entry, effective, options);
    if (effective < n_max) {
      report.range.skipped.push_back(
          "n in [" + std::to_string(effective + 1) + ", " +
          std::to_string(n_max) + "]: above the enumeration ceiling");
    }
    return report;
  };

  std::vector<ClaimReport> reports;
  if (options.parallel) {
    std::vector<std::future<ClaimReport>> futures;
    for (const ClaimEntry& entry : registry()) {
      futures.push_back(std::async(std::launch::async, one, std::cref(entry)));
    }
    for (auto& f : futures) reports.push_back(f.get());
  } else {
    for (const ClaimEntry& entry : registry()) reports.push_back(one(entry));
  }
  return reports;
}

bool any_failed(const std::vector<ClaimReport>& reports) {
  return std::any_of(reports.begin(), reports.end(),
                     [](const ClaimReport& r) { return r.failed(); });
}

}  // namespace unicyclic
