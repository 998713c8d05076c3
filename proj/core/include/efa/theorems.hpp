#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "efa/enumerate.hpp"
#include "efa/order.hpp"

namespace efa {

enum class CheckStatus { pass, fail, vacuous };

std::string_view to_string(CheckStatus status);

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::pass;
  std::vector<Element> witness;  // filled on failure
  std::string detail;
};

/// Check ids in report order.
const std::vector<std::string>& theorem_ids();

struct TheoremReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult& at(std::string_view id) const;
};

/// Evaluates every statement literally on the model. Implications whose
/// hypothesis fails are reported as vacuous; biconditionals evaluate both
/// sides through separate deciders.
TheoremReport run_all(const Model& model);

struct ExhaustiveSummary {
  std::size_t max_size = 0;
  std::size_t models = 0;
  std::size_t duplicates = 0;
  std::vector<std::pair<std::size_t, std::size_t>> counts;  // (order, classes)
  /// check id -> {pass, fail, vacuous}
  std::map<std::string, std::array<std::size_t, 3>> tally;
  /// .efa text of every model that failed some check, with the check ids.
  std::vector<std::pair<std::string, std::vector<std::string>>> failures;

  std::size_t failure_count() const { return failures.size(); }
};

/// run_all over every enumerated model of order 2..n.
ExhaustiveSummary run_exhaustive(std::size_t n, const EnumerationOptions& options = {});

}  // namespace efa
