#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loewner/calculus.hpp"
#include "loewner/interval.hpp"
#include "loewner/sym_matrix.hpp"

namespace loewner {

/// Structured pass/fail for one spectral precondition, with the computed
/// intervals as evidence. margin < 0 means violated by |margin|.
struct HypothesisReport {
  std::string condition_name;
  bool holds = false;
  std::vector<std::pair<std::string, Interval>> intervals;
  double margin = 0.0;
  std::vector<std::pair<std::string, double>> sub_margins;
};

struct ChainLink {
  std::string label;
  SymMatrix lhs;
  SymMatrix rhs;
  LoewnerVerdict verdict; // for rhs - lhs
};

/// Verdict for one theorem instance. The claimed inequality is lhs <= rhs;
/// verdict classifies rhs - lhs. For chains the overall verdict is the
/// conjunction of the links.
struct InequalityReport {
  std::string theorem_id;
  std::optional<HypothesisReport> hypothesis;
  SymMatrix lhs;
  SymMatrix rhs;
  LoewnerVerdict verdict;
  std::vector<ChainLink> chain_links;
  std::string notes;
  std::string input_digest;

  bool inequality_holds() const { return verdict.at_least(); }
};

/// Conjunction of link verdicts: Equal if all Equal, GreaterOrEqual if all
/// hold at least, etc. Margin fields come from the weakest link.
LoewnerVerdict conjunction(const std::vector<ChainLink>& links);

struct ScalarCheck {
  std::string label;
  double lhs = 0.0;
  double rhs = 0.0;   // claimed: lhs <= rhs
  double margin = 0.0; // rhs - lhs
  bool holds = false;
};

struct InnerJensenReport {
  std::vector<ScalarCheck> checks;
  double bra_A_ket = 0.0;  // <Ax, x>
  double bra_fA_ket = 0.0; // <f(A)x, x>
  std::string notes;
};

} // namespace loewner
