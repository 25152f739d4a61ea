#ifndef HCONV_REPORT_HPP
#define HCONV_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace hconv {

enum class Verdict { holds, violated, degenerate };

std::string to_string(Verdict v);

/// Result of a sampled structural predicate (super-additivity etc.).
/// worst_violation is the minimum of the defining residual over the sample;
/// the predicate holds when that minimum stays above -tolerance, where
/// tolerance is the absolute predicate tolerance widened by evaluation
/// roundoff at the worst sample.
struct PredicateReport {
  bool holds = false;
  double worst_violation = 0.0;
  double tolerance = 0.0;
  std::pair<double, double> witness{0.0, 0.0};
};

/// One inequality check. gap_min_eig is the minimum eigenvalue of RHS-LHS
/// (for scalar inequalities, the smallest residual). The verdict is `holds`
/// exactly when gap_min_eig >= -tolerance_used.
struct IneqReport {
  std::string lhs_tag;
  std::string rhs_tag;
  double gap_min_eig = 0.0;
  double tolerance_used = 0.0;
  Verdict verdict = Verdict::degenerate;
  std::string witness;  // serialized inputs (compact; full matrices on demand)
  std::vector<std::string> hypotheses;  // declared vs verified, per hypothesis
  std::vector<std::string> notes;       // perturbations, guards, reductions

  bool holds() const { return verdict == Verdict::holds; }
};

/// Fills verdict from gap and tolerance (degenerate must be set by the caller).
Verdict classify(double gap_min_eig, double tolerance_used);

}  // namespace hconv

#endif
