#include "hconv/report.hpp"

namespace hconv {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::violated: return "violated";
    case Verdict::degenerate: return "degenerate";
  }
  return "?";
}

Verdict classify(double gap_min_eig, double tolerance_used) {
  return gap_min_eig >= -tolerance_used ? Verdict::holds : Verdict::violated;
}

}  // namespace hconv
