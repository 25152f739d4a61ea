#ifndef HCONV_OPERATOR_CHECKS_HPP
#define HCONV_OPERATOR_CHECKS_HPP

#include <string>
#include <vector>

#include "hconv/catalog.hpp"
#include "hconv/matrix.hpp"
#include "hconv/positive_maps.hpp"
#include "hconv/report.hpp"
#include "hconv/vector_space.hpp"

namespace hconv {

// Checkers for the operator inequalities. Loewner gaps are minimum
// eigenvalues of RHS-LHS; hypotheses that cannot be decided numerically
// (operator convexity, operator h-convexity) are taken from declarations
// and listed as such in each report.

/// Midpoint form: f((A+B)/2) <= h(1/2) [f(A) + f(B)].
IneqReport check_op_hmid(const ScalarFunction& f, const HFunction& h,
                         const HermitianMatrix& a, const HermitianMatrix& b,
                         double tol_rel = kLoewnerTolRel);

/// Contractive Jensen form over a jointly-unital conjugation family:
///   f(sum_j C_j* A_j C_j) <= 2 h(1/2) sum_j C_j* f(A_j) C_j,
/// with sum_j C_j* C_j = I. n = 1 with an isometry C is the compression case.
IneqReport check_jensen_contraction(const ScalarFunction& f,
                                    const HFunction& h,
                                    const std::vector<HermitianMatrix>& as,
                                    const MapFamily& family,
                                    double tol_rel = kLoewnerTolRel);

/// Davis-Choi-Jensen with the h-weight: f(Phi(A)) <= 2 h(1/2) Phi(f(A))
/// for unital positive Phi.
IneqReport check_dcj(const ScalarFunction& f, const HFunction& h,
                     const PositiveMapSpec& phi, const HermitianMatrix& a,
                     double tol_rel = kLoewnerTolRel);

/// Weighted Jensen: f(sum t_j A_j) <= sum h(t_j) f(A_j) for probability
/// weights and super-multiplicative h. When f is flagged operator h-concave
/// and h sub-multiplicative, the reversed inequality is checked instead.
IneqReport check_weighted_jensen(const ScalarFunction& f, const HFunction& h,
                                 const std::vector<HermitianMatrix>& as,
                                 const WeightVector& w,
                                 double tol_rel = kLoewnerTolRel);

/// Composition through one unital map:
///   f(sum t_j Phi(A_j)) <= sum_j 2 h(t_j/2) Phi(f(A_j)).
IneqReport check_cor_weighted_dcj(const ScalarFunction& f, const HFunction& h,
                                  const PositiveMapSpec& phi,
                                  const std::vector<HermitianMatrix>& as,
                                  const WeightVector& w,
                                  double tol_rel = kLoewnerTolRel);

/// The three-term Mercer operator chain. With X = sum t_j Phi_j(A_j)
/// (weights absorbed when the family is jointly unital):
///   lhs = f(mI + MI - X)
///   mid = h((X-mI)/(M-m)) f(m) + h((MI-X)/(M-m)) f(M)
///   rhs = (mu_h + 2 nu_h)(f(m)+f(M)) I - sum h(t_j) Phi_j(f(A_j))
/// gap1 = lambda_min(mid-lhs), gap2 = lambda_min(rhs-mid); gap_outer checks
/// transitivity directly. mu_h, nu_h are the secant coefficients of h over
/// [0,1], where the normalized middle-term arguments live.
struct MercerChainReport {
  HermitianMatrix lhs;
  HermitianMatrix mid;
  HermitianMatrix rhs;
  double gap1 = 0.0;
  double gap2 = 0.0;
  double gap_outer = 0.0;
  double tolerance_used = 0.0;
  Verdict verdict = Verdict::degenerate;
  std::vector<std::string> hypotheses;
  std::string witness;

  bool holds() const { return verdict == Verdict::holds; }
};

MercerChainReport check_mercer_operator(const ScalarFunction& f,
                                        const HFunction& h,
                                        const MapFamily& family,
                                        const std::vector<HermitianMatrix>& as,
                                        const WeightVector& w, double m,
                                        double M,
                                        double tol_rel = kLoewnerTolRel);

/// Parameters of Psi(t) = mu_h (mu_f t + nu_f) + nu_h (f(m)+f(M)) - alpha g(t).
struct PsiParams {
  double mu_h = 0.0;
  double nu_h = 0.0;
  double mu_f = 0.0;
  double nu_f = 0.0;
  double f_m = 0.0;
  double f_M = 0.0;
  double alpha = 0.0;
  double m = 0.0;
  double M = 0.0;
};

double psi_eval(const PsiParams& params, const ScalarFunction& g, double t);

/// beta = max_{m<=t<=M} Psi(t) with t_star the maximizer: 2049-point grid
/// scan plus golden-section refinement (tolerance 1e-8 in t).
struct ComplementaryConstants {
  double alpha = 0.0;
  double beta = 0.0;
  double t_star = 0.0;
  PsiParams psi;
};

ComplementaryConstants beta_compute(const ScalarFunction& f,
                                    const ScalarFunction& g,
                                    const HFunction& h, double alpha, double m,
                                    double M);

/// Corollary cutoff for g = f, alpha > 0, f strictly convex with derivative:
///   t0 = f'^{-1}(mu_h mu_f / alpha) when alpha f'(m) < mu_h mu_f < alpha f'(M),
///   t0 = m when alpha f'(m) >= mu_h mu_f, t0 = M when alpha f'(M) <= mu_h mu_f.
/// The interior inverse is found by bisection (f' strictly increasing).
double t0_compute(const ScalarFunction& f, const HFunction& h, double alpha,
                  double m, double M);

/// Complementary Jensen: sum h(t_j) Phi_j(f(A_j)) <= alpha g(X) + beta I with
/// beta from beta_compute; also checks the endpoint lower bound for beta when
/// alpha*g is concave and the derivative upper bound when alpha*g is strictly
/// convex differentiable.
IneqReport check_complementary(const ScalarFunction& f, const ScalarFunction& g,
                               const HFunction& h, double alpha,
                               const MapFamily& family,
                               const std::vector<HermitianMatrix>& as,
                               const WeightVector& w, double m, double M,
                               double tol_rel = kLoewnerTolRel);

/// F(u,v) = u - alpha v form:
///   sum h(t_j) Phi_j(f(A_j)) - alpha g(X) <= (max_{[m,M]} Psi) I.
IneqReport check_linear_form_bound(const ScalarFunction& f,
                                 const ScalarFunction& g, const HFunction& h,
                                 double alpha, const MapFamily& family,
                                 const std::vector<HermitianMatrix>& as,
                                 const WeightVector& w, double m, double M,
                                 double tol_rel = kLoewnerTolRel);

}  // namespace hconv

#endif
