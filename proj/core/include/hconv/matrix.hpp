#ifndef HCONV_MATRIX_HPP
#define HCONV_MATRIX_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace hconv {

using ComplexMatrix = Eigen::MatrixXcd;

/// Default dimension cap for generated instances; desk-scale verification.
inline constexpr int kDefaultDimCap = 64;

/// Default relative Loewner tolerance, commensurate with eigensolver
/// backward error at the dimensions used here.
inline constexpr double kLoewnerTolRel = 1e-9;

/// A finite-dimensional self-adjoint operator. Construction symmetrizes
/// inputs whose departure from Hermitian is within roundoff
/// (max|A - A*| <= 1e-12 * max(1, max|A|)) and rejects anything worse.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(ComplexMatrix a);

  static HermitianMatrix identity(int dim);
  static HermitianMatrix diagonal(const std::vector<double>& entries);
  static HermitianMatrix zero(int dim);

  int dim() const { return static_cast<int>(m_.rows()); }
  const ComplexMatrix& raw() const { return m_; }

  HermitianMatrix operator+(const HermitianMatrix& o) const;
  HermitianMatrix operator-(const HermitianMatrix& o) const;
  HermitianMatrix operator*(double s) const;

 private:
  struct Trusted {};
  HermitianMatrix(ComplexMatrix a, Trusted) : m_(std::move(a)) {}
  ComplexMatrix m_;

  friend HermitianMatrix hermitian_unchecked(ComplexMatrix a);
};

inline HermitianMatrix operator*(double s, const HermitianMatrix& a) {
  return a * s;
}

/// Wraps a matrix that is Hermitian by construction (sums/conjugations of
/// Hermitian inputs) without re-validating.
HermitianMatrix hermitian_unchecked(ComplexMatrix a);

struct SpectralDecomp {
  Eigen::VectorXd eigenvalues;   // ascending
  ComplexMatrix eigenvectors;    // orthonormal columns, A = U diag(w) U*
};

/// Spectral decomposition of a Hermitian matrix. Throws ConvergenceError if
/// the underlying solver fails.
SpectralDecomp eig_h(const HermitianMatrix& a);

/// Functional calculus: phi applied to the eigenvalues, U phi(w) U*.
/// Throws DomainError if phi is not finite on the spectrum.
HermitianMatrix mat_func(const std::function<double(double)>& phi,
                         const HermitianMatrix& a);

/// Loewner comparison A <= B: true iff lambda_min(B-A) >= -tol_rel * scale
/// with scale = max(1, |A|_2, |B|_2). Returns (holds, lambda_min(B-A)).
std::pair<bool, double> loewner_leq(const HermitianMatrix& a,
                                    const HermitianMatrix& b,
                                    double tol_rel = kLoewnerTolRel);

/// True iff every eigenvalue lies in [m - slack, M + slack] with
/// slack = 1e-12 * max(1, |A|_2). Throws DomainError when m >= M.
bool spectrum_in(const HermitianMatrix& a, double m, double M);

double spectral_norm(const HermitianMatrix& a);
double min_eigenvalue(const HermitianMatrix& a);

/// Seeded random Hermitian matrix U diag(w) U* with w uniform in [m, M] and
/// U from orthonormalization of a Gaussian complex matrix. Deterministic per
/// seed; spectrum_in(result, m, M) holds by construction.
HermitianMatrix rand_hermitian(int dim, double m, double M, std::uint64_t seed,
                               int dim_cap = kDefaultDimCap);

/// Chord of phi through (m, phi(m)) and (M, phi(M)):
/// mu = (phi(M)-phi(m))/(M-m), nu = (M phi(m) - m phi(M))/(M-m).
struct SecantCoeffs {
  double mu = 0.0;
  double nu = 0.0;
  double m = 0.0;
  double M = 0.0;

  double line(double t) const { return mu * t + nu; }
};

SecantCoeffs secant_coeffs(const std::function<double(double)>& phi, double m,
                           double M);

/// Row-major (re, im) pair serialization used by the report format.
std::vector<std::pair<double, double>> to_pairs(const ComplexMatrix& a);
ComplexMatrix from_pairs(const std::vector<std::pair<double, double>>& entries,
                         int rows, int cols);

}  // namespace hconv

#endif
