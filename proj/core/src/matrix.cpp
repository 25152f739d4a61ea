#include "hconv/matrix.hpp"

#include <cmath>
#include <random>

#include "hconv/errors.hpp"

namespace hconv {

namespace {

double max_abs(const ComplexMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

}  // namespace

HermitianMatrix::HermitianMatrix(ComplexMatrix a) : m_(std::move(a)) {
  if (m_.rows() < 1 || m_.rows() != m_.cols()) {
    throw DimensionError("Hermitian matrix must be square, dim >= 1");
  }
  const double scale = std::max(1.0, max_abs(m_));
  const double defect = max_abs(m_ - m_.adjoint());
  if (defect > 1e-12 * scale) {
    throw DomainError("matrix is not Hermitian (max defect " +
                      std::to_string(defect) + ")");
  }
  // Within roundoff: symmetrize quietly.
  m_ = 0.5 * (m_ + m_.adjoint().eval());
}

HermitianMatrix hermitian_unchecked(ComplexMatrix a) {
  return HermitianMatrix(0.5 * (a + a.adjoint().eval()),
                         HermitianMatrix::Trusted{});
}

HermitianMatrix HermitianMatrix::identity(int dim) {
  return hermitian_unchecked(ComplexMatrix::Identity(dim, dim));
}

HermitianMatrix HermitianMatrix::zero(int dim) {
  return hermitian_unchecked(ComplexMatrix::Zero(dim, dim));
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& entries) {
  const int n = static_cast<int>(entries.size());
  ComplexMatrix d = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) d(i, i) = entries[i];
  return hermitian_unchecked(std::move(d));
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& o) const {
  if (dim() != o.dim()) throw DimensionError("dimension mismatch in +");
  return hermitian_unchecked(m_ + o.m_);
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& o) const {
  if (dim() != o.dim()) throw DimensionError("dimension mismatch in -");
  return hermitian_unchecked(m_ - o.m_);
}

HermitianMatrix HermitianMatrix::operator*(double s) const {
  return hermitian_unchecked(s * m_);
}

SpectralDecomp eig_h(const HermitianMatrix& a) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a.raw());
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("eigensolver failed to converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

HermitianMatrix mat_func(const std::function<double(double)>& phi,
                         const HermitianMatrix& a) {
  const SpectralDecomp d = eig_h(a);
  Eigen::VectorXd mapped(d.eigenvalues.size());
  for (Eigen::Index i = 0; i < d.eigenvalues.size(); ++i) {
    const double v = phi(d.eigenvalues[i]);
    if (!std::isfinite(v)) {
      throw DomainError("eigenvalue " + std::to_string(d.eigenvalues[i]) +
                        " outside the domain of the calculus function");
    }
    mapped[i] = v;
  }
  return hermitian_unchecked(d.eigenvectors * mapped.asDiagonal() *
                             d.eigenvectors.adjoint());
}

double spectral_norm(const HermitianMatrix& a) {
  const SpectralDecomp d = eig_h(a);
  return d.eigenvalues.cwiseAbs().maxCoeff();
}

double min_eigenvalue(const HermitianMatrix& a) {
  return eig_h(a).eigenvalues[0];
}

std::pair<bool, double> loewner_leq(const HermitianMatrix& a,
                                    const HermitianMatrix& b, double tol_rel) {
  if (a.dim() != b.dim()) {
    throw DimensionError("Loewner comparison needs equal dimensions");
  }
  const double gap = min_eigenvalue(b - a);
  const double scale = std::max({1.0, spectral_norm(a), spectral_norm(b)});
  return {gap >= -tol_rel * scale, gap};
}

bool spectrum_in(const HermitianMatrix& a, double m, double M) {
  if (!(m < M)) throw DomainError("spectrum_in requires m < M");
  const SpectralDecomp d = eig_h(a);
  const double slack =
      1e-12 * std::max(1.0, d.eigenvalues.cwiseAbs().maxCoeff());
  return d.eigenvalues[0] >= m - slack &&
         d.eigenvalues[d.eigenvalues.size() - 1] <= M + slack;
}

HermitianMatrix rand_hermitian(int dim, double m, double M, std::uint64_t seed,
                               int dim_cap) {
  if (dim < 1) throw DimensionError("dim must be >= 1");
  if (dim > dim_cap) {
    throw DimensionError("dim " + std::to_string(dim) + " exceeds cap " +
                         std::to_string(dim_cap));
  }
  if (!(m < M)) throw DomainError("rand_hermitian requires m < M");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> spec(m, M);
  std::normal_distribution<double> gauss(0.0, 1.0);

  Eigen::VectorXd w(dim);
  for (int i = 0; i < dim; ++i) w[i] = spec(rng);
  ComplexMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      g(i, j) = std::complex<double>(gauss(rng), gauss(rng));
    }
  }
  const ComplexMatrix u =
      Eigen::HouseholderQR<ComplexMatrix>(g).householderQ() *
      ComplexMatrix::Identity(dim, dim);
  return hermitian_unchecked(u * w.asDiagonal() * u.adjoint());
}

SecantCoeffs secant_coeffs(const std::function<double(double)>& phi, double m,
                           double M) {
  if (!(m < M)) throw DomainError("secant_coeffs requires m < M");
  const double pm = phi(m);
  const double pM = phi(M);
  if (!std::isfinite(pm) || !std::isfinite(pM)) {
    throw DomainError("secant endpoints are not finite");
  }
  SecantCoeffs c;
  c.m = m;
  c.M = M;
  c.mu = (pM - pm) / (M - m);
  c.nu = (M * pm - m * pM) / (M - m);
  return c;
}

std::vector<std::pair<double, double>> to_pairs(const ComplexMatrix& a) {
  std::vector<std::pair<double, double>> out;
  out.reserve(static_cast<std::size_t>(a.size()));
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.emplace_back(a(i, j).real(), a(i, j).imag());
    }
  }
  return out;
}

ComplexMatrix from_pairs(const std::vector<std::pair<double, double>>& entries,
                         int rows, int cols) {
  if (static_cast<int>(entries.size()) != rows * cols) {
    throw DimensionError("entry count does not match rows*cols");
  }
  ComplexMatrix a(rows, cols);
  std::size_t k = 0;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j, ++k) {
      a(i, j) = std::complex<double>(entries[k].first, entries[k].second);
    }
  }
  return a;
}

}  // namespace hconv
