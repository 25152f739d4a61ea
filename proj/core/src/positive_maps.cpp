#include "hconv/positive_maps.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "hconv/errors.hpp"

namespace hconv {

namespace {

double max_abs(const ComplexMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

constexpr double kMapTol = 1e-10;

}  // namespace

PositiveMapSpec PositiveMapSpec::conjugation(ComplexMatrix c) {
  if (c.rows() < 1 || c.cols() < 1) {
    throw DimensionError("conjugation frame must be nonempty");
  }
  PositiveMapSpec spec;
  spec.variant = Variant::conjugation;
  spec.dim_in = static_cast<int>(c.rows());
  spec.dim_out = static_cast<int>(c.cols());
  spec.frame = std::move(c);
  return spec;
}

PositiveMapSpec PositiveMapSpec::conjugation_unital(ComplexMatrix c) {
  const ComplexMatrix gram = c.adjoint() * c;
  const ComplexMatrix eye = ComplexMatrix::Identity(c.cols(), c.cols());
  if (max_abs(gram - eye) > kMapTol) {
    throw DomainError("conjugation frame is not an isometry (C*C != I)");
  }
  return conjugation(std::move(c));
}

PositiveMapSpec PositiveMapSpec::pinching(std::vector<ComplexMatrix> ps) {
  if (ps.empty()) throw DimensionError("pinching needs projections");
  const auto n = ps.front().rows();
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (const auto& p : ps) {
    if (p.rows() != n || p.cols() != n) {
      throw DimensionError("projections must share a square shape");
    }
    if (max_abs(p - p.adjoint()) > kMapTol || max_abs(p * p - p) > kMapTol) {
      throw DomainError("pinching element is not an orthogonal projection");
    }
    sum += p;
  }
  if (max_abs(sum - ComplexMatrix::Identity(n, n)) > kMapTol) {
    throw DomainError("pinching projections do not sum to the identity");
  }
  PositiveMapSpec spec;
  spec.variant = Variant::pinching;
  spec.dim_in = static_cast<int>(n);
  spec.dim_out = static_cast<int>(n);
  spec.projections = std::move(ps);
  return spec;
}

PositiveMapSpec PositiveMapSpec::mixture(std::vector<PositiveMapSpec> children,
                                         std::vector<double> weights) {
  if (children.empty() || children.size() != weights.size()) {
    throw DimensionError("mixture needs matching children and weights");
  }
  double sum = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw DomainError("mixture weights must be non-negative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw DomainError("mixture weights must sum to 1");
  }
  const int din = children.front().dim_in;
  const int dout = children.front().dim_out;
  for (const auto& c : children) {
    if (c.dim_in != din || c.dim_out != dout) {
      throw DimensionError("mixture children must share dimensions");
    }
  }
  PositiveMapSpec spec;
  spec.variant = Variant::mixture;
  spec.dim_in = din;
  spec.dim_out = dout;
  spec.children = std::move(children);
  spec.weights = std::move(weights);
  return spec;
}

PositiveMapSpec PositiveMapSpec::normalized_trace(int dim_in) {
  if (dim_in < 1) throw DimensionError("dim_in must be >= 1");
  PositiveMapSpec spec;
  spec.variant = Variant::normalized_trace;
  spec.dim_in = dim_in;
  spec.dim_out = 1;
  return spec;
}

std::string PositiveMapSpec::variant_name() const {
  switch (variant) {
    case Variant::conjugation: return "conjugation";
    case Variant::pinching: return "pinching";
    case Variant::mixture: return "mixture";
    case Variant::normalized_trace: return "normalized_trace";
  }
  return "?";
}

HermitianMatrix apply(const PositiveMapSpec& phi, const HermitianMatrix& a) {
  if (a.dim() != phi.dim_in) {
    throw DimensionError("input dimension does not match the map");
  }
  switch (phi.variant) {
    case PositiveMapSpec::Variant::conjugation:
      return hermitian_unchecked(phi.frame.adjoint() * a.raw() * phi.frame);
    case PositiveMapSpec::Variant::pinching: {
      ComplexMatrix out = ComplexMatrix::Zero(phi.dim_out, phi.dim_out);
      for (const auto& p : phi.projections) out += p * a.raw() * p;
      return hermitian_unchecked(std::move(out));
    }
    case PositiveMapSpec::Variant::mixture: {
      ComplexMatrix out = ComplexMatrix::Zero(phi.dim_out, phi.dim_out);
      for (std::size_t i = 0; i < phi.children.size(); ++i) {
        out += phi.weights[i] * apply(phi.children[i], a).raw();
      }
      return hermitian_unchecked(std::move(out));
    }
    case PositiveMapSpec::Variant::normalized_trace: {
      ComplexMatrix out(1, 1);
      out(0, 0) = a.raw().trace() / static_cast<double>(a.dim());
      return hermitian_unchecked(std::move(out));
    }
  }
  throw Error("unreachable map variant");
}

bool check_unital(const PositiveMapSpec& phi) {
  const HermitianMatrix image = apply(phi, HermitianMatrix::identity(phi.dim_in));
  const ComplexMatrix eye = ComplexMatrix::Identity(phi.dim_out, phi.dim_out);
  return max_abs(image.raw() - eye) <= kMapTol;
}

PredicateReport check_positive_spot(const PositiveMapSpec& phi, int trials,
                                    std::uint64_t seed) {
  if (trials < 1) throw DomainError("trials must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  PredicateReport rep;
  rep.worst_violation = std::numeric_limits<double>::infinity();
  for (int i = 0; i < trials; ++i) {
    ComplexMatrix g(phi.dim_in, phi.dim_in);
    for (int r = 0; r < phi.dim_in; ++r) {
      for (int c = 0; c < phi.dim_in; ++c) {
        g(r, c) = std::complex<double>(gauss(rng), gauss(rng));
      }
    }
    const HermitianMatrix psd = hermitian_unchecked(g * g.adjoint());
    const HermitianMatrix image = apply(phi, psd);
    const double scale = std::max(1.0, spectral_norm(image));
    const double margin = min_eigenvalue(image) + 1e-10 * scale;
    if (margin < rep.worst_violation) {
      rep.worst_violation = margin;
      rep.witness = {static_cast<double>(i), min_eigenvalue(image)};
    }
  }
  rep.holds = rep.worst_violation >= 0.0;
  return rep;
}

ComplexMatrix random_isometry(int dim_in, int dim_out, std::uint64_t seed) {
  if (dim_out > dim_in) {
    throw DimensionError("isometry requires dim_out <= dim_in");
  }
  if (dim_out < 1) throw DimensionError("dim_out must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(dim_in, dim_out);
  for (int r = 0; r < dim_in; ++r) {
    for (int c = 0; c < dim_out; ++c) {
      g(r, c) = std::complex<double>(gauss(rng), gauss(rng));
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() *
                    ComplexMatrix::Identity(dim_in, dim_out);
  return q;
}

std::string to_string(FamilyMode m) {
  return m == FamilyMode::each_unital ? "each_unital" : "jointly_unital";
}

HermitianMatrix family_unit_image(const MapFamily& family) {
  if (family.maps.empty()) throw DimensionError("family must be nonempty");
  HermitianMatrix sum = HermitianMatrix::zero(family.maps.front().dim_out);
  for (const auto& phi : family.maps) {
    sum = sum + apply(phi, HermitianMatrix::identity(phi.dim_in));
  }
  return sum;
}

void validate(const MapFamily& family) {
  if (family.maps.empty()) throw DomainError("family must be nonempty");
  const int dout = family.maps.front().dim_out;
  for (const auto& phi : family.maps) {
    if (phi.dim_out != dout) {
      throw DimensionError("family members must share the output dimension");
    }
  }
  if (family.mode == FamilyMode::each_unital) {
    for (const auto& phi : family.maps) {
      if (!check_unital(phi)) {
        throw DomainError("each_unital family contains a non-unital map");
      }
    }
  } else {
    const HermitianMatrix total = family_unit_image(family);
    const ComplexMatrix eye = ComplexMatrix::Identity(dout, dout);
    if (max_abs(total.raw() - eye) > kMapTol) {
      throw DomainError("jointly_unital family: sum Phi_j(I) != I");
    }
  }
}

PositiveMapSpec random_pinching(int dim, int blocks, std::uint64_t seed) {
  if (blocks < 1 || blocks > dim) {
    throw DimensionError("blocks must lie in [1, dim]");
  }
  const ComplexMatrix u = random_isometry(dim, dim, seed);
  std::vector<ComplexMatrix> ps;
  int start = 0;
  for (int b = 0; b < blocks; ++b) {
    const int width = dim / blocks + (b < dim % blocks ? 1 : 0);
    const ComplexMatrix cols = u.middleCols(start, width);
    ps.push_back(cols * cols.adjoint());
    start += width;
  }
  return PositiveMapSpec::pinching(std::move(ps));
}

MapFamily random_family(int n, int dim_in, int dim_out, FamilyMode mode,
                        std::uint64_t seed) {
  if (n < 1) throw DimensionError("family size must be >= 1");
  if (dim_out > dim_in) {
    throw DimensionError("family requires dim_out <= dim_in");
  }
  std::mt19937_64 rng(seed);
  MapFamily family;
  family.mode = mode;

  if (mode == FamilyMode::jointly_unital) {
    // Positive diagonal weights D_j with sum_j D_j^2 = I, then C_j = V_j D_j.
    std::uniform_real_distribution<double> unif(0.1, 1.0);
    Eigen::MatrixXd d(n, dim_out);
    for (int k = 0; k < dim_out; ++k) {
      double norm2 = 0.0;
      for (int j = 0; j < n; ++j) {
        d(j, k) = unif(rng);
        norm2 += d(j, k) * d(j, k);
      }
      for (int j = 0; j < n; ++j) d(j, k) /= std::sqrt(norm2);
    }
    for (int j = 0; j < n; ++j) {
      const ComplexMatrix v = random_isometry(dim_in, dim_out, rng());
      ComplexMatrix c = v;
      for (int k = 0; k < dim_out; ++k) c.col(k) *= d(j, k);
      family.maps.push_back(PositiveMapSpec::conjugation(std::move(c)));
    }
  } else {
    std::uniform_int_distribution<int> pick(0, dim_in == dim_out ? 2 : 0);
    for (int j = 0; j < n; ++j) {
      switch (pick(rng)) {
        case 1: {
          std::uniform_int_distribution<int> nb(1, std::max(1, dim_in / 2));
          family.maps.push_back(random_pinching(dim_in, nb(rng), rng()));
          break;
        }
        case 2: {
          auto a = PositiveMapSpec::conjugation_unital(
              random_isometry(dim_in, dim_out, rng()));
          auto b = PositiveMapSpec::conjugation_unital(
              random_isometry(dim_in, dim_out, rng()));
          family.maps.push_back(
              PositiveMapSpec::mixture({std::move(a), std::move(b)},
                                       {0.5, 0.5}));
          break;
        }
        default:
          family.maps.push_back(PositiveMapSpec::conjugation_unital(
              random_isometry(dim_in, dim_out, rng())));
      }
    }
  }
  validate(family);
  return family;
}

}  // namespace hconv
