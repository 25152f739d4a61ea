#ifndef HCONV_POSITIVE_MAPS_HPP
#define HCONV_POSITIVE_MAPS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hconv/matrix.hpp"
#include "hconv/report.hpp"

namespace hconv {

/// A positive linear map between matrix algebras, built from constructors
/// that guarantee positivity: conjugation A -> C*AC, pinching by orthogonal
/// projections summing to I, convex mixtures, and the normalized trace.
/// Non-positive maps are not expressible, so theorem failures can never be
/// blamed on a bad map.
struct PositiveMapSpec {
  enum class Variant { conjugation, pinching, mixture, normalized_trace };

  Variant variant = Variant::normalized_trace;
  int dim_in = 1;
  int dim_out = 1;
  ComplexMatrix frame;                       // conjugation: dim_in x dim_out
  std::vector<ComplexMatrix> projections;    // pinching
  std::vector<PositiveMapSpec> children;     // mixture
  std::vector<double> weights;               // mixture

  /// Conjugation with an arbitrary frame (unital only if C*C = I; used for
  /// members of jointly-unital families).
  static PositiveMapSpec conjugation(ComplexMatrix c);
  /// Conjugation validated to be unital: |C*C - I| <= 1e-10.
  static PositiveMapSpec conjugation_unital(ComplexMatrix c);
  /// Pinching; validates P_j^2 = P_j = P_j* and sum P_j = I within 1e-10.
  static PositiveMapSpec pinching(std::vector<ComplexMatrix> ps);
  /// Convex mixture of same-shape maps; weights sum to 1 within 1e-12.
  static PositiveMapSpec mixture(std::vector<PositiveMapSpec> children,
                                 std::vector<double> weights);
  /// A -> (tr A / dim) as a 1x1 matrix.
  static PositiveMapSpec normalized_trace(int dim_in);

  std::string variant_name() const;
};

HermitianMatrix apply(const PositiveMapSpec& phi, const HermitianMatrix& a);

/// True iff |Phi(I) - I| <= 1e-10 entrywise.
bool check_unital(const PositiveMapSpec& phi);

/// Samples random PSD inputs and verifies lambda_min(Phi(A)) >= -1e-10*scale.
PredicateReport check_positive_spot(const PositiveMapSpec& phi, int trials,
                                    std::uint64_t seed);

/// Seeded frame with orthonormal columns (C*C = I_out); dim_out <= dim_in.
ComplexMatrix random_isometry(int dim_in, int dim_out, std::uint64_t seed);

enum class FamilyMode { each_unital, jointly_unital };

std::string to_string(FamilyMode m);

/// A family {Phi_j}; each_unital means every member maps I to I,
/// jointly_unital means sum_j Phi_j(I) = I.
struct MapFamily {
  std::vector<PositiveMapSpec> maps;
  FamilyMode mode = FamilyMode::each_unital;

  int size() const { return static_cast<int>(maps.size()); }
};

/// Sum of Phi_j(I_in) over the family.
HermitianMatrix family_unit_image(const MapFamily& family);

/// Throws DomainError unless the family satisfies its mode invariant
/// within 1e-10.
void validate(const MapFamily& family);

/// Seeded random family honoring the mode invariant. jointly_unital families
/// are conjugations C_j = V_j D_j with isometries V_j and positive diagonal
/// D_j, sum D_j^2 = I; each_unital families mix unital conjugations,
/// pinchings and mixtures as dimensions permit.
MapFamily random_family(int n, int dim_in, int dim_out, FamilyMode mode,
                        std::uint64_t seed);

/// Random pinching of dim projections split into `blocks` groups.
PositiveMapSpec random_pinching(int dim, int blocks, std::uint64_t seed);

}  // namespace hconv

#endif
