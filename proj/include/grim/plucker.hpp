#pragma once

#include <array>
#include <vector>

#include "grim/bundle.hpp"
#include "grim/matrix.hpp"

namespace grim {

/// Four sections of Q, kept together with their 4x5 coordinate matrix in
/// the fixed section basis. The rows must be linearly independent.
class SectionQuadruple {
public:
  static SectionQuadruple from_coefficients(const RatMatrix& coeffs, const RingPtr& ring);
  static SectionQuadruple from_sections(const std::array<SectionE, 4>& sections);

  const std::array<SectionE, 4>& sections() const { return sections_; }
  const RatMatrix& coefficients() const { return coeffs_; }

private:
  std::array<SectionE, 4> sections_;
  RatMatrix coeffs_;
};

/// The wedge of two sections of Q as a conic: the determinant of the rows
/// (a_u, b_u, g_u), (a_v, b_v, g_v), (A, B, Q).
Poly wedge_quadric(const SectionE& u, const SectionE& v, const Presentation& p);

/// Six Plücker quadrics in the order (p12, p13, p14, p23, p24, p34), the
/// coordinates Z0..Z5 of the composite P^2 -> Gr(2,4) -> P^5.
struct PluckerMap {
  std::array<Poly, 6> quadrics;

  std::vector<Poly> as_vector() const { return {quadrics.begin(), quadrics.end()}; }
};

/// Throws DependentSections for a dependent quadruple; checks the Plücker
/// identity before returning (Internal on failure).
PluckerMap plucker_map(const SectionQuadruple& s, const Presentation& p);

/// p12 p34 - p13 p24 + p14 p23 evaluated on the map (zero for every valid map).
Poly plucker_identity_residual(const PluckerMap& m);

/// True iff the six quadrics have no common zero on P^2, i.e. the four
/// sections generate Q at every point.
bool generates_check(const PluckerMap& m, const GbOptions& opts = {});

struct NormalizedQuadruple {
  /// Linear forms with sections (1,0,f1), (0,1,f2), (0,0,f3), (0,0,f4).
  std::array<Poly, 4> f;
  /// Invertible T with T * original coefficients = normalized coefficients.
  RatMatrix change_of_basis;
};

/// Recombines the quadruple into the shape above. Throws NotSpanning when
/// the constant parts (a, b) do not span a 2-dimensional space.
NormalizedQuadruple normalize_sections(const SectionQuadruple& s);

/// Ring Z0..Z5 used for every image in P^5.
RingPtr plucker_ring();

/// The quadric Z0*Z5 - Z1*Z4 + Z2*Z3 cutting out Gr(2,4) under this
/// coordinate convention.
Poly grassmann_relation();

}  // namespace grim
