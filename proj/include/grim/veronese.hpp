#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grim/imageclass.hpp"
#include "grim/pencil.hpp"
#include "grim/random.hpp"

namespace grim {

/// A conic a*x^2 + b*xy + c*xz + d*y^2 + e*yz + f*z^2, i.e. a point of the
/// P^5 of conics. Its P^5 coordinates are the entries of the symmetric
/// matrix, (a, b/2, c/2, d, e/2, f), so that the Veronese surface is the
/// locus of rank-one matrices.
struct ConicPoint {
  std::array<Rational, 6> coeffs;

  /// Throws DegreeMismatch unless q is a nonzero quadratic form in three
  /// variables.
  static ConicPoint from_poly(const Poly& q);
  static ConicPoint from_coordinates(const RatVector& z);
  Poly to_poly(const RingPtr& ring) const;
  RatVector coordinates() const;
  RatMatrix matrix() const;
  bool is_zero() const;
};

/// (x^2, xy, xz, y^2, yz, z^2) over `ring`.
std::vector<Poly> veronese_map(const RingPtr& ring);

/// 1, 2 or 3; throws BadInput for the zero conic.
std::size_t conic_rank(const ConicPoint& p);

/// det of [[Z0, Z1, Z2], [Z1, Z3, Z4], [Z2, Z4, Z5]] in plucker_ring().
Poly secant_cubic();

/// A line of P^5 spanned by two conics of rank <= 2 and containing no
/// rank-one conic (over the algebraic closure).
struct SecantLine {
  std::array<ConicPoint, 2> endpoints;
};

/// Validates the line through p and q; throws InvalidLine.
SecantLine secant_line(const ConicPoint& p, const ConicPoint& q);
/// The line through [l0*m1] and [l0*m2].
SecantLine special_line(const Poly& l0, const Poly& m1, const Poly& m2);

struct Projection {
  /// Linear forms in Z0..Z5 vanishing on the center, one per target
  /// coordinate.
  std::vector<Poly> chart;
  /// The composite P^2 -> P^{k-1}, one form per chart coordinate.
  std::vector<Poly> map;
  /// Target coordinates W0..W{k-1}.
  RingPtr target;
};

/// Chart obtained by dropping the pivot coordinates of the center's
/// reduced echelon form.
std::vector<Poly> default_chart(const std::vector<RatVector>& center);

/// Throws NotOnSecantMinusV unless p has rank 2. A supplied chart must
/// consist of 5 independent forms vanishing at p.
Projection project_from_point(const ConicPoint& p, const RingPtr& domain,
                              const std::optional<std::vector<Poly>>& chart = std::nullopt);
Projection project_from_line(const SecantLine& l, const RingPtr& domain,
                             const std::optional<std::vector<Poly>>& chart = std::nullopt);

struct RemarkCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct PointRemarkReport {
  Projection projection;
  Ideal image;
  std::vector<Poly> quadric_generators;
  std::int64_t image_degree = 0;
  std::int64_t map_degree = 0;
  std::size_t pencil_generic_rank = 0;
  Poly pencil_determinant;
  std::vector<RankStratum> strata;
  SingularLocus singular;
  /// Ideal in Z0..Z5 of f^{-1}(L_p), the part of V lying over L_p: V cut
  /// by the plane spanned by p and L_p.
  std::optional<Ideal> exceptional_conic;
  /// Its preimage in P^2 under the Veronese map, a line.
  std::optional<Poly> exceptional_line;
  std::vector<std::int64_t> line_fiber_lengths;
  std::vector<RemarkCheck> checks;

  bool passed() const;
};

struct LineRemarkReport {
  Projection projection;
  Ideal image;
  std::optional<Poly> quadric;
  std::size_t quadric_rank = 0;
  std::int64_t image_degree = 0;
  std::int64_t map_degree = 0;
  SingularLocus singular;
  std::vector<RemarkCheck> checks;

  bool passed() const;
};

PointRemarkReport verify_point_remark(const ConicPoint& p, const RingPtr& domain, std::uint64_t seed = 0,
                                      const std::optional<std::vector<Poly>>& chart = std::nullopt,
                                      const GbOptions& opts = {});
LineRemarkReport verify_line_remark(const SecantLine& l, const RingPtr& domain, std::uint64_t seed = 0,
                                    const std::optional<std::vector<Poly>>& chart = std::nullopt,
                                    const GbOptions& opts = {});

/// Product of two independent random linear forms.
ConicPoint random_rank2_conic(RationalSampler& rng, const RingPtr& domain);
/// special_line on random forms, redrawn until the line is valid.
SecantLine random_special_line(RationalSampler& rng, const RingPtr& domain);

}  // namespace grim
