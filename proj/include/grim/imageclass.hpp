#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grim/groebner.hpp"
#include "grim/matrix.hpp"
#include "grim/plucker.hpp"

namespace grim {

/// Forms of a common degree in the domain ring (x, y, z), read as a map
/// P^2 -> P^{n-1}.
using Parametrization = std::vector<Poly>;

struct QuadricSpan {
  std::size_t dim = 0;
  /// Reduced-echelon basis of the linear relations among the forms; each
  /// vector c gives a linear form sum c_i Z_i vanishing on the image.
  std::vector<RatVector> relations;
  std::vector<Poly> relation_forms;
};

QuadricSpan quadric_span(std::span<const Poly> params, const RingPtr& target);

/// Homogeneous ideal of the closed image: the kernel of Z_i -> p_i,
/// obtained by eliminating the domain variables from (Z_i - p_i).
Ideal implicitize(std::span<const Poly> params, const RingPtr& target, const GbOptions& opts = {});
Ideal implicitize(const PluckerMap& m, const GbOptions& opts = {});

enum class ImageCase { A, B, OutOfScope };
std::string_view case_name(ImageCase c);

struct CaseReport {
  std::size_t span_dim = 0;
  ImageCase case_tag = ImageCase::OutOfScope;
  std::vector<Poly> hyperplanes;
  /// Case B: the degree-2 generator of the image ideal on the hyperplane
  /// whose coefficient at the leading monomial of the restricted
  /// Grassmann quadric vanishes (monic).
  std::optional<Poly> extra_quadric;
  /// Case A: rank of the Grassmann quadric restricted to the P^3 cut out
  /// by the two hyperplanes.
  std::optional<std::size_t> restricted_quadric_rank;
  Ideal image_ideal;
};

/// Throws NotGenerating when the quadruple does not generate Q.
CaseReport classify(const PluckerMap& m, const GbOptions& opts = {});

/// Degree of a surface; throws BadInput when the dimension is not 2.
std::int64_t image_degree(const Ideal& image, const GbOptions& opts = {});

/// Length of the scheme-theoretic fiber of the map over a target point.
/// Returns -1 when the fiber is positive-dimensional.
std::int64_t fiber_length(std::span<const Poly> params, const RatVector& target_point,
                          const GbOptions& opts = {});

/// Generic fiber length, the minimum over `trials` random domain points.
std::int64_t map_degree(std::span<const Poly> params, std::uint64_t seed, int trials = 5,
                        const GbOptions& opts = {});

/// Differential of the map in the affine charts z = 1 (domain) and
/// Z_chart = 1 (target), at the domain point (x, y, 1). Rows follow the
/// target coordinates other than `chart`; columns are d/dx, d/dy.
RatMatrix affine_differential(std::span<const Poly> params, std::size_t chart, const Rational& x,
                              const Rational& y);

enum class LocusKind { Empty, Point, Line, Other };
std::string_view locus_name(LocusKind k);

struct SingularLocus {
  LocusKind kind = LocusKind::Other;
  /// Coordinates are those of the linear span of the variety (the free
  /// variables of `span_forms`). For a point or line this is the ideal of
  /// the reduced locus; otherwise it is the saturated Jacobian ideal.
  Ideal ideal;
  HilbertData hilbert;
  /// Saturated Jacobian ideal. It may carry embedded points along the
  /// locus, which is why the reduced ideal is kept separately.
  Ideal jacobian;
  HilbertData jacobian_hilbert;
  /// Linear forms cutting out the span of the variety in the ambient space.
  std::vector<Poly> span_forms;
  /// Linear forms (ambient coordinates) defining the reduced locus when it
  /// is a point or line: span_forms plus the locus' own linear forms.
  std::vector<Poly> linear_forms;
  /// Number of independent linear forms in degree 1 of `ideal`.
  std::size_t local_linear_forms = 0;
  /// Spanning points of the locus in ambient coordinates (point/line only).
  std::vector<RatVector> points;
  std::string witness;
};

/// Jacobian criterion on a homogeneous surface (or any equidimensional
/// variety) ideal, computed inside its linear span and saturated by the
/// irrelevant ideal.
SingularLocus singular_locus(const Ideal& image, const GbOptions& opts = {});

std::string point_string(const RatVector& p);

}  // namespace grim
