#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "grim/imageclass.hpp"
#include "grim/matrix.hpp"
#include "grim/univariate.hpp"

namespace grim {

/// The pencil λ·M1 + μ·M2 of quadrics on a hyperplane of P^n.
struct QuadricPencil {
  RatMatrix m1, m2;
  /// The generating quadrics in the coordinates of the hyperplane.
  Poly q1, q2;
  RingPtr ring;
};

/// q restricted to {h = 0}, as a symmetric matrix in the coordinates left
/// after solving h for its first variable. Throws BadInput for h = 0.
RatMatrix restrict_to_hyperplane(const Poly& q, const Poly& h);

QuadricPencil make_pencil(const Poly& q1, const Poly& q2, const Poly& h);
/// Pencil of two quadrics on the whole ambient space.
QuadricPencil make_pencil(const Poly& q1, const Poly& q2);
/// Pencil spanned by the Grassmann quadric and the extra quadric of a
/// case-B report; throws BadInput for any other case.
QuadricPencil case_b_pencil(const CaseReport& report);

/// Ring (l, m) holding the pencil parameters.
RingPtr pencil_ring();
RatMatrix pencil_member(const QuadricPencil& p, const Rational& lambda, const Rational& mu);
/// λ·M1 + μ·M2 with entries in pencil_ring().
PolyMatrix symbolic_pencil(const QuadricPencil& p);

struct GenericRank {
  std::size_t rank = 0;
  /// det(λ·M1 + μ·M2) as a binary form.
  Poly determinant;
};

GenericRank pencil_generic_rank(const QuadricPencil& p, std::uint64_t seed = 0);

/// Parameters (λ:μ) where the rank equals `rank`. Either a single rational
/// point, or all roots of `polynomial` in t = λ/μ (square-free, without
/// rational roots).
struct RankStratum {
  std::optional<std::pair<Rational, Rational>> point;
  UPoly polynomial;
  /// True when `polynomial` is known to be irreducible over Q.
  bool irreducible = false;
  std::size_t rank = 0;
  /// Set when the rank drops on the whole pencil.
  bool degenerate = false;

  std::size_t member_count() const { return point ? 1 : static_cast<std::size_t>(polynomial.degree()); }
  std::string parameter_string() const;
};

/// Members whose rank is below `generic_rank`, grouped by exact rank in
/// descending order, rational points first within a rank.
std::vector<RankStratum> rank_strata(const QuadricPencil& p, std::size_t generic_rank);

}  // namespace grim
