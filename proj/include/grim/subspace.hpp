#pragma once

#include <span>
#include <vector>

#include "grim/matrix.hpp"
#include "grim/poly.hpp"

namespace grim {

/// Coordinates on the linear subspace {L_1 = ... = L_r = 0} of a projective
/// space. The forms are brought to reduced echelon form over the variable
/// index order; each pivot variable is solved for in terms of the free
/// variables, which become the coordinates of the subspace.
class LinearSection {
public:
  LinearSection(const RingPtr& ambient, std::span<const Poly> linear_forms);

  const RingPtr& ambient() const { return ambient_; }
  /// Ring of the free variables, in ambient index order.
  const RingPtr& sub() const { return sub_; }
  const std::vector<std::size_t>& free_vars() const { return free_; }
  const std::vector<std::size_t>& pivot_vars() const { return pivots_; }
  /// The defining forms in reduced echelon form.
  const std::vector<Poly>& forms() const { return forms_; }

  /// f restricted to the subspace, as a polynomial in sub().
  Poly restrict(const Poly& f) const;
  /// A polynomial in sub() viewed in the ambient ring (free variables only).
  Poly lift(const Poly& f) const;
  /// Ambient coordinates of a point given in subspace coordinates.
  RatVector lift_point(const RatVector& p) const;

private:
  RingPtr ambient_, sub_;
  std::vector<std::size_t> free_, pivots_;
  std::vector<Poly> forms_;
  std::vector<Poly> images_;  // ambient variable -> polynomial in sub_
};

/// Coefficient vector (one entry per variable) of a linear form.
RatVector linear_coefficients(const Poly& linear_form);
Poly linear_form_from(const RatVector& coeffs, const RingPtr& ring);

}  // namespace grim
