#include "grim/plucker.hpp"

#include "grim/error.hpp"

namespace grim {

SectionQuadruple SectionQuadruple::from_coefficients(const RatMatrix& coeffs, const RingPtr& ring) {
  if (coeffs.rows() != 4 || coeffs.cols() != 5)
    throw Error(ErrorCode::ArityMismatch, "a section quadruple needs a 4x5 coefficient matrix");
  if (matrix_rank(coeffs) != 4)
    throw Error(ErrorCode::DependentSections, "the four sections are linearly dependent");
  auto basis = section_basis(ring);
  SectionQuadruple s;
  s.coeffs_ = coeffs;
  for (std::size_t i = 0; i < 4; ++i) {
    RatVector row = coeffs.row(i);
    s.sections_[i] = section_combine(row, basis);
  }
  return s;
}

SectionQuadruple SectionQuadruple::from_sections(const std::array<SectionE, 4>& sections) {
  RatMatrix c(4, 5);
  for (std::size_t i = 0; i < 4; ++i) {
    auto coords = section_coordinates(sections[i]);
    for (std::size_t j = 0; j < 5; ++j) c(i, j) = coords[j];
  }
  return from_coefficients(c, sections[0].g.ring());
}

Poly wedge_quadric(const SectionE& u, const SectionE& v, const Presentation& p) {
  const RingPtr& ring = p.ring();
  Poly gu = u.g.is_zero() ? Poly(ring) : u.g.to_ring(ring);
  Poly gv = v.g.is_zero() ? Poly(ring) : v.g.to_ring(ring);
  // Cofactor expansion along the first row.
  Poly det = (p.q() * v.b - gv * p.b()) * u.a;
  det -= (p.q() * v.a - gv * p.a()) * u.b;
  det += gu * (p.b() * v.a - p.a() * v.b);
  return det;
}

Poly plucker_identity_residual(const PluckerMap& m) {
  const auto& p = m.quadrics;
  return p[0] * p[5] - p[1] * p[4] + p[2] * p[3];
}

PluckerMap plucker_map(const SectionQuadruple& s, const Presentation& p) {
  if (matrix_rank(s.coefficients()) != 4)
    throw Error(ErrorCode::DependentSections, "the four sections are linearly dependent");
  const auto& w = s.sections();
  PluckerMap m;
  std::size_t k = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) m.quadrics[k++] = wedge_quadric(w[i], w[j], p);
  if (!plucker_identity_residual(m).is_zero())
    throw Error(ErrorCode::Internal, "Pluecker identity failed");
  return m;
}

bool generates_check(const PluckerMap& m, const GbOptions& opts) {
  RingPtr ring = m.quadrics[0].ring();
  return is_empty_projective(Ideal(ring, m.as_vector()), opts);
}

NormalizedQuadruple normalize_sections(const SectionQuadruple& s) {
  // Row-reduce [C | I]; pivoting only inside C keeps T * C = rref(C).
  const RatMatrix& c = s.coefficients();
  RatMatrix aug(4, 9);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t col = 0; col < 5; ++col) aug(r, col) = c(r, col);
    aug(r, 5 + r) = 1;
  }
  Echelon e = rref(aug);
  if (e.rank() < 2 || e.pivots[0] != 0 || e.pivots[1] != 1)
    throw Error(ErrorCode::NotSpanning,
                "the constant parts (a, b) of the sections do not span a 2-dimensional space; "
                "the morphism is special");
  if (e.rank() < 4 || e.pivots[3] >= 5)
    throw Error(ErrorCode::DependentSections, "the four sections are linearly dependent");

  NormalizedQuadruple out;
  out.change_of_basis = RatMatrix(4, 4);
  RingPtr ring = s.sections()[0].g.ring();
  auto basis = section_basis(ring);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t col = 0; col < 4; ++col) out.change_of_basis(r, col) = e.reduced(r, 5 + col);
    Poly f(ring);
    for (std::size_t v = 0; v < 3; ++v) f += basis[2 + v].g * e.reduced(r, 2 + v);
    out.f[r] = f;
  }
  return out;
}

RingPtr plucker_ring() {
  static const RingPtr ring = Ring::indexed("Z", 6);
  return ring;
}

Poly grassmann_relation() {
  RingPtr r = plucker_ring();
  auto z = [&](std::size_t i) { return Poly::variable(r, i); };
  return z(0) * z(5) - z(1) * z(4) + z(2) * z(3);
}

}  // namespace grim
