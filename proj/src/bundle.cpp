#include "grim/bundle.hpp"

#include "grim/error.hpp"

namespace grim {

namespace {

void require_form(const Poly& f, int degree, const char* what) {
  if (f.ring()->nvars() != 3)
    throw Error(ErrorCode::DegreeMismatch, std::string(what) + " must live in a ring of three variables");
  if (f.is_zero() || f.degree() != degree || !f.is_homogeneous())
    throw Error(ErrorCode::DegreeMismatch, std::string(what) + " must be a form of degree " +
                                               std::to_string(degree) + ", got " + f.to_string());
}

}  // namespace

Presentation Presentation::make(const Poly& a, const Poly& b, const Poly& q, const GbOptions& opts) {
  require_form(a, 1, "A");
  require_form(b, 1, "B");
  require_form(q, 2, "Q");
  const RingPtr& ring = a.ring();
  Ideal base(ring, {a, b, q});
  if (!is_empty_projective(base, opts)) {
    std::string witness;
    for (const auto& g : base.basis(opts)) witness += (witness.empty() ? "" : ", ") + g.to_string();
    throw Error(ErrorCode::CommonZero,
                "A, B, Q have a common zero in P^2; zero set defined by (" + witness + ")");
  }
  return Presentation(a, b.to_ring(ring), q.to_ring(ring));
}

Presentation standard_presentation(const RingPtr& ring) {
  Poly x = Poly::variable(ring, 0), y = Poly::variable(ring, 1), z = Poly::variable(ring, 2);
  return Presentation::make(x, y, z * z);
}

ChernPair chern_of_cokernel(std::span<const long> source, std::span<const long> target) {
  if (static_cast<long>(target.size()) - static_cast<long>(source.size()) != 2)
    throw Error(ErrorCode::ArityMismatch, "cokernel must have rank two (target rank - source rank = 2)");
  // Truncated series (c0, c1, c2) in Z[h]/(h^3).
  auto mul = [](std::array<long, 3> s, long a) {
    // s * (1 + a h)
    return std::array<long, 3>{s[0], s[1] + a * s[0], s[2] + a * s[1]};
  };
  std::array<long, 3> top{1, 0, 0}, bottom{1, 0, 0};
  for (long t : target) top = mul(top, t);
  for (long s : source) bottom = mul(bottom, s);
  // bottom is 1 + u h + v h^2; its inverse is 1 - u h + (u^2 - v) h^2.
  std::array<long, 3> inv{1, -bottom[1], bottom[1] * bottom[1] - bottom[2]};
  ChernPair cp;
  cp.c1 = top[1] + inv[1];
  cp.c2 = top[2] + top[1] * inv[1] + inv[2];
  return cp;
}

std::vector<SectionE> section_basis(const RingPtr& ring) {
  std::vector<SectionE> basis;
  basis.push_back({1, 0, Poly(ring)});
  basis.push_back({0, 1, Poly(ring)});
  for (std::size_t v = 0; v < 3; ++v) basis.push_back({0, 0, Poly::variable(ring, v)});
  return basis;
}

std::vector<SectionE> section_basis(const Presentation& p) { return section_basis(p.ring()); }

SectionE section_combine(std::span<const Rational> coeffs, std::span<const SectionE> basis) {
  if (coeffs.size() != basis.size() || basis.empty())
    throw Error(ErrorCode::ArityMismatch, "need one coefficient per basis section");
  SectionE out{0, 0, Poly(basis[0].g.ring())};
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    out.a += coeffs[k] * basis[k].a;
    out.b += coeffs[k] * basis[k].b;
    out.g += basis[k].g * coeffs[k];
  }
  return out;
}

std::array<Rational, 5> section_coordinates(const SectionE& s) {
  std::array<Rational, 5> c{s.a, s.b, 0, 0, 0};
  for (std::size_t v = 0; v < 3; ++v) c[2 + v] = s.g.coeff(Monomial::variable(v));
  if (!s.g.is_zero() && (s.g.degree() != 1 || !s.g.is_homogeneous()))
    throw Error(ErrorCode::DegreeMismatch, "section component must be a linear form");
  return c;
}

}  // namespace grim
