#include "grim/pencil.hpp"

#include <algorithm>

#include "grim/error.hpp"
#include "grim/random.hpp"
#include "grim/subspace.hpp"

namespace grim {

namespace {

UPoly exact_quotient(const UPoly& a, const UPoly& b) {
  UPoly q, r;
  UPoly::divmod(a, b, q, r);
  if (!r.is_zero()) throw Error(ErrorCode::Internal, "expected exact polynomial division");
  return q;
}

}  // namespace

RatMatrix restrict_to_hyperplane(const Poly& q, const Poly& h) {
  if (h.is_zero()) throw Error(ErrorCode::BadInput, "the hyperplane form is zero");
  LinearSection sec(h.ring(), std::vector<Poly>{h});
  return quadratic_form_matrix(sec.restrict(q));
}

QuadricPencil make_pencil(const Poly& q1, const Poly& q2, const Poly& h) {
  if (h.is_zero()) throw Error(ErrorCode::BadInput, "the hyperplane form is zero");
  LinearSection sec(h.ring(), std::vector<Poly>{h});
  QuadricPencil p;
  p.ring = sec.sub();
  p.q1 = sec.restrict(q1);
  p.q2 = sec.restrict(q2);
  p.m1 = quadratic_form_matrix(p.q1);
  p.m2 = quadratic_form_matrix(p.q2);
  return p;
}

QuadricPencil make_pencil(const Poly& q1, const Poly& q2) {
  QuadricPencil p;
  p.ring = q1.ring();
  p.q1 = q1;
  p.q2 = q2.to_ring(p.ring);
  p.m1 = quadratic_form_matrix(p.q1);
  p.m2 = quadratic_form_matrix(p.q2);
  return p;
}

QuadricPencil case_b_pencil(const CaseReport& report) {
  if (report.case_tag != ImageCase::B || report.hyperplanes.size() != 1 || !report.extra_quadric)
    throw Error(ErrorCode::BadInput, "a quadric pencil exists only for case-B images");
  const Poly& h = report.hyperplanes[0];
  LinearSection sec(h.ring(), report.hyperplanes);
  Poly g = sec.restrict(grassmann_relation()).monic();
  return make_pencil(sec.lift(g), *report.extra_quadric, h);
}

RingPtr pencil_ring() {
  static const RingPtr ring = Ring::make({"l", "m"});
  return ring;
}

RatMatrix pencil_member(const QuadricPencil& p, const Rational& lambda, const Rational& mu) {
  return lambda * p.m1 + mu * p.m2;
}

PolyMatrix symbolic_pencil(const QuadricPencil& p) {
  RingPtr r = pencil_ring();
  Poly l = Poly::variable(r, 0), m = Poly::variable(r, 1);
  std::size_t n = p.m1.rows();
  PolyMatrix out(n, std::vector<Poly>(n, Poly(r)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = l * p.m1(i, j) + m * p.m2(i, j);
  return out;
}

GenericRank pencil_generic_rank(const QuadricPencil& p, std::uint64_t seed) {
  GenericRank out;
  out.determinant = determinant(symbolic_pencil(p), pencil_ring());
  RationalSampler rng(seed);
  for (int attempt = 0; attempt < 8; ++attempt) {
    Rational l1 = rng.next(), m1 = rng.next(), l2 = rng.next(), m2 = rng.next();
    std::size_t r1 = matrix_rank(pencil_member(p, l1, m1));
    std::size_t r2 = matrix_rank(pencil_member(p, l2, m2));
    if (r1 == r2) {
      out.rank = r1;
      return out;
    }
  }
  throw Error(ErrorCode::Internal, "pencil rank samples keep disagreeing");
}

std::string RankStratum::parameter_string() const {
  if (degenerate) return "all";
  if (point) return "(" + to_string(point->first) + ":" + to_string(point->second) + ")";
  return polynomial.to_string("t") + " = 0, t = l/m";
}

std::vector<RankStratum> rank_strata(const QuadricPencil& p, std::size_t generic_rank) {
  std::vector<RankStratum> out;
  if (generic_rank == 0) return out;
  PolyMatrix sym = symbolic_pencil(p);
  RingPtr r = pencil_ring();

  // Z(G_k) is where the rank drops below k; these sets shrink with k.
  std::vector<BinaryForm> drops(generic_rank + 1);
  for (std::size_t k = 1; k <= generic_rank; ++k) {
    BinaryForm g = binary_form_gcd(minors(sym, k, r));
    if (!g.affine.is_zero()) g.affine = square_free_part(g.affine);
    drops[k] = g;
  }
  if (drops[generic_rank].affine.is_zero()) {
    RankStratum s;
    s.degenerate = true;
    s.rank = generic_rank - 1;
    out.push_back(s);
    return out;
  }
  for (std::size_t rank = generic_rank; rank-- > 0;) {
    const BinaryForm& below = drops[rank + 1];
    UPoly exact = below.affine;
    bool infinity = below.mu_power > 0;
    if (rank > 0 && !drops[rank].affine.is_zero()) {
      exact = exact_quotient(exact, drops[rank].affine);
      infinity = infinity && drops[rank].mu_power == 0;
    }
    if (infinity) {
      RankStratum s;
      s.point = std::make_pair(Rational(1), Rational(0));
      s.rank = matrix_rank(p.m1);
      out.push_back(s);
    }
    for (const auto& t : rational_roots(exact)) {
      RankStratum s;
      s.point = std::make_pair(t, Rational(1));
      s.rank = matrix_rank(pencil_member(p, t, 1));
      out.push_back(s);
      exact = exact_quotient(exact, UPoly({-t, Rational(1)}));
    }
    if (exact.degree() > 0) {
      RankStratum s;
      s.polynomial = exact.monic();
      s.irreducible = exact.degree() <= 3;
      s.rank = rank;
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace grim
