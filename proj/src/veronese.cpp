#include "grim/veronese.hpp"

#include "grim/error.hpp"
#include "grim/subspace.hpp"

namespace grim {

namespace {

std::size_t conic_slot(const Monomial& m) {
  if (m.exp[0] == 2) return 0;
  if (m.exp[0] == 1) return m.exp[1] == 1 ? 1 : 2;
  if (m.exp[1] == 2) return 3;
  return m.exp[1] == 1 ? 4 : 5;
}

std::string generators_string(const std::vector<Poly>& gens) {
  std::string out = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += gens[i].to_string();
  }
  return out + ")";
}

/// s * M_p + t * M_q with entries in pencil_ring().
PolyMatrix symbolic_line(const ConicPoint& p, const ConicPoint& q) {
  RingPtr r = pencil_ring();
  Poly s = Poly::variable(r, 0), t = Poly::variable(r, 1);
  RatMatrix mp = p.matrix(), mq = q.matrix();
  PolyMatrix out(3, std::vector<Poly>(3, Poly(r)));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out[i][j] = s * mp(i, j) + t * mq(i, j);
  return out;
}

void check_domain(const RingPtr& domain) {
  if (domain->nvars() != 3) throw Error(ErrorCode::ArityMismatch, "the Veronese map needs a ring of three variables");
}

Projection project(const std::vector<RatVector>& center, const RingPtr& domain,
                   const std::optional<std::vector<Poly>>& chart) {
  check_domain(domain);
  RingPtr z = plucker_ring();
  std::size_t k = 6 - matrix_rank(RatMatrix::from_rows(center));
  Projection out;
  if (chart) {
    if (chart->size() != k)
      throw Error(ErrorCode::BadInput, "the chart needs " + std::to_string(k) + " linear forms");
    std::vector<RatVector> rows;
    for (const auto& f : *chart) {
      Poly g = f.to_ring(z);
      for (const auto& c : center)
        if (g.evaluate(c) != 0) throw Error(ErrorCode::BadInput, "chart form " + g.to_string() + " does not vanish on the center");
      rows.push_back(linear_coefficients(g));
      out.chart.push_back(g);
    }
    if (matrix_rank(RatMatrix::from_rows(rows)) != k)
      throw Error(ErrorCode::BadInput, "chart forms are linearly dependent");
  } else {
    out.chart = default_chart(center);
  }
  auto v = veronese_map(domain);
  for (const auto& f : out.chart) out.map.push_back(f.substitute(v));
  out.target = Ring::indexed("W", k);
  return out;
}

std::vector<RatVector> random_points_on_line(const RatVector& a, const RatVector& b, RationalSampler& rng,
                                             std::size_t count) {
  std::vector<RatVector> out;
  while (out.size() < count) {
    Rational s = rng.next_nonzero(), t = rng.next_nonzero();
    RatVector p(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) p[i] = s * a[i] + t * b[i];
    out.push_back(p);
  }
  return out;
}

bool all_passed(const std::vector<RemarkCheck>& checks) {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

}  // namespace

ConicPoint ConicPoint::from_poly(const Poly& q) {
  if (q.ring()->nvars() != 3) throw Error(ErrorCode::ArityMismatch, "a conic lives in a ring of three variables");
  if (q.is_zero() || q.degree() != 2 || !q.is_homogeneous())
    throw Error(ErrorCode::DegreeMismatch, "a conic must be a nonzero quadratic form, got " + q.to_string());
  ConicPoint p;
  for (const auto& t : q.terms()) p.coeffs[conic_slot(t.mono)] = t.coeff;
  return p;
}

ConicPoint ConicPoint::from_coordinates(const RatVector& z) {
  if (z.size() != 6) throw Error(ErrorCode::ArityMismatch, "a point of P^5 has six coordinates");
  ConicPoint p;
  p.coeffs = {z[0], 2 * z[1], 2 * z[2], z[3], 2 * z[4], z[5]};
  return p;
}

Poly ConicPoint::to_poly(const RingPtr& ring) const {
  check_domain(ring);
  auto v = veronese_map(ring);
  Poly out(ring);
  for (std::size_t i = 0; i < 6; ++i) out += v[i] * coeffs[i];
  return out;
}

RatVector ConicPoint::coordinates() const {
  const auto& c = coeffs;
  return {c[0], c[1] / 2, c[2] / 2, c[3], c[4] / 2, c[5]};
}

RatMatrix ConicPoint::matrix() const {
  RatVector z = coordinates();
  return RatMatrix::from_rows({{z[0], z[1], z[2]}, {z[1], z[3], z[4]}, {z[2], z[4], z[5]}});
}

bool ConicPoint::is_zero() const {
  for (const auto& c : coeffs)
    if (c != 0) return false;
  return true;
}

std::vector<Poly> veronese_map(const RingPtr& ring) {
  check_domain(ring);
  auto v = [&](std::size_t i) { return Poly::variable(ring, i); };
  return {v(0) * v(0), v(0) * v(1), v(0) * v(2), v(1) * v(1), v(1) * v(2), v(2) * v(2)};
}

std::size_t conic_rank(const ConicPoint& p) {
  if (p.is_zero()) throw Error(ErrorCode::BadInput, "the zero conic has no rank");
  return matrix_rank(p.matrix());
}

Poly secant_cubic() {
  RingPtr r = plucker_ring();
  auto z = [&](std::size_t i) { return Poly::variable(r, i); };
  PolyMatrix m{{z(0), z(1), z(2)}, {z(1), z(3), z(4)}, {z(2), z(4), z(5)}};
  return determinant(m, r);
}

SecantLine secant_line(const ConicPoint& p, const ConicPoint& q) {
  if (p.is_zero() || q.is_zero()) throw Error(ErrorCode::InvalidLine, "an endpoint is the zero conic");
  if (matrix_rank(RatMatrix::from_rows({p.coordinates(), q.coordinates()})) != 2)
    throw Error(ErrorCode::InvalidLine, "the endpoints coincide");
  PolyMatrix m = symbolic_line(p, q);
  if (!determinant(m, pencil_ring()).is_zero())
    throw Error(ErrorCode::InvalidLine, "the line leaves the secant variety");
  BinaryForm g = binary_form_gcd(minors(m, 2, pencil_ring()));
  if (g.affine.is_zero() || g.affine.degree() > 0 || g.mu_power > 0)
    throw Error(ErrorCode::InvalidLine, "the line meets the Veronese surface");
  return SecantLine{{p, q}};
}

SecantLine special_line(const Poly& l0, const Poly& m1, const Poly& m2) {
  for (const Poly* f : {&l0, &m1, &m2})
    if (f->is_zero() || f->degree() != 1 || !f->is_homogeneous())
      throw Error(ErrorCode::DegreeMismatch, "special_line needs linear forms");
  return secant_line(ConicPoint::from_poly(l0 * m1), ConicPoint::from_poly(l0 * m2));
}

std::vector<Poly> default_chart(const std::vector<RatVector>& center) {
  RingPtr z = plucker_ring();
  Echelon e = rref(RatMatrix::from_rows(center));
  std::vector<bool> pivot(6, false);
  for (auto p : e.pivots) pivot[p] = true;
  std::vector<Poly> out;
  for (std::size_t i = 0; i < 6; ++i) {
    if (pivot[i]) continue;
    Poly y = Poly::variable(z, i);
    for (std::size_t r = 0; r < e.rank(); ++r)
      if (e.reduced(r, i) != 0) y -= Poly::variable(z, e.pivots[r]) * e.reduced(r, i);
    out.push_back(y);
  }
  return out;
}

Projection project_from_point(const ConicPoint& p, const RingPtr& domain,
                              const std::optional<std::vector<Poly>>& chart) {
  if (p.is_zero() || conic_rank(p) != 2)
    throw Error(ErrorCode::NotOnSecantMinusV, "the center must be a conic of rank 2");
  return project({p.coordinates()}, domain, chart);
}

Projection project_from_line(const SecantLine& l, const RingPtr& domain,
                             const std::optional<std::vector<Poly>>& chart) {
  SecantLine checked = secant_line(l.endpoints[0], l.endpoints[1]);
  return project({checked.endpoints[0].coordinates(), checked.endpoints[1].coordinates()}, domain, chart);
}

bool PointRemarkReport::passed() const { return all_passed(checks); }
bool LineRemarkReport::passed() const { return all_passed(checks); }

PointRemarkReport verify_point_remark(const ConicPoint& p, const RingPtr& domain, std::uint64_t seed,
                                      const std::optional<std::vector<Poly>>& chart, const GbOptions& opts) {
  PointRemarkReport rep;
  rep.projection = project_from_point(p, domain, chart);
  const auto& map = rep.projection.map;
  rep.image = implicitize(map, rep.projection.target, opts);
  std::string image_text = generators_string(rep.image.generators());
  auto gens = minimal_generators(rep.image, opts);
  bool two_quadrics = gens.size() == 2 && gens[0].degree() == 2 && gens[1].degree() == 2;
  if (two_quadrics) rep.quadric_generators = gens;
  rep.checks.push_back({"image cut out by two quadrics", two_quadrics, "image ideal " + image_text});

  rep.image_degree = image_degree(rep.image, opts);
  rep.map_degree = map_degree(map, seed, 5, opts);
  rep.checks.push_back({"birational onto a degree-4 surface", rep.image_degree == 4 && rep.map_degree == 1,
                        "image degree " + std::to_string(rep.image_degree) + ", map degree " +
                            std::to_string(rep.map_degree)});

  if (two_quadrics) {
    QuadricPencil pencil = make_pencil(gens[0], gens[1]);
    GenericRank gr = pencil_generic_rank(pencil, seed);
    rep.pencil_generic_rank = gr.rank;
    rep.pencil_determinant = gr.determinant;
    rep.strata = rank_strata(pencil, gr.rank);
    bool ok = gr.rank == 4 && gr.determinant.is_zero() && !rep.strata.empty();
    for (const auto& s : rep.strata) ok = ok && !s.degenerate && s.rank == 3;
    std::string detail = "generic rank " + std::to_string(gr.rank) + ", determinant " + gr.determinant.to_string();
    for (const auto& s : rep.strata) detail += "; rank " + std::to_string(s.rank) + " at " + s.parameter_string();
    rep.checks.push_back({"pencil members have rank 3 or 4", ok, detail});
  } else {
    rep.checks.push_back({"pencil members have rank 3 or 4", false, "no pencil: image ideal " + image_text});
  }

  rep.singular = singular_locus(rep.image, opts);
  bool line = rep.singular.kind == LocusKind::Line;
  rep.checks.push_back({"singular along a line", line,
                        rep.singular.witness + "; Jacobian ideal " +
                            generators_string(rep.singular.jacobian.generators())});

  if (line) {
    // f^{-1}(L_p) is V cut by the plane over L_p: the chart composed with
    // the forms of L_p gives linear forms in Z0..Z5 vanishing at p.
    RingPtr z = plucker_ring();
    std::vector<Poly> cone;
    for (const auto& f : rep.singular.linear_forms) cone.push_back(f.substitute(rep.projection.chart));
    Ideal veronese = implicitize(veronese_map(domain), z, opts);
    Ideal over = saturate(veronese + Ideal(z, cone), Ideal::irrelevant(z), opts);
    HilbertData hd = hilbert_data(over, opts);
    std::size_t plane_forms = graded_piece(over, 1, opts).size();
    bool is_conic = hd.projective_dimension == 1 && hd.degree == 2 && plane_forms == 3;
    if (is_conic) rep.exceptional_conic = over;

    std::vector<Poly> pulled;
    for (const auto& f : rep.singular.linear_forms) {
      Poly g = f.substitute(map);
      if (!g.is_zero()) pulled.push_back(g);
    }
    Ideal preimage = saturate(Ideal(domain, pulled), Ideal::irrelevant(domain), opts);
    auto line_forms = minimal_generators(preimage, opts);
    if (line_forms.size() == 1 && line_forms[0].degree() == 1) rep.exceptional_line = line_forms[0];
    rep.checks.push_back({"preimage of the line is a conic", is_conic,
                          "ideal in P^5 " + generators_string(over.generators()) + ", in P^2 " +
                              generators_string(preimage.generators())});

    RationalSampler rng(seed ^ 0x9e3779b97f4a7c15ULL);
    bool double_cover = true;
    std::string detail = "fiber lengths";
    for (const auto& q : random_points_on_line(rep.singular.points[0], rep.singular.points[1], rng, 3)) {
      std::int64_t len = fiber_length(map, q, opts);
      rep.line_fiber_lengths.push_back(len);
      detail += " " + std::to_string(len);
      double_cover = double_cover && len == 2;
    }
    rep.checks.push_back({"double cover of the line", double_cover, detail});
  }
  return rep;
}

LineRemarkReport verify_line_remark(const SecantLine& l, const RingPtr& domain, std::uint64_t seed,
                                    const std::optional<std::vector<Poly>>& chart, const GbOptions& opts) {
  LineRemarkReport rep;
  rep.projection = project_from_line(l, domain, chart);
  const auto& map = rep.projection.map;
  rep.image = implicitize(map, rep.projection.target, opts);
  std::string image_text = generators_string(rep.image.generators());
  auto gens = minimal_generators(rep.image, opts);
  if (gens.size() == 1 && gens[0].degree() == 2) {
    rep.quadric = gens[0];
    rep.quadric_rank = matrix_rank(quadratic_form_matrix(gens[0]));
  }
  rep.checks.push_back({"image is a rank-3 quadric", rep.quadric && rep.quadric_rank == 3,
                        "image ideal " + image_text + ", rank " + std::to_string(rep.quadric_rank)});

  rep.singular = singular_locus(rep.image, opts);
  rep.checks.push_back({"singular only at the vertex", rep.singular.kind == LocusKind::Point, rep.singular.witness});

  rep.image_degree = image_degree(rep.image, opts);
  rep.map_degree = map_degree(map, seed, 5, opts);
  rep.checks.push_back({"generically two to one", rep.map_degree == 2 && rep.image_degree == 2,
                        "image degree " + std::to_string(rep.image_degree) + ", map degree " +
                            std::to_string(rep.map_degree)});
  return rep;
}

ConicPoint random_rank2_conic(RationalSampler& rng, const RingPtr& domain) {
  check_domain(domain);
  for (;;) {
    Poly a = rng.linear_form(domain), b = rng.linear_form(domain);
    RatMatrix rows = RatMatrix::from_rows({linear_coefficients(a), linear_coefficients(b)});
    if (matrix_rank(rows) == 2) return ConicPoint::from_poly(a * b);
  }
}

SecantLine random_special_line(RationalSampler& rng, const RingPtr& domain) {
  check_domain(domain);
  for (;;) {
    Poly l0 = rng.linear_form(domain), m1 = rng.linear_form(domain), m2 = rng.linear_form(domain);
    try {
      return special_line(l0, m1, m2);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InvalidLine) throw;
    }
  }
}

}  // namespace grim
