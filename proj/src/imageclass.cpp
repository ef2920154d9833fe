#include "grim/imageclass.hpp"

#include <algorithm>
#include <limits>

#include "grim/error.hpp"
#include "grim/random.hpp"
#include "grim/subspace.hpp"

namespace grim {

namespace {

unsigned common_degree(std::span<const Poly> params) {
  int d = -1;
  for (const auto& p : params) {
    if (p.is_zero()) continue;
    if (!p.is_homogeneous()) throw Error(ErrorCode::DegreeMismatch, "parametrizing forms must be homogeneous");
    if (d >= 0 && p.degree() != d)
      throw Error(ErrorCode::DegreeMismatch, "parametrizing forms must share one degree");
    d = p.degree();
  }
  return d < 0 ? 0u : static_cast<unsigned>(d);
}

RingPtr domain_ring(std::span<const Poly> params) {
  if (params.empty()) throw Error(ErrorCode::ArityMismatch, "empty parametrization");
  return params[0].ring();
}

RatVector normalized(RatVector v) {
  for (const auto& c : v)
    if (c != 0) {
      Rational s = c;
      for (auto& e : v) e /= s;
      break;
    }
  return v;
}

/// The point cut out by a saturated ideal of dimension 0 and degree 1.
std::optional<RatVector> single_point(const Ideal& ideal, const GbOptions& opts) {
  HilbertData hd = hilbert_data(ideal, opts);
  std::size_t n = ideal.ring()->nvars();
  if (hd.projective_dimension != 0 || hd.degree != 1) return std::nullopt;
  auto lin = graded_piece(ideal, 1, opts);
  if (lin.size() + 1 != n) return std::nullopt;
  std::vector<RatVector> rows;
  for (const auto& f : lin) rows.push_back(linear_coefficients(f));
  auto ker = matrix_rank_kernel(RatMatrix::from_rows(rows)).kernel;
  return ker.at(0);
}

/// Whether every generator vanishes identically on the line through p, q.
bool line_carries(const Ideal& ideal, const RatVector& p, const RatVector& q) {
  RingPtr st = Ring::make({"_s", "_t"});
  std::vector<Poly> images;
  for (std::size_t i = 0; i < p.size(); ++i)
    images.push_back(Poly::variable(st, 0) * p[i] + Poly::variable(st, 1) * q[i]);
  for (const auto& g : ideal.generators())
    if (!g.substitute(images).is_zero()) return false;
  return true;
}

}  // namespace

std::string point_string(const RatVector& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ":";
    out += to_string(p[i]);
  }
  return out + ")";
}

QuadricSpan quadric_span(std::span<const Poly> params, const RingPtr& target) {
  if (target->nvars() != params.size())
    throw Error(ErrorCode::ArityMismatch, "target ring does not match the number of forms");
  QuadricSpan out;
  if (params.empty()) return out;
  unsigned d = common_degree(params);
  std::size_t cols = monomials_of_degree(*domain_ring(params), d).size();
  // Columns of the transpose are the coefficient vectors of the forms, so
  // its kernel is the space of linear relations.
  RatMatrix t(cols, params.size());
  for (std::size_t i = 0; i < params.size(); ++i) {
    RatVector v = coefficient_vector(params[i], d);
    for (std::size_t r = 0; r < cols; ++r) t(r, i) = v[r];
  }
  RankKernel rk = matrix_rank_kernel(t);
  out.dim = rk.rank;
  out.relations = rk.kernel;
  for (const auto& rel : out.relations) out.relation_forms.push_back(linear_form_from(rel, target));
  return out;
}

Ideal implicitize(std::span<const Poly> params, const RingPtr& target, const GbOptions& opts) {
  RingPtr dom = domain_ring(params);
  if (target->nvars() != params.size())
    throw Error(ErrorCode::ArityMismatch, "target ring does not match the number of forms");
  std::size_t k = dom->nvars();
  std::vector<std::string> names = dom->names();
  for (const auto& n : target->names()) {
    if (std::find(names.begin(), names.end(), n) != names.end())
      throw Error(ErrorCode::RingMismatch, "domain and target share the variable name " + n);
    names.push_back(n);
  }
  if (names.size() > kMaxVars) throw Error(ErrorCode::ResourceLimit, "too many variables for implicitization");
  RingPtr graph = Ring::make(names, MonomialOrder::elimination(k));
  std::vector<std::size_t> dom_map(k);
  for (std::size_t i = 0; i < k; ++i) dom_map[i] = i;
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < params.size(); ++i)
    gens.push_back(Poly::variable(graph, k + i) - params[i].embed(graph, dom_map));
  Ideal image = eliminate(Ideal(graph, gens), k, opts);
  std::vector<Poly> out;
  for (const auto& g : image.generators()) {
    if (!g.is_homogeneous()) throw Error(ErrorCode::Internal, "implicitization produced an inhomogeneous generator");
    out.push_back(g.to_ring(target));
  }
  return Ideal(target, std::move(out));
}

Ideal implicitize(const PluckerMap& m, const GbOptions& opts) {
  auto params = m.as_vector();
  return implicitize(params, plucker_ring(), opts);
}

std::string_view case_name(ImageCase c) {
  switch (c) {
    case ImageCase::A: return "A";
    case ImageCase::B: return "B";
    case ImageCase::OutOfScope: return "out-of-scope";
  }
  return "?";
}

CaseReport classify(const PluckerMap& m, const GbOptions& opts) {
  if (!generates_check(m, opts))
    throw Error(ErrorCode::NotGenerating, "the six quadrics have a common zero; the sections do not generate");
  RingPtr z = plucker_ring();
  auto params = m.as_vector();
  QuadricSpan span = quadric_span(params, z);
  CaseReport rep;
  rep.span_dim = span.dim;
  rep.hyperplanes = span.relation_forms;
  if (span.dim == 4)
    rep.case_tag = ImageCase::A;
  else if (span.dim == 5)
    rep.case_tag = ImageCase::B;
  else
    rep.case_tag = ImageCase::OutOfScope;
  rep.image_ideal = implicitize(params, z, opts);

  if (rep.case_tag == ImageCase::A) {
    LinearSection sec(z, rep.hyperplanes);
    rep.restricted_quadric_rank = matrix_rank(quadratic_form_matrix(sec.restrict(grassmann_relation())));
  } else if (rep.case_tag == ImageCase::B) {
    LinearSection sec(z, rep.hyperplanes);
    std::vector<Poly> restricted;
    for (const auto& g : rep.image_ideal.generators()) {
      Poly r = sec.restrict(g);
      if (!r.is_zero()) restricted.push_back(r);
    }
    auto piece = graded_piece(Ideal(sec.sub(), restricted), 2, opts);
    Poly gr = sec.restrict(grassmann_relation());
    Monomial lm = gr.lead_mono();
    for (const auto& q : piece) {
      Poly e = q * gr.lead_coeff() - gr * q.coeff(lm);
      if (e.is_zero()) continue;
      rep.extra_quadric = sec.lift(e.monic());
      break;
    }
  }
  return rep;
}

std::int64_t image_degree(const Ideal& image, const GbOptions& opts) {
  HilbertData hd = hilbert_data(image, opts);
  if (hd.projective_dimension != 2)
    throw Error(ErrorCode::BadInput,
                "expected a surface, got projective dimension " + std::to_string(hd.projective_dimension));
  return hd.degree;
}

std::int64_t fiber_length(std::span<const Poly> params, const RatVector& q, const GbOptions& opts) {
  RingPtr dom = domain_ring(params);
  if (q.size() != params.size()) throw Error(ErrorCode::ArityMismatch, "target point has the wrong arity");
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < params.size(); ++i)
    for (std::size_t j = i + 1; j < params.size(); ++j) {
      Poly g = params[i] * q[j] - params[j] * q[i];
      if (!g.is_zero()) gens.push_back(std::move(g));
    }
  Ideal fiber = saturate(Ideal(dom, gens), Ideal::irrelevant(dom), opts);
  HilbertData hd = hilbert_data(fiber, opts);
  if (hd.projective_dimension < 0) return 0;
  if (hd.projective_dimension > 0) return -1;
  return hd.degree;
}

std::int64_t map_degree(std::span<const Poly> params, std::uint64_t seed, int trials, const GbOptions& opts) {
  RingPtr dom = domain_ring(params);
  RationalSampler rng(seed);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (int t = 0; t < trials; ++t) {
    RatVector pt = rng.vector(dom->nvars());
    RatVector q(params.size());
    bool nonzero = false;
    for (std::size_t i = 0; i < params.size(); ++i) {
      q[i] = params[i].evaluate(pt);
      nonzero = nonzero || q[i] != 0;
    }
    if (!nonzero) continue;  // base point of the system
    std::int64_t len = fiber_length(params, q, opts);
    if (len > 0) best = std::min(best, len);
  }
  if (best == std::numeric_limits<std::int64_t>::max())
    throw Error(ErrorCode::BadInput,
                "no trial point had a finite fiber; the map is not generically finite or more trials are needed");
  return best;
}

RatMatrix affine_differential(std::span<const Poly> params, std::size_t chart, const Rational& x,
                              const Rational& y) {
  RingPtr dom = domain_ring(params);
  if (dom->nvars() != 3) throw Error(ErrorCode::ArityMismatch, "the differential needs a map from P^2");
  if (chart >= params.size()) throw Error(ErrorCode::ArityMismatch, "chart index out of range");
  RatVector pt{x, y, Rational(1)};
  Rational fc = params[chart].evaluate(pt);
  if (fc == 0) throw Error(ErrorCode::BadInput, "the point lies off the target chart");
  Rational dfc[2] = {params[chart].derivative(0).evaluate(pt), params[chart].derivative(1).evaluate(pt)};
  RatMatrix jac(params.size() - 1, 2);
  std::size_t row = 0;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i == chart) continue;
    Rational fi = params[i].evaluate(pt);
    for (std::size_t v = 0; v < 2; ++v) {
      Rational dfi = params[i].derivative(v).evaluate(pt);
      jac(row, v) = (dfi * fc - fi * dfc[v]) / (fc * fc);
    }
    ++row;
  }
  return jac;
}

std::string_view locus_name(LocusKind k) {
  switch (k) {
    case LocusKind::Empty: return "empty";
    case LocusKind::Point: return "point";
    case LocusKind::Line: return "line";
    case LocusKind::Other: return "other";
  }
  return "?";
}

SingularLocus singular_locus(const Ideal& image, const GbOptions& opts) {
  if (!image.is_homogeneous()) throw Error(ErrorCode::BadInput, "singular_locus needs a homogeneous ideal");
  SingularLocus out;
  RingPtr amb = image.ring();
  out.span_forms = graded_piece(image, 1, opts);
  LinearSection sec(amb, out.span_forms);
  RingPtr sub = sec.sub();
  std::size_t n = sub->nvars();

  std::vector<Poly> restricted;
  for (const auto& g : image.generators()) {
    Poly r = sec.restrict(g);
    if (!r.is_zero()) restricted.push_back(r);
  }
  Ideal inner(sub, restricted);
  HilbertData hd = hilbert_data(inner, opts);
  if (hd.projective_dimension < 0) throw Error(ErrorCode::BadInput, "singular_locus of an empty scheme");
  std::size_t codim = n - 1 - static_cast<std::size_t>(hd.projective_dimension);

  if (codim == 0) {
    out.kind = LocusKind::Empty;
    out.ideal = out.jacobian = Ideal::unit(sub);
    out.hilbert = out.jacobian_hilbert = hilbert_data(out.ideal, opts);
    out.witness = "empty";
    return out;
  }
  auto gens = minimal_generators(inner, opts);
  if (gens.size() < codim)
    throw Error(ErrorCode::BadInput, "fewer generators than the codimension");
  if (gens.size() > 8)
    throw Error(ErrorCode::BadInput, "generator configuration outside the supported shapes");
  std::vector<Poly> jac_gens = gens;
  for (auto& m : minors(jacobian_matrix(gens), codim, sub))
    if (!m.is_zero()) jac_gens.push_back(std::move(m));
  out.jacobian = saturate(Ideal(sub, jac_gens), Ideal::irrelevant(sub), opts);
  out.jacobian_hilbert = hilbert_data(out.jacobian, opts);
  out.ideal = out.jacobian;
  out.hilbert = out.jacobian_hilbert;

  // Points of the reduced locus, in subspace coordinates.
  std::vector<RatVector> pts;
  int dim = out.jacobian_hilbert.projective_dimension;
  if (dim < 0) {
    out.kind = LocusKind::Empty;
  } else if (dim == 0 && out.jacobian_hilbert.degree == 1) {
    if (auto p = single_point(out.jacobian, opts)) {
      out.kind = LocusKind::Point;
      pts.push_back(*p);
    }
  } else if (dim == 1 && out.jacobian_hilbert.degree == 1) {
    // The top component is a reduced line; generic hyperplanes meet it in
    // one reduced point each and avoid any embedded points.
    RationalSampler rng(0x5eed);
    for (int trial = 0; trial < 8 && pts.size() < 2; ++trial) {
      Ideal cut = out.jacobian + Ideal(sub, {rng.linear_form(sub)});
      auto p = single_point(saturate(cut, Ideal::irrelevant(sub), opts), opts);
      if (!p) continue;
      if (pts.empty() || matrix_rank(RatMatrix::from_rows({pts[0], *p})) == 2) pts.push_back(*p);
    }
    if (pts.size() == 2 && line_carries(out.jacobian, pts[0], pts[1])) out.kind = LocusKind::Line;
  }

  if (out.kind == LocusKind::Point || out.kind == LocusKind::Line) {
    // Both bases come out in reduced echelon form, so the reported forms
    // and points do not depend on the sampled hyperplanes.
    std::vector<Poly> local;
    auto forms = matrix_rank_kernel(RatMatrix::from_rows(pts)).kernel;
    for (const auto& k : forms) local.push_back(linear_form_from(k, sub));
    pts = forms.empty() ? std::vector<RatVector>{RatVector(n, 1)} : matrix_rank_kernel(RatMatrix::from_rows(forms)).kernel;
    out.ideal = Ideal(sub, local);
    out.hilbert = hilbert_data(out.ideal, opts);
    out.local_linear_forms = local.size();
    out.linear_forms = out.span_forms;
    for (const auto& f : local) out.linear_forms.push_back(sec.lift(f));
    for (const auto& p : pts) out.points.push_back(normalized(sec.lift_point(p)));
  }
  switch (out.kind) {
    case LocusKind::Empty: out.witness = "empty"; break;
    case LocusKind::Point: out.witness = "point " + point_string(out.points[0]); break;
    case LocusKind::Line:
      out.witness = "line through " + point_string(out.points[0]) + " and " + point_string(out.points[1]);
      break;
    case LocusKind::Other:
      out.witness = "dimension " + std::to_string(dim) + ", degree " + std::to_string(out.hilbert.degree);
      break;
  }
  return out;
}

}  // namespace grim
