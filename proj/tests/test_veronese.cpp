#include <doctest.h>

#include <functional>

#include "grim/error.hpp"
#include "grim/veronese.hpp"
#include "support.hpp"

using namespace grim;
using namespace grim::test;

namespace {

Poly Zp(const std::string& s) { return parse_poly(s, plucker_ring()); }

ConicPoint C(const std::string& s) { return ConicPoint::from_poly(P(s)); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Internal;
}

/// Symmetric matrix of a ternary quadratic form, read off its coefficients.
RatMatrix form_matrix(const Poly& q) {
  RatMatrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j) {
      Monomial mono = Monomial::variable(i) * Monomial::variable(j);
      Rational c = q.coeff(mono);
      if (i == j) m(i, i) = c;
      else m(i, j) = m(j, i) = c / 2;
    }
  return m;
}

std::vector<Rational> coords(const ConicPoint& p) {
  RatVector v = p.coordinates();
  return {v.begin(), v.end()};
}

std::vector<Rational> linear_coeffs(const Poly& f, std::size_t n) {
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = f.coeff(Monomial::variable(i));
  return out;
}

bool check_passed(const std::vector<RemarkCheck>& checks) {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

std::vector<Poly> worked_chart() { return {Zp("Z5"), Zp("-Z1"), Zp("-Z3+Z4"), Zp("Z0"), Zp("Z1-Z2")}; }

/// Number of independent images of sample points, i.e. one more than the
/// dimension of their span.
std::size_t image_span(const std::vector<Poly>& map, const std::vector<std::vector<Rational>>& pts) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& pt : pts) {
    std::vector<Rational> r;
    for (const auto& f : map) r.push_back(f.evaluate(pt));
    rows.push_back(r);
  }
  return oracle_rank(rows);
}

}  // namespace

TEST_SUITE("conic_rank") {
  TEST_CASE("examples") {
    CHECK(conic_rank(C("x^2")) == 1);
    CHECK(conic_rank(C("(x+y-z)^2")) == 1);
    CHECK(conic_rank(C("x*y")) == 2);
    CHECK(conic_rank(C("y^2+2*y*z")) == 2);
    CHECK(conic_rank(C("x^2+y^2+z^2")) == 3);
    CHECK(conic_rank(C("x*z-y^2")) == 3);
    CHECK(code_of([] { ConicPoint::from_poly(P("x")); }) == ErrorCode::DegreeMismatch);
    CHECK(code_of([] { ConicPoint::from_poly(Poly(xyz())); }) == ErrorCode::DegreeMismatch);
    CHECK(C("x*y").coordinates() == RatVector{0, Q(1, 2), 0, 0, 0, 0});
  }

  TEST_CASE("agrees with the matrix rank and is invariant under PGL3") {
    Gen g(601);
    for (int i = 0; i < 60; ++i) {
      Poly q = i % 5 == 0   ? g.linear(xyz()).pow(2)
               : i % 3 == 0 ? g.linear(xyz()) * g.linear(xyz())
                            : g.form(xyz(), 2, 0.5);
      ConicPoint p = ConicPoint::from_poly(q);
      std::size_t r = conic_rank(p);
      CHECK(r == oracle_rank(form_matrix(q)));
      CHECK(p.matrix() == form_matrix(q));
      CHECK(p.to_poly(xyz()) == q);
      RatMatrix t = g.invertible(3);
      CHECK(conic_rank(ConicPoint::from_poly(substitute_linear(q, t))) == r);
    }
  }
}

TEST_SUITE("secant_cubic") {
  TEST_CASE("vanishes exactly on conics of rank at most two") {
    Poly s = secant_cubic();
    CHECK(s.degree() == 3);
    CHECK(s.is_homogeneous());
    Gen g(603);
    for (int i = 0; i < 50; ++i) {
      ConicPoint lm = ConicPoint::from_poly(g.linear(xyz()) * g.linear(xyz()));
      CHECK(s.evaluate(coords(lm)) == 0);
    }
    int full = 0;
    while (full < 50) {
      Poly q = g.form(xyz(), 2, 0.7);
      RatMatrix m = form_matrix(q);
      if (oracle_rank(m) < 3) continue;
      ++full;
      Rational v = s.evaluate(coords(ConicPoint::from_poly(q)));
      CHECK(v != 0);
      CHECK(v == oracle_det(m));
    }
  }

  TEST_CASE("pulls back to zero along the Veronese map") {
    CHECK(secant_cubic().substitute(veronese_map(xyz())).is_zero());
  }
}

TEST_SUITE("secant lines") {
  TEST_CASE("special lines") {
    CHECK_NOTHROW(special_line(P("x"), P("y"), P("z")));
    CHECK(code_of([] { special_line(P("x"), P("x"), P("y")); }) == ErrorCode::InvalidLine);
    CHECK_NOTHROW(special_line(P("x"), P("y"), P("y+z")));
    CHECK(code_of([] { special_line(P("x"), P("y"), P("2*y")); }) == ErrorCode::InvalidLine);
    CHECK(code_of([] { special_line(P("x^2"), P("y"), P("z")); }) == ErrorCode::DegreeMismatch);
  }

  TEST_CASE("other lines") {
    CHECK_NOTHROW(secant_line(C("x*y"), C("x*z")));
    CHECK(code_of([] { secant_line(C("x^2"), C("y^2")); }) == ErrorCode::InvalidLine);
    CHECK(code_of([] { secant_line(C("x*y"), C("x*z+y^2")); }) == ErrorCode::InvalidLine);
    CHECK(code_of([] { secant_line(C("x*y"), C("2*x*y")); }) == ErrorCode::InvalidLine);
  }

  TEST_CASE("points of valid lines have rank two") {
    RationalSampler rng(605);
    Gen g(607);
    for (int i = 0; i < 20; ++i) {
      SecantLine l = random_special_line(rng, xyz());
      auto a = coords(l.endpoints[0]), b = coords(l.endpoints[1]);
      for (int k = 0; k < 5; ++k) {
        Rational s = g.rational(), t = g.rational();
        if (s == 0 && t == 0) continue;
        CHECK(oracle_rank(s * l.endpoints[0].matrix() + t * l.endpoints[1].matrix()) == 2);
      }
      CHECK(secant_cubic().evaluate(a) == 0);
      CHECK(secant_cubic().evaluate(b) == 0);
    }
  }
}

TEST_SUITE("project_from_point") {
  TEST_CASE("worked chart reproduces the degree-four map") {
    Projection pr = project_from_point(C("y^2+2*y*z"), xyz(), worked_chart());
    std::vector<Poly> want{P("z^2"), P("-x*y"), P("-y^2+y*z"), P("x^2"), P("x*y-x*z")};
    CHECK(pr.map == want);
    CHECK(pr.target->nvars() == 5);
  }

  TEST_CASE("default chart") {
    ConicPoint p = C("x*y");
    Projection pr = project_from_point(p, xyz());
    REQUIRE(pr.chart.size() == 5);
    std::vector<std::vector<Rational>> rows;
    for (const auto& f : pr.chart) {
      CHECK(f.evaluate(coords(p)) == 0);
      rows.push_back(linear_coeffs(f, 6));
    }
    CHECK(oracle_rank(rows) == 5);
    auto v = veronese_map(xyz());
    for (std::size_t i = 0; i < 5; ++i) CHECK(pr.map[i] == pr.chart[i].substitute(v));
    Ideal img = implicitize(pr.map, pr.target);
    CHECK(image_degree(img) == 4);
  }

  TEST_CASE("rejected centers") {
    CHECK(code_of([] { project_from_point(C("x^2+y^2+z^2"), xyz()); }) == ErrorCode::NotOnSecantMinusV);
    CHECK(code_of([] { project_from_point(C("x^2"), xyz()); }) == ErrorCode::NotOnSecantMinusV);
    std::vector<Poly> bad{Zp("Z0"), Zp("Z1"), Zp("Z2"), Zp("Z3"), Zp("Z4")};
    CHECK(code_of([&] { project_from_point(C("y^2+2*y*z"), xyz(), bad); }) != ErrorCode::Internal);
  }
}

TEST_SUITE("verify_point_remark") {
  TEST_CASE("center y(y+2z) with the worked chart") {
    PointRemarkReport rep = verify_point_remark(C("y^2+2*y*z"), xyz(), 1, worked_chart());
    CHECK(rep.passed());
    CHECK(check_passed(rep.checks));
    CHECK(rep.image_degree == 4);
    CHECK(rep.map_degree == 1);
    CHECK(rep.quadric_generators.size() == 2);
    CHECK(rep.pencil_generic_rank == 4);
    CHECK(rep.singular.kind == LocusKind::Line);
    REQUIRE(rep.exceptional_line);
    // The exceptional line maps onto a line, two to one.
    Poly l = *rep.exceptional_line;
    CHECK(l.degree() == 1);
    std::vector<std::vector<Rational>> pts;
    Gen g(609);
    while (pts.size() < 4) {
      std::vector<Rational> pt{g.rational(), g.rational(), g.rational()};
      // Solve l = 0 for the first variable that occurs.
      std::size_t k = 0;
      while (l.coeff(Monomial::variable(k)) == 0) ++k;
      pt[k] = 0;
      pt[k] = -l.evaluate(pt) / l.coeff(Monomial::variable(k));
      if (pt == std::vector<Rational>{0, 0, 0}) continue;
      CHECK(l.evaluate(pt) == 0);
      pts.push_back(pt);
    }
    CHECK(image_span(rep.projection.map, pts) == 2);
  }

  TEST_CASE("the conic xy") {
    PointRemarkReport rep = verify_point_remark(C("x*y"), xyz(), 2);
    CHECK(rep.passed());
    CHECK(rep.image_degree == 4);
    CHECK(rep.map_degree == 1);
  }

  TEST_CASE("random rank-two centers") {
    RationalSampler rng(611);
    for (int i = 0; i < 3; ++i) {
      ConicPoint p = random_rank2_conic(rng, xyz());
      CHECK(conic_rank(p) == 2);
      PointRemarkReport rep = verify_point_remark(p, xyz(), rng.next_seed());
      for (const auto& c : rep.checks) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
      CHECK(rep.passed());
    }
  }

  TEST_CASE("rank-one center fails its precondition") {
    CHECK(code_of([] { verify_point_remark(C("x^2"), xyz()); }) == ErrorCode::NotOnSecantMinusV);
  }
}

TEST_SUITE("project_from_line") {
  TEST_CASE("the line through xy and xz") {
    Projection pr = project_from_line(secant_line(C("x*y"), C("x*z")), xyz());
    std::vector<Poly> want{P("x^2"), P("y^2"), P("y*z"), P("z^2")};
    CHECK(pr.map == want);
    RingPtr w = pr.target;
    Ideal img = implicitize(pr.map, w);
    CHECK(ideal_equal(img, Ideal(w, {parse_poly("W2^2-W1*W3", w)})));
    CHECK(image_degree(img) == 2);
    CHECK(map_degree(pr.map, 3) == 2);
  }
}

TEST_SUITE("verify_line_remark") {
  TEST_CASE("examples") {
    LineRemarkReport a = verify_line_remark(secant_line(C("x*y"), C("x*z")), xyz(), 1);
    CHECK(a.passed());
    CHECK(a.quadric_rank == 3);
    CHECK(a.image_degree == 2);
    CHECK(a.map_degree == 2);
    CHECK(a.singular.kind == LocusKind::Point);
    REQUIRE(a.quadric);
    // The singular point is the kernel of the quadric's matrix.
    RatMatrix m = quadratic_form_matrix(*a.quadric);
    CHECK(oracle_rank(m) == 3);

    LineRemarkReport b = verify_line_remark(special_line(P("x"), P("y"), P("y+z")), xyz(), 2);
    CHECK(b.passed());
  }

  TEST_CASE("random special lines") {
    RationalSampler rng(613);
    for (int i = 0; i < 3; ++i) {
      LineRemarkReport rep = verify_line_remark(random_special_line(rng, xyz()), xyz(), rng.next_seed());
      for (const auto& c : rep.checks) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
    }
  }

  TEST_CASE("lines off the secant variety are rejected") {
    CHECK(code_of([] { verify_line_remark(SecantLine{{C("x*y"), C("x*z+y^2")}}, xyz()); }) ==
          ErrorCode::InvalidLine);
  }
}
