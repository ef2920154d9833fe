#include <doctest.h>

#include <algorithm>

#include "grim/error.hpp"
#include "grim/groebner.hpp"
#include "grim/imageclass.hpp"
#include "grim/subspace.hpp"
#include "grim/univariate.hpp"
#include "support.hpp"

using namespace grim;
using namespace grim::test;

namespace {

RingPtr zring() { return plucker_ring(); }
Poly Zp(const std::string& s) { return parse_poly(s, zring()); }

Ideal example1_image() { return Ideal(zring(), {Zp("Z5"), Zp("Z1+Z4"), Zp("Z1^2+Z2*Z3")}); }
Ideal example2_image() { return Ideal(zring(), {Zp("Z5"), Zp("Z1*Z4-Z2*Z3"), Zp("(Z1+Z4)^2-Z0*Z3")}); }

/// Number of distinct roots of a binary form in (s, t).
std::size_t distinct_roots(const Poly& binary) {
  BinaryForm b = split_binary_form(binary);
  return (b.mu_power > 0 ? 1 : 0) + static_cast<std::size_t>(square_free_part(b.affine).degree());
}

/// Coefficient of u^k in f, where u is variable `var`.
Poly coefficient_in(const Poly& f, std::size_t var, unsigned k) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    if (t.mono.exp[var] != k) continue;
    Monomial m = t.mono / Monomial::variable(var, static_cast<std::uint16_t>(k));
    terms.push_back({m, t.coeff});
  }
  return Poly::from_terms(f.ring(), std::move(terms));
}

/// Generic point count of a surface {q = 0} in P^3 against a random line.
std::size_t line_section_points(const Poly& q, Gen& g) {
  RingPtr st = Ring::make({"s", "t"});
  std::size_t n = q.ring()->nvars();
  std::vector<Poly> images;
  for (std::size_t i = 0; i < n; ++i)
    images.push_back(Poly::variable(st, 0) * g.nonzero() + Poly::variable(st, 1) * g.nonzero());
  return distinct_roots(q.substitute(images));
}

/// Generic point count of the surface {f = g = 0} in P^4 against a random
/// plane, by the resultant of the two restricted conics.
std::size_t plane_section_points(const Poly& f, const Poly& h, Gen& g) {
  RingPtr stu = Ring::make({"s", "t", "u"});
  std::size_t n = f.ring()->nvars();
  std::vector<Poly> images;
  for (std::size_t i = 0; i < n; ++i) {
    Poly img(stu);
    for (std::size_t v = 0; v < 3; ++v) img += Poly::variable(stu, v) * g.nonzero();
    images.push_back(img);
  }
  Poly a = f.substitute(images), b = h.substitute(images);
  Poly zero(stu);
  PolyMatrix syl{{coefficient_in(a, 2, 2), coefficient_in(a, 2, 1), coefficient_in(a, 2, 0), zero},
                 {zero, coefficient_in(a, 2, 2), coefficient_in(a, 2, 1), coefficient_in(a, 2, 0)},
                 {coefficient_in(b, 2, 2), coefficient_in(b, 2, 1), coefficient_in(b, 2, 0), zero},
                 {zero, coefficient_in(b, 2, 2), coefficient_in(b, 2, 1), coefficient_in(b, 2, 0)}};
  Poly res = determinant(syl, stu);
  RingPtr st = Ring::make({"s", "t"});
  std::vector<Poly> to_st{Poly::variable(st, 0), Poly::variable(st, 1), Poly(st)};
  return distinct_roots(res.substitute(to_st));
}

}  // namespace

TEST_SUITE("groebner_basis") {
  TEST_CASE("examples") {
    Ideal xy(xyz(), {P("x"), P("y")});
    CHECK(xy.basis() == std::vector<Poly>{P("x"), P("y")});

    Ideal e1 = example1_image();
    CHECK(e1.basis() == std::vector<Poly>{Zp("Z2*Z3+Z4^2"), Zp("Z1+Z4"), Zp("Z5")});

    RingPtr txy = Ring::make({"t", "x", "y"});
    Ideal cusp(txy, {parse_poly("x-t^2", txy), parse_poly("y-t^3", txy)});
    const auto& eb = cusp.basis(MonomialOrder::elimination(1));
    Poly target = parse_poly("x^3-y^2", txy);
    bool found = std::any_of(eb.begin(), eb.end(), [&](const Poly& p) { return p == target || p == -target; });
    CHECK(found);
  }

  TEST_CASE("resource cap raises an explicit error") {
    GbOptions tight;
    tight.max_steps = 3;
    try {
      implicitize(example_map(example2_rows()), tight);
      FAIL("expected a resource limit");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ResourceLimit);
    }
  }

  TEST_CASE("bases are reduced and S-pairs reduce to zero") {
    Gen g(101);
    RingPtr r4 = Ring::make({"a", "b", "c", "d"});
    RingPtr r3 = Ring::make({"a", "b", "c"});
    for (int i = 0; i < 30; ++i) {
      bool lex = i % 2 == 1;
      RingPtr r = lex ? r3 : r4;
      Ideal I = random_small_ideal(g, r, lex ? 2 : 3);
      {
        MonomialOrder o = lex ? MonomialOrder::lex() : MonomialOrder::grevlex();
        std::vector<Poly> gb = groebner_basis(I, o);
        RingPtr ro = r->with_order(o);
        for (const auto& p : gb) CHECK(p.lead_coeff() == 1);
        for (std::size_t a = 0; a < gb.size(); ++a)
          for (std::size_t b = a + 1; b < gb.size(); ++b) CHECK(reduce(s_polynomial(gb[a], gb[b]), gb).is_zero());
        for (const auto& f : I.generators()) CHECK(reduce(f.to_ring(ro), gb).is_zero());
        // Reducedness: no term of any element is divisible by another leading monomial.
        for (std::size_t a = 0; a < gb.size(); ++a)
          for (std::size_t b = 0; b < gb.size(); ++b) {
            if (a == b) continue;
            for (const auto& t : gb[a].terms()) CHECK_FALSE(gb[b].lead_mono().divides(t.mono));
          }
      }
    }
  }

  TEST_CASE("reduced basis does not depend on generator order") {
    Gen g(103);
    RingPtr r = Ring::make({"a", "b", "c"});
    for (int i = 0; i < 25; ++i) {
      Ideal I = random_small_ideal(g, r);
      std::vector<Poly> gens = I.generators();
      std::shuffle(gens.begin(), gens.end(), g.engine());
      Ideal J(r, gens);
      CHECK(I.basis() == J.basis());
    }
  }
}

TEST_SUITE("normal_form") {
  TEST_CASE("examples") {
    Ideal e1 = example1_image();
    for (const auto& f : e1.generators()) CHECK(normal_form(f, e1, MonomialOrder::grevlex()).is_zero());

    Ideal e2 = example2_image();
    Poly pencil = Zp("3*(Z1*Z4-Z2*Z3) - 5/2*((Z1+Z4)^2-Z0*Z3) + Z5*Z0");
    CHECK(normal_form(pencil, e2, MonomialOrder::grevlex()).is_zero());
    CHECK(contains(e2, pencil));

    Ideal m(xyz(), {P("x"), P("y"), P("z")});
    CHECK(normal_form(P("1"), m, MonomialOrder::grevlex()) == P("1"));
    CHECK_FALSE(contains(m, P("1")));
  }
}

TEST_SUITE("eliminate") {
  TEST_CASE("examples") {
    RingPtr graph = Ring::make({"x", "y", "z", "Z0", "Z1", "Z2", "Z3", "Z4", "Z5"}, MonomialOrder::elimination(3));
    std::vector<Poly> gens;
    for (const char* s : {"Z0-z^2", "Z1+x*y", "Z2+y^2", "Z3-x^2", "Z4-x*y", "Z5"}) gens.push_back(parse_poly(s, graph));
    Ideal img = eliminate(Ideal(graph, gens), 3);
    CHECK(img.ring()->names() == zring()->names());
    CHECK(ideal_equal(img, example1_image()));

    Ideal e1 = example1_image();
    CHECK(ideal_equal(eliminate(e1, 0), e1));

    Ideal xy(xyz(), {P("x*y"), P("z^2+x")});
    Ideal none = eliminate(xy, 3);
    CHECK(none.basis().empty());
  }

  TEST_CASE("elimination ideal lies in the original ideal") {
    Gen g(107);
    RingPtr r = Ring::make({"a", "b", "c", "d"});
    for (int i = 0; i < 15; ++i) {
      Ideal I = random_small_ideal(g, r, 2);
      std::size_t k = static_cast<std::size_t>(g.integer(1, 2));
      Ideal E = eliminate(I, k);
      std::vector<std::size_t> map;
      for (std::size_t v = 0; v < E.ring()->nvars(); ++v) map.push_back(v + k);
      for (const auto& f : E.basis()) CHECK(contains(I, f.embed(r, map)));
    }
  }
}

TEST_SUITE("ideal_equal") {
  TEST_CASE("examples") {
    CHECK(ideal_equal(Ideal(xyz(), {P("x"), P("y")}), Ideal(xyz(), {P("y"), P("x+y")})));
    CHECK_FALSE(ideal_equal(Ideal(xyz(), {P("x")}), Ideal(xyz(), {P("x^2")})));
    Ideal computed = implicitize(example_map(example2_rows()));
    CHECK(ideal_equal(computed, example2_image()));
  }
}

TEST_SUITE("saturate") {
  TEST_CASE("examples") {
    Ideal I(xyz(), {P("x^2*y")});
    Ideal s = saturate(I, Ideal(xyz(), {P("x")}));
    CHECK(ideal_equal(s, Ideal(xyz(), {P("y")})));

    Ideal e1 = example1_image();
    CHECK(ideal_equal(saturate(e1, Ideal::unit(zring())), e1));
    CHECK(ideal_equal(saturate(Ideal::unit(xyz()), Ideal::unit(xyz())), Ideal::unit(xyz())));
  }

  TEST_CASE("Jacobian ideal of the degree-4 example defines a line") {
    Ideal e2 = example2_image();
    LinearSection h(zring(), std::vector<Poly>{Zp("Z5")});
    std::vector<Poly> gens{h.restrict(Zp("Z1*Z4-Z2*Z3")), h.restrict(Zp("(Z1+Z4)^2-Z0*Z3"))};
    RingPtr r = h.sub();
    std::vector<Poly> jgens = gens;
    for (const auto& m : minors(jacobian_matrix(gens), 2, r)) jgens.push_back(m);
    Ideal jac = saturate(Ideal(r, jgens), Ideal::irrelevant(r));
    HilbertData hd = hilbert_data(jac);
    CHECK(hd.projective_dimension == 1);
    CHECK(hd.degree == 1);

    // The reduced line reported by singular_locus must contain the
    // Jacobian ideal, and each of its linear forms must have a power in it.
    SingularLocus s = singular_locus(e2);
    REQUIRE(s.kind == LocusKind::Line);
    std::vector<Poly> lg;
    for (const auto& f : s.ideal.generators()) lg.push_back(f.to_ring(r));
    Ideal line(r, lg);
    CHECK(is_subset(jac, line));
    for (const auto& f : line.generators()) {
      bool some_power = false;
      for (unsigned k = 1; k <= 4 && !some_power; ++k) some_power = contains(jac, f.pow(k));
      CHECK(some_power);
    }
    std::vector<RatVector> coeffs;
    for (const auto& f : line.generators()) coeffs.push_back(linear_coefficients(f));
    CHECK(oracle_rank(coeffs) == 3);
  }

  TEST_CASE("saturation is idempotent") {
    Gen g(109);
    RingPtr r = Ring::make({"a", "b", "c"});
    for (int i = 0; i < 15; ++i) {
      Ideal I = random_small_ideal(g, r);
      Ideal J(r, {g.form(r, 1, 0.7)});
      Ideal s1 = saturate(I, J);
      CHECK(ideal_equal(saturate(s1, J), s1));
      CHECK(is_subset(I, s1));
    }
  }
}

TEST_SUITE("hilbert_data") {
  TEST_CASE("examples") {
    HilbertData p2 = hilbert_data(Ideal::zero(xyz()));
    CHECK(p2.projective_dimension == 2);
    CHECK(p2.degree == 1);

    Gen g(113);
    HilbertData h1 = hilbert_data(example1_image());
    CHECK(h1.projective_dimension == 2);
    CHECK(h1.degree == 2);
    LinearSection p3(zring(), std::vector<Poly>{Zp("Z5"), Zp("Z1+Z4")});
    Poly cone = p3.restrict(Zp("Z1^2+Z2*Z3"));
    for (int i = 0; i < 3; ++i) CHECK(line_section_points(cone, g) == static_cast<std::size_t>(h1.degree));

    HilbertData h2 = hilbert_data(example2_image());
    CHECK(h2.projective_dimension == 2);
    CHECK(h2.degree == 4);
    LinearSection p4(zring(), std::vector<Poly>{Zp("Z5")});
    Poly f = p4.restrict(Zp("Z1*Z4-Z2*Z3")), q = p4.restrict(Zp("(Z1+Z4)^2-Z0*Z3"));
    for (int i = 0; i < 3; ++i) CHECK(plane_section_points(f, q, g) == static_cast<std::size_t>(h2.degree));
  }

  TEST_CASE("degree matches the leading coefficient of the Hilbert polynomial") {
    Gen g(127);
    for (int i = 0; i < 20; ++i) {
      RingPtr r = Ring::make({"a", "b", "c", "d"});
      std::vector<Poly> gens;
      long count = g.integer(0, 3);
      for (long k = 0; k < count; ++k) gens.push_back(g.form(r, static_cast<unsigned>(g.integer(1, 2)), 0.5));
      HilbertData h = hilbert_data(Ideal(r, gens));
      if (h.projective_dimension < 0) continue;
      Rational fact = 1;
      for (int k = 2; k <= h.projective_dimension; ++k) fact *= k;
      CHECK(h.hilbert_polynomial.size() == static_cast<std::size_t>(h.projective_dimension) + 1);
      CHECK(h.hilbert_polynomial.back() * fact == Rational(h.degree));
    }
  }

  TEST_CASE("zero ideal in n+1 variables") {
    for (std::size_t n = 1; n <= 6; ++n) {
      HilbertData h = hilbert_data(Ideal::zero(Ring::indexed("v", n + 1)));
      CHECK(h.projective_dimension == static_cast<int>(n));
      CHECK(h.degree == 1);
    }
  }

  TEST_CASE("hyperplane sections drop dimension and keep degree") {
    Gen g(131);
    for (int i = 0; i < 5; ++i) {
      Ideal cut = example2_image() + Ideal(zring(), {g.form(zring(), 1, 1.0)});
      HilbertData h = hilbert_data(cut);
      CHECK(h.projective_dimension == 1);
      CHECK(h.degree == 4);
    }
  }
}

TEST_SUITE("is_empty_projective") {
  TEST_CASE("examples") {
    CHECK(is_empty_projective(Ideal(xyz(), {P("x"), P("y"), P("z")})));
    CHECK(is_empty_projective(Ideal(xyz(), {P("x"), P("y"), P("z^2")})));
    CHECK_FALSE(is_empty_projective(Ideal(xyz(), {P("x"), P("y")})));
    CHECK(is_empty_projective(Ideal::unit(xyz())));
  }
}
