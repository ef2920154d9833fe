#include <doctest.h>

#include "grim/error.hpp"
#include "grim/matrix.hpp"
#include "grim/parse.hpp"
#include "grim/poly.hpp"
#include "grim/univariate.hpp"
#include "support.hpp"

using namespace grim;
using namespace grim::test;

TEST_SUITE("rational") {
  TEST_CASE("canonical form and parsing") {
    CHECK(to_string(Q(6, -4)) == "-3/2");
    CHECK(to_string(Q(0, 7)) == "0");
    CHECK(parse_rational("-10/4") == Q(-5, 2));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("1.5"), Error);
  }

  TEST_CASE("field axioms on random samples") {
    Gen g(11);
    for (int i = 0; i < 200; ++i) {
      Rational a = g.rational(50), b = g.rational(50), c = g.rational(50);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      if (a != 0) CHECK(a * (1 / a) == 1);
      Rational s = a + b;
      CHECK(s.get_den() > 0);
      CHECK(gcd(Integer(s.get_num()), Integer(s.get_den())) == 1);
    }
  }
}

TEST_SUITE("parse_poly") {
  TEST_CASE("grammar examples") {
    Poly z2 = P("z^2");
    REQUIRE(z2.size() == 1);
    CHECK(z2.lead_coeff() == 1);
    CHECK(z2.lead_mono() == Monomial::variable(2, 2));

    Poly d2 = P("-y^2+y*z");
    CHECK(d2 == P("y*z") - P("y") * P("y"));
    CHECK(d2.to_string() == "-y^2+y*z");

    CHECK(P("(x+3/2*y)*x - x^2") == Q(3, 2) * P("x*y"));
    CHECK(P("  2 * ( x - y ) ^ 2 ") == P("2*x^2-4*x*y+2*y^2"));
    CHECK(P("x^0") == P("1"));
    CHECK(P("0").is_zero());
  }

  TEST_CASE("errors carry a position") {
    try {
      P("x + * y");
      FAIL("expected a syntax error");
    } catch (const ParseError& e) {
      CHECK(e.code() == ErrorCode::Syntax);
      CHECK(e.position() == 4);
    }
    try {
      P("x + w");
      FAIL("expected an unknown identifier");
    } catch (const ParseError& e) {
      CHECK(e.code() == ErrorCode::UnknownIdentifier);
      CHECK(e.position() == 4);
    }
    CHECK_THROWS_AS(P("x y"), ParseError);
    CHECK_THROWS_AS(P("2x"), ParseError);
    CHECK_THROWS_AS(P("(x+y"), ParseError);
    CHECK_THROWS_AS(P("x^-1"), ParseError);
    CHECK_THROWS_AS(P("x/y"), ParseError);
  }

  TEST_CASE("print then parse returns the same polynomial") {
    Gen g(5);
    RingPtr r = Ring::make({"a", "b", "c", "d"});
    for (int i = 0; i < 200; ++i) {
      Poly f = g.poly(r, 4);
      CHECK(parse_poly(f.to_string(), r) == f);
    }
  }

  TEST_CASE("printing follows the ring order") {
    RingPtr lex = Ring::make({"x", "y", "z"}, MonomialOrder::lex());
    CHECK(parse_poly("z^3+x*y+x", lex).to_string() == "x*y+x+z^3");
    CHECK(P("z^3+x*y+x").to_string() == "z^3+x*y+x");
  }
}

TEST_SUITE("poly arithmetic") {
  TEST_CASE("products") {
    CHECK(P("x") * P("y") == P("x*y"));
    CHECK(P("y-z") * P("y") == P("y^2-y*z"));
    CHECK((P("x+y") * Poly(xyz())).is_zero());
  }

  TEST_CASE("ring mismatch is rejected") {
    RingPtr other = Ring::make({"u", "v"});
    CHECK_THROWS_AS(P("x") * parse_poly("u", other), Error);
    CHECK_THROWS_AS(P("x") + parse_poly("u", other), Error);
  }

  TEST_CASE("products of forms stay homogeneous") {
    Gen g(17);
    for (int i = 0; i < 100; ++i) {
      unsigned d1 = static_cast<unsigned>(g.integer(0, 3)), d2 = static_cast<unsigned>(g.integer(0, 3));
      Poly f = g.form(xyz(), d1), h = g.form(xyz(), d2);
      Poly fh = f * h;
      CHECK(fh.is_homogeneous());
      CHECK(fh.degree() == static_cast<int>(d1 + d2));
    }
  }

  TEST_CASE("substitution") {
    RingPtr zr = Ring::indexed("Z", 5);
    std::vector<Poly> images{P("z^2"), P("-x*y"), P("-y^2+y*z"), P("x^2"), P("x*y-x*z")};
    CHECK(parse_poly("Z1*Z4-Z2*Z3", zr).substitute(images).is_zero());
    CHECK(parse_poly("(Z1+Z4)^2-Z0*Z3", zr).substitute(images).is_zero());

    Poly f = P("x^2*y-3*z+1");
    std::vector<Poly> id{P("x"), P("y"), P("z")};
    CHECK(f.substitute(id) == f);
    std::vector<Poly> short_list{P("x")};
    CHECK_THROWS_AS(f.substitute(short_list), Error);
  }

  TEST_CASE("evaluation agrees with substitution of constants") {
    Gen g(3);
    for (int i = 0; i < 50; ++i) {
      Poly f = g.poly(xyz(), 3);
      std::vector<Rational> pt{g.rational(), g.rational(), g.rational()};
      std::vector<Poly> consts;
      for (const auto& c : pt) consts.push_back(Poly::constant(xyz(), c));
      Poly s = f.substitute(consts);
      CHECK(s.is_constant());
      CHECK((s.is_zero() ? Rational(0) : s.lead_coeff()) == f.evaluate(pt));
    }
  }
}

TEST_SUITE("jacobian") {
  TEST_CASE("examples") {
    std::vector<Poly> one{P("x^2")};
    PolyMatrix j = jacobian_matrix(one);
    CHECK(j[0][0] == P("2*x"));
    CHECK(j[0][1].is_zero());
    CHECK(j[0][2].is_zero());

    RingPtr zr = Ring::indexed("Z", 4);
    std::vector<Poly> q{parse_poly("Z1^2+Z2*Z3", zr)};
    PolyMatrix jq = jacobian_matrix(q);
    CHECK(jq[0][0].is_zero());
    CHECK(jq[0][1] == parse_poly("2*Z1", zr));
    CHECK(jq[0][2] == parse_poly("Z3", zr));
    CHECK(jq[0][3] == parse_poly("Z2", zr));

    std::vector<Poly> consts{P("3"), P("-1/2")};
    for (const auto& row : jacobian_matrix(consts))
      for (const auto& e : row) CHECK(e.is_zero());
  }
}

TEST_SUITE("quadratic forms") {
  TEST_CASE("examples") {
    CHECK(quadratic_form_matrix(P("x^2+y^2+z^2")) == RatMatrix::identity(3));

    RingPtr zr = Ring::indexed("Z", 5);
    RatMatrix m = quadratic_form_matrix(parse_poly("Z1*Z4-Z2*Z3", zr));
    CHECK(m(1, 4) == Q(1, 2));
    CHECK(m(4, 1) == Q(1, 2));
    CHECK(m(2, 3) == Q(-1, 2));
    CHECK(m(3, 2) == Q(-1, 2));
    CHECK(oracle_rank(m) == 4);
    CHECK(matrix_rank(m) == 4);

    RatMatrix e = quadratic_form_matrix(parse_poly("(Z1+Z4)^2-Z0*Z3", zr));
    CHECK(oracle_rank(e) == 3);
    CHECK(matrix_rank(e) == 3);

    CHECK_THROWS_AS(quadratic_form_matrix(P("x^3")), Error);
    CHECK_THROWS_AS(quadratic_form_matrix(P("x^2+y")), Error);
  }

  TEST_CASE("v^T M v re-expands to the form") {
    Gen g(23);
    RingPtr r = Ring::indexed("Z", 5);
    for (int i = 0; i < 100; ++i) {
      Poly q = g.form(r, 2);
      RatMatrix m = quadratic_form_matrix(q);
      CHECK(m.is_symmetric());
      Poly back(r);
      for (std::size_t a = 0; a < 5; ++a)
        for (std::size_t b = 0; b < 5; ++b)
          back += m(a, b) * (Poly::variable(r, a) * Poly::variable(r, b));
      CHECK(back == q);
      CHECK(quadratic_form_poly(m, r) == q);
    }
  }
}

TEST_SUITE("linear algebra") {
  TEST_CASE("rank and kernel examples") {
    RankKernel id = matrix_rank_kernel(RatMatrix::identity(3));
    CHECK(id.rank == 3);
    CHECK(id.kernel.empty());

    RankKernel zero = matrix_rank_kernel(RatMatrix(3, 4));
    CHECK(zero.rank == 0);
    CHECK(zero.kernel.size() == 4);

    // Coefficients of Example 1's quadrics in the basis of conics.
    PluckerMap m = example_map(example1_rows());
    std::vector<RatVector> rows;
    for (const auto& q : m.quadrics) rows.push_back(coefficient_vector(q, 2));
    RatMatrix c = RatMatrix::from_rows(rows);
    CHECK(oracle_rank(c) == 4);
    RankKernel rk = matrix_rank_kernel(c.transpose());
    CHECK(rk.rank == 4);
    CHECK(rk.kernel.size() == 2);
  }

  TEST_CASE("kernel vectors are annihilated and in echelon form") {
    Gen g(29);
    for (int i = 0; i < 50; ++i) {
      std::size_t r = static_cast<std::size_t>(g.integer(1, 5)), c = static_cast<std::size_t>(g.integer(1, 6));
      RatMatrix m = g.matrix(r, c, 2);
      RankKernel rk = matrix_rank_kernel(m);
      CHECK(rk.rank == oracle_rank(m));
      CHECK(rk.rank + rk.kernel.size() == c);
      for (const auto& v : rk.kernel) {
        for (std::size_t a = 0; a < r; ++a) {
          Rational s = 0;
          for (std::size_t b = 0; b < c; ++b) s += m(a, b) * v[b];
          CHECK(s == 0);
        }
      }
      CHECK(row_space_basis(rk.kernel) == rk.kernel);
    }
  }

  TEST_CASE("rank is invariant under transposition and row operations") {
    Gen g(31);
    for (int i = 0; i < 100; ++i) {
      std::size_t r = static_cast<std::size_t>(g.integer(1, 6)), c = static_cast<std::size_t>(g.integer(1, 6));
      RatMatrix m = g.matrix(r, c, 1);
      std::size_t rank = matrix_rank(m);
      CHECK(matrix_rank(m.transpose()) == rank);
      CHECK(matrix_rank(g.invertible(r) * m) == rank);
    }
  }

  TEST_CASE("determinant and inverse") {
    Gen g(37);
    for (int i = 0; i < 50; ++i) {
      std::size_t n = static_cast<std::size_t>(g.integer(1, 5));
      RatMatrix m = g.matrix(n, n, 4);
      CHECK(determinant(m) == oracle_det(m));
      if (oracle_det(m) != 0) CHECK(inverse(m) * m == RatMatrix::identity(n));
    }
  }

  TEST_CASE("symbolic determinant matches expansion at sample points") {
    RingPtr r = Ring::make({"l", "m"});
    PolyMatrix pm{{parse_poly("l", r), parse_poly("m", r), parse_poly("1", r)},
                  {parse_poly("m", r), parse_poly("l+m", r), parse_poly("0", r)},
                  {parse_poly("2", r), parse_poly("l", r), parse_poly("m", r)}};
    Poly d = determinant(pm, r);
    Gen g(41);
    for (int i = 0; i < 10; ++i) {
      std::vector<Rational> pt{g.rational(), g.rational()};
      RatMatrix num(3, 3);
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) num(a, b) = pm[a][b].evaluate(pt);
      CHECK(d.evaluate(pt) == oracle_det(num));
    }
  }
}

TEST_SUITE("univariate") {
  TEST_CASE("roots, gcd and square-free parts") {
    UPoly f({Q(-6), Q(11), Q(-6), Q(1)});  // (t-1)(t-2)(t-3)
    CHECK(rational_roots(f) == std::vector<Rational>{1, 2, 3});
    UPoly g({Q(1, 4), Q(0), Q(-1)});  // 1/4 - t^2
    CHECK(rational_roots(g) == std::vector<Rational>{Q(-1, 2), Q(1, 2)});
    CHECK(rational_roots(UPoly({Q(-2), Q(0), Q(1)})).empty());

    UPoly sq = UPoly({Q(-1), Q(1)}) * UPoly({Q(-1), Q(1)}) * UPoly({Q(2), Q(0), Q(1)});
    CHECK(square_free_part(sq) == (UPoly({Q(-1), Q(1)}) * UPoly({Q(2), Q(0), Q(1)})).monic());
    CHECK(gcd(f, UPoly({Q(-2), Q(1)})) == UPoly({Q(-2), Q(1)}));
    CHECK(count_real_roots(UPoly({Q(-2), Q(0), Q(1)}), Q(-10), Q(10)) == 2);
    CHECK(count_real_roots(UPoly({Q(2), Q(0), Q(1)}), Q(-10), Q(10)) == 0);
  }

  TEST_CASE("binary forms") {
    RingPtr r = Ring::make({"l", "m"});
    BinaryForm b = split_binary_form(parse_poly("l^2*m^3-4*m^5", r));
    CHECK(b.mu_power == 3);
    CHECK(b.affine == UPoly({Q(-4), Q(0), Q(1)}));
    std::vector<Poly> forms{parse_poly("l^2*m-l*m^2", r), parse_poly("l*m^2", r), parse_poly("0", r)};
    BinaryForm g = binary_form_gcd(forms);
    CHECK(g.mu_power == 1);
    CHECK(g.affine == UPoly({Q(0), Q(1)}));
  }
}
