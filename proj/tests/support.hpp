#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "grim/bundle.hpp"
#include "grim/error.hpp"
#include "grim/groebner.hpp"
#include "grim/matrix.hpp"
#include "grim/parse.hpp"
#include "grim/plucker.hpp"
#include "grim/poly.hpp"

namespace grim::test {

inline RingPtr xyz() {
  static const RingPtr r = Ring::make({"x", "y", "z"});
  return r;
}

inline Poly P(const std::string& text, const RingPtr& ring = xyz()) { return parse_poly(text, ring); }

inline Rational Q(long n, long d = 1) { return make_rational(n, d); }

/// Seeded generator for property tests. Kept separate from the library's
/// sampler so that tests do not share its stream.
class Gen {
public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long h = 9) {
    return make_rational(integer(-h, h), integer(1, h));
  }
  Rational nonzero(long h = 9) {
    for (;;) {
      Rational r = rational(h);
      if (r != 0) return r;
    }
  }

  /// Random form of degree d with roughly `density` of the monomials used.
  Poly form(const RingPtr& ring, unsigned d, double density = 0.6) {
    std::vector<Term> terms;
    for (const auto& m : monomials_of_degree(*ring, d))
      if (std::uniform_real_distribution<double>(0, 1)(eng_) < density) terms.push_back({m, nonzero()});
    Poly f = Poly::from_terms(ring, std::move(terms));
    return f.is_zero() ? form(ring, d, density) : f;
  }

  /// Random inhomogeneous polynomial up to degree d.
  Poly poly(const RingPtr& ring, unsigned d) {
    Poly f(ring);
    for (unsigned k = 0; k <= d; ++k)
      if (coin()) f += form(ring, k, 0.3);
    return f;
  }

  Poly linear(const RingPtr& ring) { return form(ring, 1, 1.0); }

  RatMatrix matrix(std::size_t r, std::size_t c, long h = 5) {
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(integer(-h, h));
    return m;
  }

  RatMatrix invertible(std::size_t n) {
    for (;;) {
      RatMatrix m = matrix(n, n, 3);
      if (determinant(m) != 0) return m;
    }
  }

  RatMatrix symmetric(std::size_t n, long h = 5) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = Rational(integer(-h, h));
    return m;
  }

  std::mt19937_64& engine() { return eng_; }

private:
  std::mt19937_64 eng_;
};

/// Rank by plain Gaussian elimination with partial pivoting on the first
/// nonzero entry, written out here so that it shares no code with rref.
inline std::size_t oracle_rank(std::vector<std::vector<Rational>> a) {
  std::size_t rank = 0;
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline std::size_t oracle_rank(const RatMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  return oracle_rank(a);
}

/// Leibniz expansion over all permutations.
inline Rational oracle_det(const RatMatrix& m) {
  std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline RatMatrix congruent(const RatMatrix& m, const RatMatrix& g) { return g.transpose() * m * g; }

/// Image of a quadratic form under the linear substitution v -> g v.
inline Poly substitute_linear(const Poly& f, const RatMatrix& g) {
  const RingPtr& r = f.ring();
  std::vector<Poly> images;
  for (std::size_t i = 0; i < r->nvars(); ++i) {
    Poly img(r);
    for (std::size_t j = 0; j < r->nvars(); ++j) img += Poly::variable(r, j) * g(i, j);
    images.push_back(img);
  }
  return f.substitute(images);
}

inline RatMatrix coefficient_rows(const std::vector<std::vector<long>>& rows) {
  RatMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = Rational(rows[i][j]);
  return m;
}

/// Coefficient rows of the worked examples over (x, y, z^2).
inline RatMatrix example1_rows() {
  return coefficient_rows({{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}});
}
inline RatMatrix example2_rows() {
  return coefficient_rows({{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, -1}});
}
/// u3 = w3 + d w4, u4 = a w4 + w5.
inline RatMatrix example3_rows(long a, long d) {
  return coefficient_rows({{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, d, 0}, {0, 0, 0, a, 1}});
}

inline PluckerMap example_map(const RatMatrix& rows) {
  Presentation p = standard_presentation(xyz());
  return plucker_map(SectionQuadruple::from_coefficients(rows, xyz()), p);
}

/// Coordinates (0, 0, cx, cy, cz) of the section (0, 0, g).
inline std::vector<Rational> g_coordinates(const Poly& g) {
  std::vector<Rational> c(5);
  for (std::size_t v = 0; v < 3; ++v) c[2 + v] = g.coeff(Monomial::variable(v));
  return c;
}

struct RandomInput {
  Presentation presentation;
  SectionQuadruple quadruple;
  PluckerMap map;
};

/// A random presentation (A, B, Q) without common zeros.
inline Presentation random_presentation(Gen& g) {
  for (;;) {
    Poly a = g.linear(xyz()), b = g.linear(xyz()), q = g.form(xyz(), 2, 0.8);
    try {
      return Presentation::make(a, b, q);
    } catch (const Error&) {
    }
  }
}

/// A random generating quadruple. With `case_a` set the quadruple is built
/// in the shape (1,0,f1), (0,1,f2), (0,0,A), (0,0,B) and then mixed by a
/// random invertible matrix, which forces a linear relation among the
/// Plücker quadrics.
inline RandomInput random_input(Gen& g, const Presentation& p, bool case_a = false) {
  for (;;) {
    RatMatrix c(4, 5);
    if (case_a) {
      std::vector<std::vector<Rational>> rows;
      auto f1 = g_coordinates(g.linear(xyz()));
      auto f2 = g_coordinates(g.linear(xyz()));
      f1[0] = 1;
      f2[1] = 1;
      rows = {f1, f2, g_coordinates(p.a()), g_coordinates(p.b())};
      RatMatrix base = RatMatrix::from_rows(rows);
      c = g.invertible(4) * base;
    } else {
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t k = 0; k < 5; ++k) c(i, k) = g.rational(6);
    }
    if (matrix_rank(c) < 4) continue;
    SectionQuadruple s = SectionQuadruple::from_coefficients(c, xyz());
    PluckerMap m = plucker_map(s, p);
    if (!generates_check(m)) continue;
    return {p, s, m};
  }
}

/// Two or three generators of degree at most `max_degree`, homogeneous or
/// not with equal odds.
inline Ideal random_small_ideal(Gen& g, const RingPtr& r, long max_degree = 3) {
  std::size_t count = static_cast<std::size_t>(g.integer(2, 3));
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < count; ++i) {
    unsigned d = static_cast<unsigned>(g.integer(1, max_degree));
    gens.push_back(g.coin() ? g.form(r, d, 0.35) : g.poly(r, d));
  }
  gens.erase(std::remove_if(gens.begin(), gens.end(), [](const Poly& p) { return p.is_zero(); }), gens.end());
  if (gens.empty()) gens.push_back(g.form(r, 2, 0.5));
  return Ideal(r, gens);
}

}  // namespace grim::test
