#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "grim/rational.hpp"

namespace grim {

inline constexpr std::size_t kMaxVars = 16;

enum class OrderKind { Grevlex, Lex, BlockElim };

/// A monomial order. BlockElim(k) compares the first k variables by
/// grevlex and breaks ties by grevlex on the remaining ones, so any
/// monomial containing one of the first k variables beats every monomial
/// free of them.
struct MonomialOrder {
  OrderKind kind = OrderKind::Grevlex;
  int block = 0;

  static MonomialOrder grevlex() { return {OrderKind::Grevlex, 0}; }
  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder elimination(int k) { return {OrderKind::BlockElim, k}; }

  std::string tag() const;
  bool operator==(const MonomialOrder&) const = default;
};

MonomialOrder parse_order(std::string_view name);

struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::uint32_t deg = 0;

  static Monomial variable(std::size_t i, std::uint16_t power = 1);

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  bool is_one() const { return deg == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exp == b.exp;
  }
};

/// Three-way comparison: positive when a > b in the given order.
int compare(const Monomial& a, const Monomial& b, const MonomialOrder& order,
            std::size_t nvars);

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Ordered variable names plus the active monomial order.
class Ring {
public:
  Ring(std::vector<std::string> names, MonomialOrder order);

  static RingPtr make(std::vector<std::string> names,
                      MonomialOrder order = MonomialOrder::grevlex());
  /// Names prefix0 .. prefix{n-1}.
  static RingPtr indexed(const std::string& prefix, std::size_t n,
                         MonomialOrder order = MonomialOrder::grevlex());

  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const MonomialOrder& order() const { return order_; }
  /// -1 when absent.
  int index_of(std::string_view name) const;

  RingPtr with_order(MonomialOrder order) const;
  bool same_variables(const Ring& other) const { return names_ == other.names_; }

  int cmp(const Monomial& a, const Monomial& b) const {
    return compare(a, b, order_, names_.size());
  }

private:
  std::vector<std::string> names_;
  MonomialOrder order_;
};

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse polynomial with exact rational coefficients. Terms are stored in
/// strictly descending order under the ring's monomial order and never
/// carry a zero coefficient.
class Poly {
public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly constant(RingPtr ring, const Rational& c);
  static Poly variable(RingPtr ring, std::size_t i);
  static Poly variable(RingPtr ring, std::string_view name);
  static Poly monomial(RingPtr ring, const Monomial& m, const Rational& c = 1);
  /// Builds from unsorted terms; merges duplicates and drops zeros.
  static Poly from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  const Term& lead() const { return terms_.front(); }
  const Monomial& lead_mono() const { return terms_.front().mono; }
  const Rational& lead_coeff() const { return terms_.front().coeff; }

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  int degree_in(std::size_t var) const;
  bool is_homogeneous() const;
  bool uses_variable(std::size_t var) const;

  /// Coefficient of m, zero when absent.
  Rational coeff(const Monomial& m) const;

  Poly monic() const;
  Poly derivative(std::size_t var) const;
  Poly pow(unsigned e) const;
  Poly mul_term(const Monomial& m, const Rational& c) const;

  /// Same variables, possibly different order: re-sorts.
  Poly to_ring(const RingPtr& target) const;
  /// Renames variable i of this ring to variable var_map[i] of target.
  Poly embed(const RingPtr& target, std::span<const std::size_t> var_map) const;
  /// Composition f(images[0], ..., images[n-1]).
  Poly substitute(std::span<const Poly> images) const;
  Rational evaluate(std::span<const Rational> point) const;

  /// Canonical text, re-parseable by parse_poly.
  std::string to_string() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b);

  /// this += c * m * g, the reduction kernel.
  void add_scaled(const Rational& c, const Monomial& m, const Poly& g);

private:
  void check_ring(const Poly& other) const;
  Poly aligned(const Poly& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Monomials of degree d in n variables, in descending order for `ring`.
std::vector<Monomial> monomials_of_degree(const Ring& ring, unsigned d);

}  // namespace grim
