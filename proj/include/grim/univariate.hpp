#pragma once

#include <span>
#include <string>
#include <vector>

#include "grim/poly.hpp"
#include "grim/rational.hpp"

namespace grim {

/// Dense univariate polynomial over Q, coefficients in ascending order.
/// The zero polynomial has no coefficients.
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c) { return UPoly({c}); }
  static UPoly x() { return UPoly({Rational(0), Rational(1)}); }
  /// The univariate polynomial f(t, 1) of a binary form f(l, m); the form
  /// must live in a ring of two variables.
  static UPoly dehomogenize(const Poly& binary_form);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& lead() const { return c_.back(); }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

  Rational operator()(const Rational& t) const;
  UPoly monic() const;
  UPoly derivative() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) = default;

  /// Polynomial division; throws on zero divisor.
  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);

  std::string to_string(const std::string& var = "t") const;

private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd (zero only when both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
/// Monic square-free part f / gcd(f, f').
UPoly square_free_part(const UPoly& f);
/// All rational roots, ascending, without multiplicity.
std::vector<Rational> rational_roots(const UPoly& f);
/// Number of distinct real roots in the half-open interval (lo, hi].
int count_real_roots(const UPoly& f, const Rational& lo, const Rational& hi);

/// A binary form f(l, m) written as m^mu_power * g(l, m) with m not
/// dividing g; `affine` is g(t, 1). The zero form has an empty `affine`.
struct BinaryForm {
  int mu_power = 0;
  UPoly affine;
};

BinaryForm split_binary_form(const Poly& f);
/// gcd of binary forms (affine part monic); zero forms are skipped and an
/// empty `affine` means every form was zero.
BinaryForm binary_form_gcd(std::span<const Poly> forms);

}  // namespace grim
