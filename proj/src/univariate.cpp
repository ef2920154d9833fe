#include "grim/univariate.hpp"

#include <algorithm>
#include <limits>

#include "grim/error.hpp"

namespace grim {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::dehomogenize(const Poly& f) {
  if (f.ring()->nvars() != 2) throw Error(ErrorCode::ArityMismatch, "binary form expected");
  std::vector<Rational> c;
  for (const auto& t : f.terms()) {
    std::size_t e = t.mono.exp[0];
    if (c.size() <= e) c.resize(e + 1, Rational(0));
    c[e] += t.coeff;
  }
  return UPoly(std::move(c));
}

Rational UPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * t + c_[k];
  return acc;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  UPoly out = *this;
  Rational inv = 1 / lead();
  for (auto& v : out.c_) v *= inv;
  return out;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<unsigned long>(k));
  return UPoly(std::move(d));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] -= b.c_[k];
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw Error(ErrorCode::Internal, "division by the zero polynomial");
  std::vector<Rational> rem = a.c_;
  std::vector<Rational> quo(a.c_.size() >= b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 0, Rational(0));
  const std::size_t db = b.c_.size() - 1;
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    Rational f = rem[k] / b.lead();
    quo[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * b.c_[j];
  }
  q = UPoly(std::move(quo));
  r = UPoly(std::move(rem));
}

std::string UPoly::to_string(const std::string& var) const {
  RingPtr ring = Ring::make({var});
  std::vector<Term> terms;
  for (std::size_t k = 0; k < c_.size(); ++k)
    terms.push_back({Monomial::variable(0, static_cast<std::uint16_t>(k)), c_[k]});
  return Poly::from_terms(ring, std::move(terms)).to_string();
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly q, r;
    UPoly::divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly square_free_part(const UPoly& f) {
  if (f.degree() <= 0) return f.monic();
  UPoly g = gcd(f, f.derivative());
  UPoly q, r;
  UPoly::divmod(f, g, q, r);
  return q.monic();
}

namespace {

std::vector<UPoly> sturm_sequence(const UPoly& f) {
  std::vector<UPoly> seq{f, f.derivative()};
  while (!seq.back().is_zero()) {
    UPoly q, r;
    UPoly::divmod(seq[seq.size() - 2], seq.back(), q, r);
    if (r.is_zero()) break;
    seq.push_back(UPoly() - r);
  }
  return seq;
}

int sign_changes(const std::vector<UPoly>& seq, const Rational& t) {
  int changes = 0, last = 0;
  for (const auto& p : seq) {
    int s = sgn(p(t));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int count_real_roots(const UPoly& f, const Rational& lo, const Rational& hi) {
  UPoly sf = square_free_part(f);
  if (sf.degree() <= 0) return 0;
  auto seq = sturm_sequence(sf);
  return sign_changes(seq, lo) - sign_changes(seq, hi);
}

std::vector<Rational> rational_roots(const UPoly& f) {
  std::vector<Rational> roots;
  UPoly sf = square_free_part(f);
  if (sf.degree() < 1) return roots;

  // Clear denominators: integer coefficients a_0..a_n.
  Integer den = 1;
  for (const auto& c : sf.coeffs()) den = lcm(den, Integer(c.get_den()));
  std::vector<Integer> a;
  for (const auto& c : sf.coeffs()) a.push_back(Integer(c * den));
  const std::size_t n = a.size() - 1;
  const Integer& an = a[n];

  // y = an * t turns roots p/q of f into integer roots of the monic
  // polynomial g(y) = an^(n-1) f(y / an).
  std::vector<Rational> g(n + 1);
  Integer pw = 1;
  for (std::size_t k = n + 1; k-- > 0;) {
    // coefficient of y^k is a_k * an^(n-1-k) for k < n, and 1 for k = n.
    if (k == n) {
      g[k] = 1;
    } else {
      g[k] = Rational(a[k] * pw);
      pw *= an;
    }
  }
  UPoly gy(g);

  // Cauchy bound, then bisect Sturm-isolated intervals down to width < 1.
  Rational bound = 1;
  for (std::size_t k = 0; k < n; ++k) bound = std::max(bound, Rational(abs(g[k]) + 1));
  Integer ib = bound.get_num() / bound.get_den() + 1;
  auto seq = sturm_sequence(gy);

  std::vector<std::pair<Rational, Rational>> stack{{Rational(-ib), Rational(ib)}};
  std::vector<Integer> candidates;
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    int cnt = sign_changes(seq, lo) - sign_changes(seq, hi);
    if (cnt == 0) continue;
    if (hi - lo < 1) {
      Integer c = hi.get_num() / hi.get_den();  // truncation
      for (Integer k = c - 1; k <= c + 1; ++k)
        if (Rational(k) > lo && Rational(k) <= hi) candidates.push_back(k);
      continue;
    }
    Rational mid = (lo + hi) / 2;
    stack.push_back({lo, mid});
    stack.push_back({mid, hi});
  }
  for (const auto& y : candidates) {
    if (gy(Rational(y)) == 0) {
      Rational t(y, an);
      t.canonicalize();
      roots.push_back(t);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

BinaryForm split_binary_form(const Poly& f) {
  BinaryForm out;
  if (f.is_zero()) return out;
  int e = std::numeric_limits<int>::max();
  for (const auto& t : f.terms()) e = std::min(e, static_cast<int>(t.mono.exp[1]));
  out.mu_power = e;
  out.affine = UPoly::dehomogenize(f);
  return out;
}

BinaryForm binary_form_gcd(std::span<const Poly> forms) {
  BinaryForm out;
  bool any = false;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    BinaryForm b = split_binary_form(f);
    if (!any) {
      out = b;
      out.affine = out.affine.monic();
      any = true;
    } else {
      out.mu_power = std::min(out.mu_power, b.mu_power);
      out.affine = gcd(out.affine, b.affine);
    }
  }
  return out;
}

}  // namespace grim
