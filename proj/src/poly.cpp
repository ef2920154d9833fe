#include "grim/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "grim/error.hpp"

namespace grim {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "SYNTAX";
    case ErrorCode::UnknownIdentifier: return "UNKNOWN_IDENTIFIER";
    case ErrorCode::RingMismatch: return "RING_MISMATCH";
    case ErrorCode::ArityMismatch: return "ARITY_MISMATCH";
    case ErrorCode::DegreeMismatch: return "DEGREE_MISMATCH";
    case ErrorCode::CommonZero: return "COMMON_ZERO";
    case ErrorCode::DependentSections: return "DEPENDENT_SECTIONS";
    case ErrorCode::NotGenerating: return "NOT_GENERATING";
    case ErrorCode::NotSpanning: return "NOT_SPANNING";
    case ErrorCode::NotOnSecantMinusV: return "NOT_ON_SECANT_MINUS_V";
    case ErrorCode::InvalidLine: return "INVALID_LINE";
    case ErrorCode::ResourceLimit: return "RESOURCE_LIMIT";
    case ErrorCode::BadInput: return "BAD_INPUT";
    case ErrorCode::Io: return "IO_ERROR";
    case ErrorCode::Internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return Error(ErrorCode::BadInput, "malformed rational '" + s + "'"); };
  if (s.empty()) throw bad();
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool seen_slash = false, digit_run = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digit_run = true;
    } else if (s[i] == '/' && !seen_slash && digit_run) {
      seen_slash = true;
      digit_run = false;
    } else {
      throw bad();
    }
  }
  if (!digit_run) throw bad();
  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0) throw bad();
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------- orders

std::string MonomialOrder::tag() const {
  switch (kind) {
    case OrderKind::Grevlex: return "grevlex";
    case OrderKind::Lex: return "lex";
    case OrderKind::BlockElim: return "elim(" + std::to_string(block) + ")";
  }
  return "?";
}

MonomialOrder parse_order(std::string_view name) {
  if (name == "grevlex") return MonomialOrder::grevlex();
  if (name == "lex") return MonomialOrder::lex();
  throw Error(ErrorCode::BadInput, "unknown monomial order '" + std::string(name) + "'");
}

Monomial Monomial::variable(std::size_t i, std::uint16_t power) {
  Monomial m;
  m.exp[i] = power;
  m.deg = power;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (deg > other.deg) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i] && other.exp[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = a.exp[i] + b.exp[i];
  r.deg = a.deg + b.deg;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = a.exp[i] - b.exp[i];
  r.deg = a.deg - b.deg;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp[i] = std::max(a.exp[i], b.exp[i]);
    r.deg += r.exp[i];
  }
  return r;
}

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  unsigned da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a.exp[i];
    db += b.exp[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int compare(const Monomial& a, const Monomial& b, const MonomialOrder& order,
            std::size_t nvars) {
  switch (order.kind) {
    case OrderKind::Grevlex:
      if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
      for (std::size_t i = nvars; i-- > 0;) {
        if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
      }
      return 0;
    case OrderKind::Lex:
      for (std::size_t i = 0; i < nvars; ++i) {
        if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? 1 : -1;
      }
      return 0;
    case OrderKind::BlockElim: {
      auto k = static_cast<std::size_t>(order.block);
      if (int c = grevlex_range(a, b, 0, k)) return c;
      return grevlex_range(a, b, k, nvars);
    }
  }
  return 0;
}

// ---------------------------------------------------------------- ring

Ring::Ring(std::vector<std::string> names, MonomialOrder order)
    : names_(std::move(names)), order_(order) {
  if (names_.size() > kMaxVars)
    throw Error(ErrorCode::BadInput, "too many variables (max " + std::to_string(kMaxVars) + ")");
  if (order_.kind == OrderKind::BlockElim &&
      (order_.block < 0 || static_cast<std::size_t>(order_.block) > names_.size()))
    throw Error(ErrorCode::BadInput, "elimination block larger than the ring");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j])
        throw Error(ErrorCode::BadInput, "duplicate variable '" + names_[i] + "'");
}

RingPtr Ring::make(std::vector<std::string> names, MonomialOrder order) {
  return std::make_shared<const Ring>(std::move(names), order);
}

RingPtr Ring::indexed(const std::string& prefix, std::size_t n, MonomialOrder order) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return make(std::move(names), order);
}

int Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

RingPtr Ring::with_order(MonomialOrder order) const { return make(names_, order); }

// ---------------------------------------------------------------- poly

Poly Poly::constant(RingPtr ring, const Rational& c) {
  Poly p(std::move(ring));
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Poly Poly::variable(RingPtr ring, std::size_t i) {
  if (i >= ring->nvars()) throw Error(ErrorCode::ArityMismatch, "variable index out of range");
  return monomial(std::move(ring), Monomial::variable(i));
}

Poly Poly::variable(RingPtr ring, std::string_view name) {
  int i = ring->index_of(name);
  if (i < 0) throw Error(ErrorCode::UnknownIdentifier, "unknown variable '" + std::string(name) + "'");
  return variable(std::move(ring), static_cast<std::size_t>(i));
}

Poly Poly::monomial(RingPtr ring, const Monomial& m, const Rational& c) {
  Poly p(std::move(ring));
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
  Poly p(std::move(ring));
  const Ring& r = *p.ring_;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return r.cmp(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

int Poly::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.deg));
  return d;
}

int Poly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.exp[var]));
  return d;
}

bool Poly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.deg != terms_.front().mono.deg) return false;
  return true;
}

bool Poly::uses_variable(std::size_t var) const {
  for (const auto& t : terms_)
    if (t.mono.exp[var]) return true;
  return false;
}

Rational Poly::coeff(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return 0;
}

Poly Poly::monic() const {
  if (is_zero() || lead_coeff() == 1) return *this;
  Rational inv = 1 / lead_coeff();
  return *this * inv;
}

Poly Poly::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (!t.mono.exp[var]) continue;
    Term d{t.mono, t.coeff * static_cast<unsigned long>(t.mono.exp[var])};
    d.mono.exp[var] -= 1;
    d.mono.deg -= 1;
    out.push_back(std::move(d));
  }
  return from_terms(ring_, std::move(out));
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(ring_, 1);
  Poly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Poly Poly::mul_term(const Monomial& m, const Rational& c) const {
  Poly p(ring_);
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
  return p;
}

Poly Poly::to_ring(const RingPtr& target) const {
  if (!ring_->same_variables(*target))
    throw Error(ErrorCode::RingMismatch, "cannot move polynomial between rings with different variables");
  if (ring_ == target) return *this;
  return from_terms(target, terms_);
}

Poly Poly::embed(const RingPtr& target, std::span<const std::size_t> var_map) const {
  if (var_map.size() != ring_->nvars())
    throw Error(ErrorCode::ArityMismatch, "embedding map has wrong arity");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < var_map.size(); ++i) m.exp[var_map[i]] += t.mono.exp[i];
    m.deg = t.mono.deg;
    out.push_back({m, t.coeff});
  }
  return from_terms(target, std::move(out));
}

Poly Poly::substitute(std::span<const Poly> images) const {
  if (images.size() != ring_->nvars())
    throw Error(ErrorCode::ArityMismatch, "substitution needs one image per variable");
  if (images.empty()) return *this;
  const RingPtr& target = images[0].ring();
  for (const auto& im : images)
    if (!im.ring()->same_variables(*target))
      throw Error(ErrorCode::RingMismatch, "substitution images live in different rings");
  // Cache powers per variable.
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t v, unsigned e) -> const Poly& {
    auto& pv = powers[v];
    if (pv.empty()) pv.push_back(Poly::constant(target, 1));
    while (pv.size() <= e) pv.push_back(pv.back() * images[v].to_ring(target));
    return pv[e];
  };
  Poly result(target);
  for (const auto& t : terms_) {
    Poly prod = Poly::constant(target, t.coeff);
    for (std::size_t v = 0; v < images.size(); ++v)
      if (t.mono.exp[v]) prod *= power(v, t.mono.exp[v]);
    result += prod;
  }
  return result;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (point.size() != ring_->nvars())
    throw Error(ErrorCode::ArityMismatch, "evaluation point has wrong arity");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (unsigned e = 0; e < t.mono.exp[i]; ++e) v *= point[i];
    sum += v;
  }
  return sum;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (c < 0) {
      os << '-';
      c = -c;
    } else if (!first) {
      os << '+';
    }
    first = false;
    bool need_star = false;
    if (t.mono.is_one() || c != 1) {
      os << grim::to_string(c);
      need_star = true;
    }
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      if (!t.mono.exp[i]) continue;
      if (need_star) os << '*';
      os << ring_->name(i);
      if (t.mono.exp[i] > 1) os << '^' << t.mono.exp[i];
      need_star = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

void Poly::check_ring(const Poly& other) const {
  if (!ring_ || !other.ring_ || !ring_->same_variables(*other.ring_))
    throw Error(ErrorCode::RingMismatch, "polynomials live in different rings");
}

Poly Poly::aligned(const Poly& other) const {
  check_ring(other);
  if (other.ring_ == ring_ || other.ring_->order() == ring_->order()) return other;
  return other.to_ring(ring_);
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

void Poly::add_scaled(const Rational& c, const Monomial& m, const Poly& g) {
  if (c == 0 || g.is_zero()) return;
  const Ring& r = *ring_;
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = g.terms_.begin(), be = g.terms_.end();
  Monomial bm;
  bool have_b = false;
  while (a != ae || b != be) {
    if (b != be && !have_b) {
      bm = b->mono * m;
      have_b = true;
    }
    int cmp = (a == ae) ? -1 : (b == be) ? 1 : r.cmp(a->mono, bm);
    if (cmp > 0) {
      out.push_back(std::move(*a++));
    } else if (cmp < 0) {
      out.push_back({bm, b->coeff * c});
      ++b;
      have_b = false;
    } else {
      Rational s = a->coeff + b->coeff * c;
      if (s != 0) out.push_back({a->mono, std::move(s)});
      ++a;
      ++b;
      have_b = false;
    }
  }
  terms_ = std::move(out);
}

Poly& Poly::operator+=(const Poly& other) {
  if (!ring_) {
    *this = other;
    return *this;
  }
  Poly o = aligned(other);
  add_scaled(1, Monomial{}, o);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (!ring_) {
    *this = -other;
    return *this;
  }
  Poly o = aligned(other);
  add_scaled(-1, Monomial{}, o);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly bb = a.aligned(b);
  std::vector<Term> prod;
  prod.reserve(a.size() * bb.size());
  for (const auto& s : a.terms_)
    for (const auto& t : bb.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
  return Poly::from_terms(a.ring_, std::move(prod));
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

bool operator==(const Poly& a, const Poly& b) {
  if (!a.ring_ || !b.ring_) return a.terms_.empty() && b.terms_.empty();
  if (!a.ring_->same_variables(*b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.ring_->order() == b.ring_->order()) {
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff)
        return false;
    return true;
  }
  return a == b.to_ring(a.ring_);
}

std::vector<Monomial> monomials_of_degree(const Ring& ring, unsigned d) {
  std::vector<Monomial> out;
  std::size_t n = ring.nvars();
  Monomial cur;
  auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
    if (var + 1 == n) {
      cur.exp[var] = static_cast<std::uint16_t>(left);
      cur.deg = d;
      out.push_back(cur);
      cur.exp[var] = 0;
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      cur.exp[var] = static_cast<std::uint16_t>(e);
      self(self, var + 1, left - e);
    }
    cur.exp[var] = 0;
  };
  if (n == 0) {
    if (d == 0) out.push_back(Monomial{});
    return out;
  }
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return ring.cmp(a, b) > 0; });
  return out;
}

}  // namespace grim
