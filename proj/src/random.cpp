#include "grim/random.hpp"

namespace grim {

namespace {

// Draws uniformly from [lo, hi] without relying on the unspecified
// algorithm of std::uniform_int_distribution, so sequences are identical
// across standard libraries.
long draw(std::mt19937_64& eng, long lo, long hi) {
  auto span = static_cast<std::uint64_t>(hi - lo + 1);
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t v;
  do {
    v = eng();
  } while (v >= limit);
  return lo + static_cast<long>(v % span);
}

}  // namespace

Rational RationalSampler::next() {
  long num = draw(engine_, -20, 20);
  long den = draw(engine_, 1, 20);
  return make_rational(num, den);
}

Rational RationalSampler::next_nonzero() {
  for (;;) {
    Rational r = next();
    if (r != 0) return r;
  }
}

std::vector<Rational> RationalSampler::vector(std::size_t n) {
  std::vector<Rational> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(next());
  return v;
}

Poly RationalSampler::linear_form(const RingPtr& ring) {
  return form(ring, 1);
}

Poly RationalSampler::form(const RingPtr& ring, unsigned d) {
  for (;;) {
    std::vector<Term> terms;
    for (const auto& m : monomials_of_degree(*ring, d)) terms.push_back({m, next()});
    Poly p = Poly::from_terms(ring, std::move(terms));
    if (!p.is_zero()) return p;
  }
}

}  // namespace grim
