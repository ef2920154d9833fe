#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "grim/poly.hpp"
#include "grim/rational.hpp"

namespace grim {

/// Seeded source of small-height rationals: numerator in [-20, 20],
/// denominator in [1, 20]. One instance per job; never shared globally.
class RationalSampler {
public:
  explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}

  Rational next();
  Rational next_nonzero();
  std::vector<Rational> vector(std::size_t n);
  /// Random nonzero linear form in the ring's variables.
  Poly linear_form(const RingPtr& ring);
  /// Random form of degree d.
  Poly form(const RingPtr& ring, unsigned d);
  std::uint64_t next_seed() { return engine_(); }

private:
  std::mt19937_64 engine_;
};

}  // namespace grim
