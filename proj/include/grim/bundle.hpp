#pragma once

#include <array>
#include <span>
#include <vector>

#include "grim/groebner.hpp"
#include "grim/poly.hpp"

namespace grim {

/// A rank-2 bundle Q on P^2 given as the cokernel of
///   0 -> O(-1) --(A, B, Q)--> O^2 + O(1) -> Q -> 0.
/// Construction validates degrees and that A, B, Q have no common zero.
class Presentation {
public:
  static Presentation make(const Poly& a, const Poly& b, const Poly& q, const GbOptions& opts = {});

  const Poly& a() const { return a_; }
  const Poly& b() const { return b_; }
  const Poly& q() const { return q_; }
  const RingPtr& ring() const { return a_.ring(); }

private:
  Presentation(Poly a, Poly b, Poly q) : a_(std::move(a)), b_(std::move(b)), q_(std::move(q)) {}
  Poly a_, b_, q_;
};

/// The presentation (x, y, z^2) over the ring (x, y, z).
Presentation standard_presentation(const RingPtr& ring);

/// A global section (a, b, g) of O^2 + O(1); a, b scalars, g a linear form.
struct SectionE {
  Rational a, b;
  Poly g;

  friend bool operator==(const SectionE&, const SectionE&) = default;
};

struct ChernPair {
  long c1 = 0;
  long c2 = 0;
  friend bool operator==(const ChernPair&, const ChernPair&) = default;
};

/// Chern classes of coker(sum O(source) -> sum O(target)), by dividing the
/// total Chern classes in Z[h]/(h^3). Target rank must exceed source rank
/// by exactly two.
ChernPair chern_of_cokernel(std::span<const long> source_twists, std::span<const long> target_twists);

/// Fixed basis (1,0,0), (0,1,0), (0,0,x), (0,0,y), (0,0,z) of H^0(O^2 + O(1)),
/// identified with H^0(Q) through the quotient map.
std::vector<SectionE> section_basis(const Presentation& p);
std::vector<SectionE> section_basis(const RingPtr& ring);

SectionE section_combine(std::span<const Rational> coeffs, std::span<const SectionE> basis);

/// Coordinates of a section in the fixed basis.
std::array<Rational, 5> section_coordinates(const SectionE& s);

}  // namespace grim
