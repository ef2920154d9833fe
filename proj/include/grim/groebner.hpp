#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "grim/poly.hpp"

namespace grim {

/// Counters accumulated across Gröbner computations. They depend only on
/// the inputs, so they are safe to print in deterministic reports.
struct GbStats {
  std::uint64_t bases = 0;
  std::uint64_t pairs_considered = 0;
  std::uint64_t pairs_reduced = 0;
  std::uint64_t zero_reductions = 0;
  std::uint64_t reduction_steps = 0;
  std::uint64_t max_basis_size = 0;
};

struct GbOptions {
  /// Cap on reduction steps per basis computation; exceeding it throws
  /// Error(ResourceLimit).
  std::uint64_t max_steps = 1'000'000;
  /// Optional accumulator, owned by the caller.
  GbStats* stats = nullptr;
};

/// Generators in a ring plus a write-once cache of reduced Gröbner bases
/// keyed by monomial order tag. Copies share the cache.
class Ideal {
public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Poly> generators);

  static Ideal unit(RingPtr ring);
  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  /// The ideal generated by all variables.
  static Ideal irrelevant(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }
  bool is_homogeneous() const;

  /// Reduced basis for `order` (computed once, then cached).
  const std::vector<Poly>& basis(const MonomialOrder& order, const GbOptions& opts = {}) const;
  /// Reduced basis for the ring's own order.
  const std::vector<Poly>& basis(const GbOptions& opts = {}) const { return basis(ring_->order(), opts); }

  Ideal operator+(const Ideal& other) const;

private:
  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::shared_ptr<const std::vector<Poly>>> bases;
  };

  RingPtr ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Reduced Gröbner basis (monic, sorted by descending leading monomial).
/// Output lives in `ring` re-ordered by `order`.
std::vector<Poly> groebner_basis(const Ideal& ideal, const MonomialOrder& order,
                                 const GbOptions& opts = {});

/// Full reduction of f by a Gröbner basis (all in the same ring/order).
Poly reduce(const Poly& f, const std::vector<Poly>& basis, const GbOptions& opts = {});

Poly normal_form(const Poly& f, const Ideal& ideal, const MonomialOrder& order,
                 const GbOptions& opts = {});
bool contains(const Ideal& ideal, const Poly& f, const GbOptions& opts = {});
bool ideal_equal(const Ideal& a, const Ideal& b, const GbOptions& opts = {});
bool is_subset(const Ideal& a, const Ideal& b, const GbOptions& opts = {});

/// I ∩ k[x_k, ..., x_{n-1}], returned in the ring of the remaining
/// variables with grevlex order. Generators are the reduced basis elements
/// free of the eliminated variables.
Ideal eliminate(const Ideal& ideal, std::size_t first_k, const GbOptions& opts = {});

/// (I : f^∞) via an auxiliary variable t and the relation 1 - t f.
Ideal saturate(const Ideal& ideal, const Poly& f, const GbOptions& opts = {});
/// (I : J^∞) as the intersection of the saturations by each generator of J.
Ideal saturate(const Ideal& ideal, const Ideal& by, const GbOptions& opts = {});
Ideal intersect(const Ideal& a, const Ideal& b, const GbOptions& opts = {});

/// Minimal homogeneous generators extracted from the reduced grevlex basis.
std::vector<Poly> minimal_generators(const Ideal& ideal, const GbOptions& opts = {});
/// Basis of the degree-d part of a homogeneous ideal, as polynomials in
/// reduced row echelon form with respect to the descending monomial basis.
std::vector<Poly> graded_piece(const Ideal& ideal, unsigned d, const GbOptions& opts = {});

struct HilbertData {
  int projective_dimension = -1;
  /// Zero when the scheme is empty.
  std::int64_t degree = 0;
  /// Hilbert polynomial coefficients in ascending powers of s.
  std::vector<Rational> hilbert_polynomial;
  /// Numerator of the Hilbert series over (1 - t)^nvars, ascending.
  std::vector<std::int64_t> series_numerator;

  /// Value of the Hilbert polynomial at s.
  Rational evaluate(long s) const;
  std::string polynomial_string() const;
};

/// Numerator N(t) of HS(t) = N(t) / (1-t)^n for a monomial ideal given by
/// its generators (all in the same ring).
std::vector<std::int64_t> hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars);

HilbertData hilbert_data(const Ideal& ideal, const GbOptions& opts = {});
bool is_empty_projective(const Ideal& ideal, const GbOptions& opts = {});

/// S-polynomial of two polynomials in the same ring.
Poly s_polynomial(const Poly& f, const Poly& g);

}  // namespace grim
