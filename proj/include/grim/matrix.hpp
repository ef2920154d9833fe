#pragma once

#include <cstddef>
#include <vector>

#include "grim/poly.hpp"
#include "grim/rational.hpp"

namespace grim {

using RatVector = std::vector<Rational>;

/// Dense matrix of rationals, row-major.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVector row(std::size_t r) const;
  RatMatrix transpose() const;
  bool is_symmetric() const;
  bool is_zero() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rational& s, const RatMatrix& m);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

struct Echelon {
  RatMatrix reduced;                 ///< reduced row echelon form
  std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

Echelon rref(const RatMatrix& m);

struct RankKernel {
  std::size_t rank = 0;
  /// Basis of {v : M v = 0}, itself in reduced row echelon form.
  std::vector<RatVector> kernel;
};

RankKernel matrix_rank_kernel(const RatMatrix& m);
std::size_t matrix_rank(const RatMatrix& m);
Rational determinant(const RatMatrix& m);
RatMatrix inverse(const RatMatrix& m);

/// RREF of the row space spanned by the given vectors (zero rows dropped).
std::vector<RatVector> row_space_basis(const std::vector<RatVector>& rows);

/// Symmetric matrix M of a quadratic form with q = v^T M v; off-diagonal
/// entries are half the mixed coefficients. Throws DegreeMismatch unless q
/// is zero or homogeneous of degree 2.
RatMatrix quadratic_form_matrix(const Poly& q);
/// Inverse of the above: v^T M v as a polynomial in `ring`.
Poly quadratic_form_poly(const RatMatrix& m, const RingPtr& ring);

/// Coefficient vector of a homogeneous polynomial in the descending basis
/// of degree-d monomials of its ring.
RatVector coefficient_vector(const Poly& f, unsigned d);

using PolyMatrix = std::vector<std::vector<Poly>>;

/// Entry (i, j) is d polys[i] / d var_j.
PolyMatrix jacobian_matrix(std::span<const Poly> polys);

/// Determinant by cofactor expansion; intended for the small matrices here.
Poly determinant(const PolyMatrix& m, const RingPtr& ring);

/// All k x k minors of m (row subsets lexicographic, then column subsets).
std::vector<Poly> minors(const PolyMatrix& m, std::size_t k, const RingPtr& ring);

/// k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

}  // namespace grim
