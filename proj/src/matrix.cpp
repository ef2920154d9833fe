#include "grim/matrix.hpp"

#include <algorithm>
#include <utility>

#include "grim/error.hpp"

namespace grim {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  if (rows.empty()) return {};
  RatMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw Error(ErrorCode::ArityMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(data_.begin() + static_cast<long>(r * cols_),
                   data_.begin() + static_cast<long>((r + 1) * cols_));
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RatMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

bool RatMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::ArityMismatch, "matrix product dimension mismatch");
  RatMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(ErrorCode::ArityMismatch, "matrix sum dimension mismatch");
  RatMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

RatMatrix operator*(const Rational& s, const RatMatrix& m) {
  RatMatrix out = m;
  for (auto& v : out.data_) v *= s;
  return out;
}

Echelon rref(const RatMatrix& m) {
  Echelon e{m, {}};
  RatMatrix& a = e.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(piv, c), a(row, c));
    Rational inv = 1 / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      Rational f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

std::size_t matrix_rank(const RatMatrix& m) { return rref(m).rank(); }

RankKernel matrix_rank_kernel(const RatMatrix& m) {
  Echelon e = rref(m);
  RankKernel out;
  out.rank = e.rank();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  out.kernel = row_space_basis(basis);
  return out;
}

std::vector<RatVector> row_space_basis(const std::vector<RatVector>& rows) {
  if (rows.empty()) return {};
  Echelon e = rref(RatMatrix::from_rows(rows));
  std::vector<RatVector> out;
  for (std::size_t r = 0; r < e.rank(); ++r) out.push_back(e.reduced.row(r));
  return out;
}

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::ArityMismatch, "determinant of non-square matrix");
  RatMatrix a = m;
  Rational det = 1;
  std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(piv, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      Rational f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

RatMatrix inverse(const RatMatrix& m) {
  std::size_t n = m.rows();
  if (n != m.cols()) throw Error(ErrorCode::ArityMismatch, "inverse of non-square matrix");
  RatMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  Echelon e = rref(aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1)
    throw Error(ErrorCode::Internal, "matrix is singular");
  RatMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

RatMatrix quadratic_form_matrix(const Poly& q) {
  std::size_t n = q.ring()->nvars();
  RatMatrix m(n, n);
  if (q.is_zero()) return m;
  if (q.degree() != 2 || !q.is_homogeneous())
    throw Error(ErrorCode::DegreeMismatch, "quadratic_form_matrix needs a quadratic form, got " + q.to_string());
  for (const auto& t : q.terms()) {
    std::size_t i = n, j = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (t.mono.exp[v] == 2) i = j = v;
      else if (t.mono.exp[v] == 1) (i == n ? i : j) = v;
    }
    if (i == j) {
      m(i, i) = t.coeff;
    } else {
      Rational half = t.coeff / 2;
      m(i, j) = half;
      m(j, i) = half;
    }
  }
  return m;
}

Poly quadratic_form_poly(const RatMatrix& m, const RingPtr& ring) {
  if (m.rows() != ring->nvars() || m.cols() != ring->nvars())
    throw Error(ErrorCode::ArityMismatch, "matrix size does not match ring");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      terms.push_back({Monomial::variable(i) * Monomial::variable(j), m(i, j)});
    }
  return Poly::from_terms(ring, std::move(terms));
}

RatVector coefficient_vector(const Poly& f, unsigned d) {
  auto basis = monomials_of_degree(*f.ring(), d);
  RatVector v(basis.size());
  for (const auto& t : f.terms()) {
    if (t.mono.deg != d)
      throw Error(ErrorCode::DegreeMismatch, "expected a form of degree " + std::to_string(d));
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (basis[k] == t.mono) {
        v[k] = t.coeff;
        break;
      }
  }
  return v;
}

PolyMatrix jacobian_matrix(std::span<const Poly> polys) {
  PolyMatrix jac;
  if (polys.empty()) return jac;
  const RingPtr& ring = polys[0].ring();
  for (const auto& p : polys) {
    if (!p.ring()->same_variables(*ring))
      throw Error(ErrorCode::RingMismatch, "jacobian inputs live in different rings");
    std::vector<Poly> row;
    for (std::size_t v = 0; v < ring->nvars(); ++v) row.push_back(p.to_ring(ring).derivative(v));
    jac.push_back(std::move(row));
  }
  return jac;
}

namespace {

Poly det_rec(const PolyMatrix& m, std::size_t row, const std::vector<std::size_t>& cols,
             const RingPtr& ring) {
  if (cols.empty()) return Poly::constant(ring, 1);
  if (cols.size() == 1) return m[row][cols[0]];
  Poly acc(ring);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Poly& entry = m[row][cols[k]];
    if (entry.is_zero()) continue;
    std::vector<std::size_t> rest;
    rest.reserve(cols.size() - 1);
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (j != k) rest.push_back(cols[j]);
    Poly minor = det_rec(m, row + 1, rest, ring);
    if (minor.is_zero()) continue;
    if (k % 2 == 0) acc += entry * minor;
    else acc -= entry * minor;
  }
  return acc;
}

}  // namespace

Poly determinant(const PolyMatrix& m, const RingPtr& ring) {
  std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw Error(ErrorCode::ArityMismatch, "determinant of non-square matrix");
  std::vector<std::size_t> cols(n);
  for (std::size_t i = 0; i < n; ++i) cols[i] = i;
  return det_rec(m, 0, cols, ring);
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<Poly> minors(const PolyMatrix& m, std::size_t k, const RingPtr& ring) {
  std::vector<Poly> out;
  if (m.empty()) return out;
  for (const auto& rs : subsets(m.size(), k))
    for (const auto& cs : subsets(m[0].size(), k)) {
      PolyMatrix sub;
      for (auto r : rs) {
        std::vector<Poly> row;
        for (auto c : cs) row.push_back(m[r][c]);
        sub.push_back(std::move(row));
      }
      out.push_back(determinant(sub, ring));
    }
  return out;
}

}  // namespace grim
