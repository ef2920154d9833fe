#include "grim/subspace.hpp"

#include "grim/error.hpp"

namespace grim {

RatVector linear_coefficients(const Poly& f) {
  RatVector v(f.ring()->nvars());
  for (const auto& t : f.terms()) {
    if (t.mono.deg != 1) throw Error(ErrorCode::DegreeMismatch, "expected a linear form, got " + f.to_string());
    for (std::size_t i = 0; i < v.size(); ++i)
      if (t.mono.exp[i]) v[i] = t.coeff;
  }
  return v;
}

Poly linear_form_from(const RatVector& coeffs, const RingPtr& ring) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) terms.push_back({Monomial::variable(i), coeffs[i]});
  return Poly::from_terms(ring, std::move(terms));
}

LinearSection::LinearSection(const RingPtr& ambient, std::span<const Poly> linear_forms)
    : ambient_(ambient) {
  std::size_t n = ambient->nvars();
  std::vector<RatVector> rows;
  for (const auto& f : linear_forms) {
    if (f.is_zero()) continue;
    rows.push_back(linear_coefficients(f.to_ring(ambient)));
  }
  auto basis = row_space_basis(rows);
  std::vector<bool> is_pivot(n, false);
  for (const auto& row : basis) {
    std::size_t p = 0;
    while (row[p] == 0) ++p;
    pivots_.push_back(p);
    is_pivot[p] = true;
    forms_.push_back(linear_form_from(row, ambient));
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    if (!is_pivot[i]) {
      free_.push_back(i);
      names.push_back(ambient->name(i));
    }
  sub_ = Ring::make(names, ambient->order().kind == OrderKind::BlockElim ? MonomialOrder::grevlex()
                                                                       : ambient->order());
  images_.assign(n, Poly(sub_));
  for (std::size_t k = 0; k < free_.size(); ++k) images_[free_[k]] = Poly::variable(sub_, k);
  for (std::size_t r = 0; r < basis.size(); ++r) {
    Poly img(sub_);
    for (std::size_t k = 0; k < free_.size(); ++k)
      if (basis[r][free_[k]] != 0) img -= Poly::variable(sub_, k) * basis[r][free_[k]];
    images_[pivots_[r]] = img;
  }
}

Poly LinearSection::restrict(const Poly& f) const {
  return f.to_ring(ambient_).substitute(images_);
}

Poly LinearSection::lift(const Poly& f) const {
  return f.to_ring(sub_).embed(ambient_, free_);
}

RatVector LinearSection::lift_point(const RatVector& p) const {
  if (p.size() != free_.size()) throw Error(ErrorCode::ArityMismatch, "point has wrong arity for subspace");
  RatVector out(ambient_->nvars());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = images_[i].evaluate(p);
  return out;
}

}  // namespace grim
