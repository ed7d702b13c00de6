#pragma once

#include <vector>

#include "hpi/algebra.hpp"
#include "hpi/matrix.hpp"
#include "hpi/subspace.hpp"

namespace hpi {

struct RadicalData {
  Subspace radical;        // J as a subspace of the algebra
  std::size_t index = 1;   // smallest p with J^p = 0 (p = 1 iff J = 0)
  bool whole_algebra = false;  // J = A, the algebra is nilpotent
};

// Jacobson radical over a characteristic zero field: the radical of the trace
// form (a, b) -> Tr(L_{a b}) taken in the unital hull, which equals J(A) for
// non-unital A as well since J(hull) = J(A).
inline RadicalData jacobson_radical(const Algebra& a) {
  const std::size_t d = a.dim();
  RadicalData out;
  if (d == 0) {
    out.radical = Subspace(0);
    out.whole_algebra = true;
    return out;
  }
  Algebra hull = a.unital_hull();
  const std::size_t hd = hull.dim();
  // form[y][x] = Tr(L_{e_x e_y}) over hull coordinates
  Matrix form(hd, hd);
  std::vector<Matrix> left(hd);
  for (std::size_t i = 0; i < hd; ++i) left[i] = hull.left_mult_matrix(hull.basis_vec(i));
  for (std::size_t y = 0; y < hd; ++y)
    for (std::size_t x = 0; x < hd; ++x) {
      Vec prod = hull.multiply(hull.basis_vec(x), hull.basis_vec(y));
      Rat t(0);
      for (std::size_t k = 0; k < hd; ++k)
        if (!is_zero(prod[k])) t += prod[k] * trace(left[k]);
      form.at(y, x) = t;
    }
  std::vector<Vec> ker = kernel_basis(form);
  std::vector<Vec> in_a;
  for (const Vec& v : ker) {
    if (!is_zero(v[d]))
      throw Error(ErrorCode::InternalCheck, "radical escapes the algebra inside its hull");
    in_a.push_back(Vec(v.begin(), v.begin() + static_cast<long>(d)));
  }
  out.radical = Subspace::from_span(in_a, d);
  out.whole_algebra = out.radical.dim() == d;

  // Nilpotency index by exact powers: J^{k+1} = J^k * J until zero.
  auto mult = [&a](const Vec& u, const Vec& v) { return a.multiply(u, v); };
  Subspace power = out.radical;
  std::size_t p = 1;
  while (!power.is_zero()) {
    power = subspace_product(power, out.radical, mult);
    ++p;
    if (p > d + 1) throw Error(ErrorCode::InternalCheck, "radical power chain fails to terminate");
  }
  out.index = p;
  return out;
}

// Coordinates for A / W with W given by its echelon basis: the complement is
// spanned by the residues of the non-pivot standard basis vectors, so
// projection reads off non-pivot coordinates after reduction.
class QuotientMap {
 public:
  QuotientMap() = default;
  QuotientMap(const Algebra& a, const Subspace& w) : sub_(w) {
    std::vector<bool> is_pivot(a.dim(), false);
    for (std::size_t p : w.pivots()) is_pivot[p] = true;
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!is_pivot[i]) free_.push_back(i);
    std::vector<std::string> labels;
    for (std::size_t f : free_) labels.push_back(a.labels()[f] + "~");
    q_ = Algebra(free_.size(), labels);
    for (std::size_t i = 0; i < free_.size(); ++i)
      for (std::size_t j = 0; j < free_.size(); ++j) {
        Vec prod = project(a.multiply(a.basis_vec(free_[i]), a.basis_vec(free_[j])));
        Algebra::SparseVec sv;
        for (std::size_t k = 0; k < prod.size(); ++k)
          if (!is_zero(prod[k])) sv.emplace_back(k, prod[k]);
        q_.set_product(i, j, std::move(sv));
      }
    q_.check_associativity();
  }

  const Algebra& quotient() const { return q_; }
  const Subspace& subspace() const { return sub_; }
  std::size_t dim() const { return free_.size(); }

  Vec project(const Vec& v) const {
    Vec r = sub_.reduce(v);
    Vec out(free_.size());
    for (std::size_t i = 0; i < free_.size(); ++i) out[i] = r[free_[i]];
    return out;
  }

  // Canonical representative of a quotient vector.
  Vec embed(const Vec& q) const {
    Vec out(sub_.ambient(), Rat(0));
    for (std::size_t i = 0; i < free_.size(); ++i) out[free_[i]] = q[i];
    return out;
  }

  // Descent of an operator that maps W into W.
  Matrix descend_operator(const Matrix& op) const {
    Matrix m(free_.size(), free_.size());
    for (std::size_t j = 0; j < free_.size(); ++j) {
      Vec img = project(mat_apply(op, embed(q_unit_vec(j))));
      for (std::size_t i = 0; i < free_.size(); ++i) m.at(i, j) = img[i];
    }
    return m;
  }

 private:
  Vec q_unit_vec(std::size_t j) const {
    Vec v(free_.size(), Rat(0));
    v[j] = 1;
    return v;
  }

  Subspace sub_;
  std::vector<std::size_t> free_;
  Algebra q_;
};

}  // namespace hpi
