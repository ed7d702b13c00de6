#pragma once

#include <utility>
#include <vector>

#include "hpi/matrix.hpp"
#include "hpi/rational.hpp"

namespace hpi {

// Subspace of F^ambient held as its canonical reduced-row-echelon basis.
// Equal subspaces compare equal componentwise, which makes results of
// subspace arithmetic reproducible bit for bit.
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace from_span(const std::vector<Vec>& vectors, std::size_t ambient) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    RrefResult rr = rref(Matrix::from_rows(vectors));
    s.basis_ = std::move(rr.mat);
    s.pivots_ = std::move(rr.pivots);
    return s;
  }

  static Subspace full(std::size_t ambient) {
    Subspace s(ambient);
    s.basis_ = Matrix::identity(ambient);
    s.pivots_.resize(ambient);
    for (std::size_t i = 0; i < ambient; ++i) s.pivots_[i] = i;
    return s;
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  Vec basis_vector(std::size_t i) const { return basis_.row(i); }

  // Canonical residue modulo this subspace: pivot coordinates eliminated.
  Vec reduce(const Vec& v) const {
    Vec r(v);
    for (std::size_t i = 0; i < dim(); ++i) {
      const Rat& c = r[pivots_[i]];
      if (hpi::is_zero(c)) continue;
      Rat cc = c;
      for (std::size_t j = 0; j < ambient_; ++j) r[j] -= cc * basis_.at(i, j);
    }
    return r;
  }

  bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

  bool contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_vector(i))) return false;
    return true;
  }

  // Coordinates of v in this basis; v must lie in the subspace. With a
  // reduced echelon basis the coordinates are the values at pivot columns.
  Vec coordinates(const Vec& v) const {
    if (!contains(v)) throw Error(ErrorCode::ValidationError, "vector outside subspace");
    Vec c(dim());
    for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
    return c;
  }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_ && pivots_ == o.pivots_;
  }

 private:
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.basis_vector(i));
  for (std::size_t i = 0; i < b.dim(); ++i) rows.push_back(b.basis_vector(i));
  return Subspace::from_span(rows, a.ambient());
}

// Intersection via the left kernel of the stacked basis: coefficients
// (x, y) with x A + y B = 0 give intersection elements x A.
inline Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    throw Error(ErrorCode::ValidationError, "intersect ambient mismatch");
  if (a.is_zero() || b.is_zero()) return Subspace(a.ambient());
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.basis_vector(i));
  for (std::size_t i = 0; i < b.dim(); ++i) rows.push_back(b.basis_vector(i));
  Matrix stacked = Matrix::from_rows(rows);
  std::vector<Vec> left_kernel = kernel_basis(stacked.transposed());
  std::vector<Vec> gens;
  for (const Vec& k : left_kernel) {
    Vec v(a.ambient(), Rat(0));
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!is_zero(k[i])) vec_axpy(v, k[i], a.basis_vector(i));
    gens.push_back(std::move(v));
  }
  return Subspace::from_span(gens, a.ambient());
}

inline bool subspace_contains(const Subspace& a, const Subspace& b) { return a.contains(b); }

// Span of f(u, v) over basis pairs of two subspaces, for a bilinear map f
// into the common ambient space.
template <typename Bilinear>
Subspace subspace_product(const Subspace& a, const Subspace& b, Bilinear&& f) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vec u = a.basis_vector(i);
    for (std::size_t j = 0; j < b.dim(); ++j) gens.push_back(f(u, b.basis_vector(j)));
  }
  return Subspace::from_span(gens, a.ambient());
}

}  // namespace hpi
