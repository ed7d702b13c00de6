#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hpi/matrix.hpp"
#include "hpi/rational.hpp"
#include "hpi/subspace.hpp"

namespace hpi {

// Finite dimensional associative algebra over the rationals, presented by
// structure constants on a fixed basis: e_i e_j = sum_k sc[i][j][k] e_k.
// The table is stored sparsely per basis pair.
class Algebra {
 public:
  using SparseVec = std::vector<std::pair<std::size_t, Rat>>;

  Algebra() : dim_(0) {}
  explicit Algebra(std::size_t dim, std::vector<std::string> labels = {})
      : dim_(dim), labels_(std::move(labels)), sc_(dim, std::vector<SparseVec>(dim)) {
    if (labels_.empty()) {
      labels_.reserve(dim);
      for (std::size_t i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i));
    }
    if (labels_.size() != dim_)
      throw Error(ErrorCode::ValidationError, "label count does not match dimension");
  }

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  void set_product(std::size_t i, std::size_t j, SparseVec v) { sc_[i][j] = std::move(v); }

  void add_structure_constant(std::size_t i, std::size_t j, std::size_t k, const Rat& c) {
    if (i >= dim_ || j >= dim_ || k >= dim_)
      throw Error(ErrorCode::ValidationError, "structure constant index out of range");
    for (auto& kv : sc_[i][j])
      if (kv.first == k) {
        kv.second += c;
        return;
      }
    sc_[i][j].emplace_back(k, c);
  }

  const SparseVec& basis_product(std::size_t i, std::size_t j) const { return sc_[i][j]; }

  Vec multiply(const Vec& a, const Vec& b) const {
    Vec out(dim_, Rat(0));
    for (std::size_t i = 0; i < dim_; ++i) {
      if (is_zero(a[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (is_zero(b[j])) continue;
        Rat c = a[i] * b[j];
        for (const auto& kv : sc_[i][j]) out[kv.first] += c * kv.second;
      }
    }
    return out;
  }

  Vec basis_vec(std::size_t i) const {
    Vec v(dim_, Rat(0));
    v[i] = 1;
    return v;
  }

  Matrix left_mult_matrix(const Vec& a) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      Vec col = multiply(a, basis_vec(j));
      for (std::size_t i = 0; i < dim_; ++i) m.at(i, j) = col[i];
    }
    return m;
  }

  Matrix right_mult_matrix(const Vec& a) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      Vec col = multiply(basis_vec(j), a);
      for (std::size_t i = 0; i < dim_; ++i) m.at(i, j) = col[i];
    }
    return m;
  }

  // Associativity on all basis triples; the defect triple is reported.
  void check_associativity() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) {
        Vec ij = multiply(basis_vec(i), basis_vec(j));
        for (std::size_t k = 0; k < dim_; ++k) {
          Vec lhs = multiply(ij, basis_vec(k));
          Vec rhs = multiply(basis_vec(i), multiply(basis_vec(j), basis_vec(k)));
          if (lhs != rhs)
            throw Error(ErrorCode::ValidationError,
                        "associativity fails on basis triple (" + labels_[i] + ", " + labels_[j] +
                            ", " + labels_[k] + ")");
        }
      }
  }

  // Two-sided unit if one exists. Solves u e_i = e_i, e_i u = e_i exactly.
  std::optional<Vec> find_unit() const {
    if (dim_ == 0) return std::nullopt;
    Matrix sys(2 * dim_ * dim_, dim_);
    Vec rhs(2 * dim_ * dim_, Rat(0));
    std::size_t r = 0;
    for (std::size_t i = 0; i < dim_; ++i) {
      // rows for u e_i = e_i and e_i u = e_i, one block per coordinate
      for (std::size_t coord = 0; coord < dim_; ++coord) {
        for (std::size_t k = 0; k < dim_; ++k) {
          Rat lc(0), rc(0);
          for (const auto& kv : sc_[k][i])
            if (kv.first == coord) lc = kv.second;
          for (const auto& kv : sc_[i][k])
            if (kv.first == coord) rc = kv.second;
          sys.at(r, k) = lc;
          sys.at(r + 1, k) = rc;
        }
        rhs[r] = (coord == i) ? Rat(1) : Rat(0);
        rhs[r + 1] = rhs[r];
        r += 2;
      }
    }
    return solve(sys, rhs);
  }

  // F 1 + A with the unit adjoined at the last coordinate. Used for radical
  // computations on non-unital input.
  Algebra unital_hull() const {
    std::vector<std::string> labels = labels_;
    labels.push_back("one");
    Algebra h(dim_ + 1, labels);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) h.sc_[i][j] = sc_[i][j];
    for (std::size_t i = 0; i <= dim_; ++i) {
      h.add_structure_constant(dim_, i, i, 1);
      if (i < dim_) h.add_structure_constant(i, dim_, i, 1);
    }
    return h;
  }

  bool operator==(const Algebra& o) const {
    if (dim_ != o.dim_ || labels_ != o.labels_) return false;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) {
        Vec a = multiply(basis_vec(i), basis_vec(j));
        Vec b = o.multiply(o.basis_vec(i), o.basis_vec(j));
        if (a != b) return false;
      }
    return true;
  }

 private:
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<std::vector<SparseVec>> sc_;
};

// Center { z : z a = a z for all a }, as a subspace of the algebra.
inline Subspace center(const Algebra& a) {
  const std::size_t d = a.dim();
  if (d == 0) return Subspace(0);
  Matrix sys(d * d, d);
  for (std::size_t i = 0; i < d; ++i) {
    Matrix l = a.left_mult_matrix(a.basis_vec(i));
    Matrix r = a.right_mult_matrix(a.basis_vec(i));
    for (std::size_t row = 0; row < d; ++row)
      for (std::size_t col = 0; col < d; ++col)
        sys.at(i * d + row, col) = r.at(row, col) - l.at(row, col);
  }
  std::vector<Vec> k = kernel_basis(sys);
  return Subspace::from_span(k, d);
}

inline Rat trace(const Matrix& m) {
  Rat t(0);
  for (std::size_t i = 0; i < m.rows() && i < m.cols(); ++i) t += m.at(i, i);
  return t;
}

}  // namespace hpi
