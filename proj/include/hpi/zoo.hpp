#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hpi/algebra.hpp"
#include "hpi/haction.hpp"

namespace hpi {

struct ZooModel {
  std::string name;
  Algebra alg;
  std::vector<HOperator> generators;
};

namespace zoo_detail {

inline std::string cell_label(char prefix, std::size_t i, std::size_t j) {
  return std::string(1, prefix) + std::to_string(i + 1) + std::to_string(j + 1);
}

inline Algebra full_matrix_algebra(std::size_t k) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) labels.push_back(cell_label('e', i, j));
  Algebra a(k * k, labels);
  auto idx = [k](std::size_t i, std::size_t j) { return i * k + j; };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l)
        a.add_structure_constant(idx(i, j), idx(j, l), idx(i, l), Rat(1));
  a.check_associativity();
  return a;
}

inline Algebra upper_triangular_algebra(std::size_t k) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      cells.emplace_back(i, j);
      labels.push_back(cell_label('e', i, j));
    }
  Algebra a(cells.size(), labels);
  for (std::size_t x = 0; x < cells.size(); ++x)
    for (std::size_t y = 0; y < cells.size(); ++y)
      if (cells[x].second == cells[y].first)
        for (std::size_t z = 0; z < cells.size(); ++z)
          if (cells[z].first == cells[x].first && cells[z].second == cells[y].second)
            a.add_structure_constant(x, y, z, Rat(1));
  a.check_associativity();
  return a;
}

// x F[x] / (x^p): basis x, x^2, ..., x^(p-1)
inline Algebra nil_truncation(std::size_t p) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i < p; ++i) labels.push_back("x" + std::to_string(i));
  Algebra a(p - 1, labels);
  for (std::size_t i = 0; i + 1 < p; ++i)
    for (std::size_t j = 0; j + 1 < p; ++j)
      if (i + j + 2 <= p - 1) a.add_structure_constant(i, j, i + j + 1, Rat(1));
  a.check_associativity();
  return a;
}

// pairs (C, D) of m x m matrices with (C, D)(C', D') = (CC', CD'), realized
// as the block algebra {(C D; 0 0)} inside the 2m x 2m matrices
inline Algebra bahturin_block_algebra(std::size_t m) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) labels.push_back(cell_label('c', i, j));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) labels.push_back(cell_label('d', i, j));
  Algebra a(2 * m * m, labels);
  auto c = [m](std::size_t i, std::size_t j) { return i * m + j; };
  auto d = [m](std::size_t i, std::size_t j) { return m * m + i * m + j; };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < m; ++l) {
        a.add_structure_constant(c(i, j), c(j, l), c(i, l), Rat(1));
        a.add_structure_constant(c(i, j), d(j, l), d(i, l), Rat(1));
      }
  a.check_associativity();
  return a;
}

inline Matrix operator_from_images(const std::vector<Vec>& images) {
  const std::size_t d = images.size();
  Matrix m(d, d);
  for (std::size_t col = 0; col < d; ++col)
    for (std::size_t row = 0; row < d; ++row) m.at(row, col) = images[col][row];
  return m;
}

inline HOperator adjoint_derivation(const Algebra& a, const Vec& x, const std::string& name) {
  std::vector<Vec> images;
  for (std::size_t b = 0; b < a.dim(); ++b) {
    Vec img = a.multiply(x, a.basis_vec(b));
    vec_axpy(img, Rat(-1), a.multiply(a.basis_vec(b), x));
    images.push_back(std::move(img));
  }
  Matrix m = operator_from_images(images);
  return HOperator{name, m, make_rule(RuleKind::Derivation, m, a.dim())};
}

}  // namespace zoo_detail

inline std::vector<std::string> zoo_names() {
  return {"point",  "nil3",   "ut2",          "m2",     "m2-transpose",
          "m2-ad",  "m2-ad1", "bahturin-m2",  "qq-swap"};
}

inline ZooModel zoo_model(const std::string& name) {
  using namespace zoo_detail;
  auto parse_size = [&](const std::string& prefix, std::size_t lo,
                        std::size_t hi) -> std::size_t {
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return 0;
    std::size_t v = 0;
    for (std::size_t i = prefix.size(); i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9') return 0;
      v = v * 10 + static_cast<std::size_t>(name[i] - '0');
    }
    if (v < lo) return 0;
    if (v > hi) throw Error(ErrorCode::SizeLimit, "zoo model size out of range: " + name);
    return v;
  };

  if (name == "point") {
    Algebra a(1, {"u"});
    a.add_structure_constant(0, 0, 0, Rat(1));
    a.check_associativity();
    return {name, a, {}};
  }
  if (name == "qq-swap") {
    Algebra a(2, {"u1", "u2"});
    a.add_structure_constant(0, 0, 0, Rat(1));
    a.add_structure_constant(1, 1, 1, Rat(1));
    a.check_associativity();
    Matrix swap(2, 2);
    swap.at(0, 1) = 1;
    swap.at(1, 0) = 1;
    HOperator op{"swap", swap, make_rule(RuleKind::Automorphism, swap, 2)};
    return {name, a, {op}};
  }
  if (name == "m2-transpose") {
    Algebra a = full_matrix_algebra(2);
    Matrix t(4, 4);
    t.at(0, 0) = 1;
    t.at(2, 1) = 1;  // e12 -> e21
    t.at(1, 2) = 1;  // e21 -> e12
    t.at(3, 3) = 1;
    HOperator op{"t", t, make_rule(RuleKind::AntiAutomorphism, t, 4)};
    return {name, a, {op}};
  }
  if (name == "m2-ad") {
    Algebra a = full_matrix_algebra(2);
    std::vector<HOperator> gens;
    for (std::size_t b = 0; b < 4; ++b)
      gens.push_back(adjoint_derivation(a, a.basis_vec(b), "ad" + a.labels()[b].substr(1)));
    return {name, a, gens};
  }
  if (name == "m2-ad1") {
    Algebra a = full_matrix_algebra(2);
    return {name, a, {adjoint_derivation(a, a.basis_vec(0), "ad11")}};
  }

  if (std::size_t k = parse_size("ut", 1, 5); k != 0)
    return {name, upper_triangular_algebra(k), {}};
  if (std::size_t k = parse_size("m", 1, 5); k != 0) return {name, full_matrix_algebra(k), {}};
  if (std::size_t p = parse_size("nil", 2, 9); p != 0) return {name, nil_truncation(p), {}};
  if (std::size_t m = parse_size("bahturin-m", 1, 3); m != 0) {
    Algebra a = bahturin_block_algebra(m);
    const std::size_t mm = m * m;
    // phi(C, D) = (C, C + D): fixes the d-cells, sends c-cells to c + d
    Matrix phi = Matrix::identity(2 * mm);
    for (std::size_t i = 0; i < mm; ++i) phi.at(mm + i, i) = 1;
    HOperator op{"phi", phi, make_rule(RuleKind::Automorphism, phi, 2 * mm)};
    return {name, a, {op}};
  }
  throw Error(ErrorCode::ParseError, "unknown zoo model: " + name);
}

}  // namespace hpi
