#pragma once

#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "hpi/algebra.hpp"
#include "hpi/matrix.hpp"
#include "hpi/radical.hpp"
#include "hpi/subspace.hpp"

namespace hpi {

// How an operator h distributes over products:
//   h(x y) = sum_i (a_i x)(b_i y) + sum_j (c_j y)(d_j x).
// Automorphisms, anti-automorphisms and derivations are the classical
// special cases; Generalized carries explicit term lists. Rules compose, so
// the closure of the declared generators carries a valid rule for every
// basis operator of the generated algebra.
enum class RuleKind { Unit, Automorphism, AntiAutomorphism, Derivation, Generalized };

struct ProductRule {
  RuleKind kind = RuleKind::Generalized;
  std::vector<std::pair<Matrix, Matrix>> sym;    // (a, b): (a x)(b y)
  std::vector<std::pair<Matrix, Matrix>> twist;  // (c, d): (c y)(d x)
};

inline bool matrix_is_zero(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m.at(i, j))) return false;
  return true;
}

inline ProductRule make_rule(RuleKind kind, const Matrix& op, std::size_t dim) {
  ProductRule r;
  r.kind = kind;
  Matrix id = Matrix::identity(dim);
  switch (kind) {
    case RuleKind::Unit:
      r.sym.emplace_back(id, id);
      break;
    case RuleKind::Automorphism:
      r.sym.emplace_back(op, op);
      break;
    case RuleKind::AntiAutomorphism:
      r.twist.emplace_back(op, op);
      break;
    case RuleKind::Derivation:
      r.sym.emplace_back(op, id);
      r.sym.emplace_back(id, op);
      break;
    case RuleKind::Generalized:
      throw Error(ErrorCode::ValidationError, "generalized rules carry explicit term lists");
  }
  return r;
}

// Rule for outer o inner, from the rules of the factors. Derived by pushing
// the outer rule through each term of the inner one; term counts multiply.
inline ProductRule compose_rules(const ProductRule& outer, const ProductRule& inner) {
  ProductRule out;
  out.kind = RuleKind::Generalized;
  auto push = [](std::vector<std::pair<Matrix, Matrix>>& list, Matrix l, Matrix r) {
    if (matrix_is_zero(l) || matrix_is_zero(r)) return;
    list.emplace_back(std::move(l), std::move(r));
  };
  for (const auto& [ai, bi] : inner.sym) {
    for (const auto& [A, B] : outer.sym) push(out.sym, mat_mul(A, ai), mat_mul(B, bi));
    for (const auto& [C, D] : outer.twist) push(out.twist, mat_mul(C, bi), mat_mul(D, ai));
  }
  for (const auto& [cj, dj] : inner.twist) {
    for (const auto& [A, B] : outer.sym) push(out.twist, mat_mul(A, cj), mat_mul(B, dj));
    for (const auto& [C, D] : outer.twist) push(out.sym, mat_mul(C, dj), mat_mul(D, cj));
  }
  return out;
}

inline Vec apply_rule_to_pair(const Algebra& a, const ProductRule& rule, const Vec& x, const Vec& y) {
  Vec out(a.dim(), Rat(0));
  for (const auto& [l, r] : rule.sym) {
    Vec p = a.multiply(mat_apply(l, x), mat_apply(r, y));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += p[k];
  }
  for (const auto& [l, r] : rule.twist) {
    Vec p = a.multiply(mat_apply(l, y), mat_apply(r, x));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += p[k];
  }
  return out;
}

// Exact check of the distribution law on all basis pairs.
inline bool verify_product_rule(const Algebra& a, const Matrix& op, const ProductRule& rule) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vec lhs = mat_apply(op, a.multiply(a.basis_vec(i), a.basis_vec(j)));
      Vec rhs = apply_rule_to_pair(a, rule, a.basis_vec(i), a.basis_vec(j));
      if (lhs != rhs) return false;
    }
  return true;
}

struct HOperator {
  std::string name;
  Matrix mat;
  ProductRule rule;
};

// The image of the acting Hopf algebra inside End(A): a basis of the unital
// algebra generated by the declared operators, each basis element carrying a
// product rule obtained by composition. zeta[0] is always the identity.
struct HActionData {
  std::vector<HOperator> generators;
  std::vector<HOperator> zeta;
  Subspace zeta_span;  // inside End(A) = F^(dim^2), row-major flattening
};

inline Vec flatten_matrix(const Matrix& m) {
  Vec v(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m.at(i, j);
  return v;
}

// Closure by words over the generators in length-then-lex order. A span
// closed under right composition by every generator contains all words, so
// stabilization of one full level ends the search.
inline HActionData operator_algebra_basis(const Algebra& a, std::vector<HOperator> generators) {
  const std::size_t d = a.dim();
  for (const HOperator& g : generators) {
    if (g.mat.rows() != d || g.mat.cols() != d)
      throw Error(ErrorCode::ValidationError, "operator shape does not match the algebra");
    if (!verify_product_rule(a, g.mat, g.rule))
      throw Error(ErrorCode::ValidationError, "product rule fails on basis pairs: " + g.name);
  }
  HActionData data;
  data.generators = generators;
  std::vector<Vec> span_rows;
  HOperator id{"id", Matrix::identity(d), make_rule(RuleKind::Unit, Matrix::identity(d), d)};
  data.zeta.push_back(id);
  span_rows.push_back(flatten_matrix(id.mat));
  Subspace span = Subspace::from_span(span_rows, d * d);

  std::vector<HOperator> frontier = {id};
  while (!frontier.empty()) {
    std::vector<HOperator> next;
    for (const HOperator& w : frontier) {
      for (const HOperator& g : generators) {
        Matrix m = mat_mul(w.mat, g.mat);  // extend the word on the right
        Vec f = flatten_matrix(m);
        if (span.contains(f)) continue;
        HOperator nw;
        nw.name = (w.name == "id") ? g.name : w.name + "*" + g.name;
        nw.mat = std::move(m);
        nw.rule = compose_rules(w.rule, g.rule);
        span_rows.push_back(f);
        span = Subspace::from_span(span_rows, d * d);
        data.zeta.push_back(nw);
        next.push_back(data.zeta.back());
        if (data.zeta.size() > d * d)
          throw Error(ErrorCode::InternalCheck, "operator closure exceeds End(A)");
      }
    }
    frontier = std::move(next);
  }
  data.zeta_span = span;
  for (const HOperator& z : data.zeta)
    if (!verify_product_rule(a, z.mat, z.rule))
      throw Error(ErrorCode::InternalCheck, "composed rule fails verification: " + z.name);
  return data;
}

inline bool is_h_invariant(const Subspace& w, const HActionData& act) {
  for (const HOperator& z : act.zeta)
    for (std::size_t i = 0; i < w.dim(); ++i)
      if (!w.contains(mat_apply(z.mat, w.basis_vector(i)))) return false;
  return true;
}

// Action induced on A / W for an invariant subspace W: generators and their
// rule matrices descend, then the closure is rebuilt on the quotient (it may
// shrink, e.g. when a generator acts trivially modulo W).
inline HActionData induced_quotient_action(const Algebra& a, const QuotientMap& qm,
                                           const HActionData& act) {
  if (!is_h_invariant(qm.subspace(), act))
    throw Error(ErrorCode::NotHInvariant, "subspace is not stable under the operator algebra");
  auto descend_ok = [&](const Matrix& m) {
    for (std::size_t i = 0; i < qm.subspace().dim(); ++i)
      if (!qm.subspace().contains(mat_apply(m, qm.subspace().basis_vector(i)))) return false;
    return true;
  };
  std::vector<HOperator> gens;
  for (const HOperator& g : act.generators) {
    HOperator q;
    q.name = g.name;
    q.mat = qm.descend_operator(g.mat);
    q.rule.kind = g.rule.kind;
    if (g.rule.kind == RuleKind::Generalized) {
      for (const auto& [l, r] : g.rule.sym) {
        if (!descend_ok(l) || !descend_ok(r))
          throw Error(ErrorCode::NotHInvariant, "rule operator does not preserve the subspace");
        q.rule.sym.emplace_back(qm.descend_operator(l), qm.descend_operator(r));
      }
      for (const auto& [l, r] : g.rule.twist) {
        if (!descend_ok(l) || !descend_ok(r))
          throw Error(ErrorCode::NotHInvariant, "rule operator does not preserve the subspace");
        q.rule.twist.emplace_back(qm.descend_operator(l), qm.descend_operator(r));
      }
    } else {
      q.rule = make_rule(g.rule.kind, q.mat, qm.dim());
    }
    if (!verify_product_rule(qm.quotient(), q.mat, q.rule))
      throw Error(ErrorCode::InternalCheck, "descended rule fails verification: " + g.name);
    gens.push_back(std::move(q));
  }
  return operator_algebra_basis(qm.quotient(), std::move(gens));
}

}  // namespace hpi
