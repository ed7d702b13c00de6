#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "hpi/algebra.hpp"
#include "hpi/haction.hpp"
#include "hpi/hgrouping.hpp"
#include "hpi/radical.hpp"
#include "hpi/section.hpp"
#include "hpi/subspace.hpp"

namespace hpi {

struct ExponentResult {
  std::size_t d = 0;
  bool nilpotent = false;
  std::vector<std::size_t> block_dims;
  std::vector<std::size_t> witness_chain;  // block indices realizing d, product order
  std::size_t witness_product_dim = 0;     // dimension of the final nonzero product
};

struct ExponentAnalysis {
  RadicalData rad;
  HActionData action;           // operator algebra on A
  HActionData quotient_action;  // induced on A / J
  WedderburnSection section;
  std::vector<HSimpleBlock> blocks;
  std::vector<Subspace> saturated;  // operator saturation of each block's section image
  ExponentResult result;
};

// The growth exponent: the largest total dimension of blocks with distinct
// indices i_1, ..., i_r whose saturated section images chain to a nonzero
// product Z_{i_1} A^+ Z_{i_2} A^+ ... A^+ Z_{i_r}, where Z_i is the span of
// z * section(B_i) over the operator basis and A^+ adjoins a formal unit,
// so S A^+ = S A + S. Zero exactly when the algebra is nilpotent.
inline ExponentAnalysis pi_exponent(const Algebra& a, std::vector<HOperator> generators,
                                    const Vec* section_twist = nullptr) {
  ExponentAnalysis an;
  an.action = operator_algebra_basis(a, std::move(generators));
  an.rad = jacobson_radical(a);
  if (an.rad.whole_algebra) {
    an.result.nilpotent = true;
    an.section = WedderburnSection{QuotientMap(a, an.rad.radical), {}, {}, Matrix(a.dim(), 0)};
    return an;
  }
  an.section = wedderburn_section(a, an.rad, section_twist);
  an.quotient_action = induced_quotient_action(a, an.section.qm, an.action);
  const Algebra& q = an.section.qm.quotient();
  an.blocks = h_simple_grouping(q, an.section.decomp, an.quotient_action);

  for (const HSimpleBlock& b : an.blocks) {
    an.result.block_dims.push_back(b.space.dim());
    std::vector<Vec> gens;
    for (std::size_t k = 0; k < b.space.dim(); ++k) {
      Vec img = an.section.apply(b.space.basis_vector(k));
      for (const HOperator& z : an.action.zeta) gens.push_back(mat_apply(z.mat, img));
    }
    an.saturated.push_back(Subspace::from_span(gens, a.dim()));
    if (an.saturated.back().is_zero())
      throw Error(ErrorCode::InternalCheck, "saturated section image of a block vanished");
  }

  const Subspace whole = Subspace::full(a.dim());
  auto mult = [&](const Vec& x, const Vec& y) { return a.multiply(x, y); };
  auto extend = [&](const Subspace& s, std::size_t j) {
    Subspace sap = subspace_sum(subspace_product(s, whole, mult), s);
    return subspace_product(sap, an.saturated[j], mult);
  };

  std::vector<bool> used(an.blocks.size(), false);
  std::vector<std::size_t> chain;
  std::function<void(const Subspace&, std::size_t)> dfs = [&](const Subspace& s,
                                                              std::size_t total) {
    if (total > an.result.d) {
      an.result.d = total;
      an.result.witness_chain = chain;
      an.result.witness_product_dim = s.dim();
    }
    for (std::size_t j = 0; j < an.blocks.size(); ++j) {
      if (used[j]) continue;
      Subspace next = extend(s, j);
      if (next.is_zero()) continue;
      used[j] = true;
      chain.push_back(j);
      dfs(next, total + an.blocks[j].space.dim());
      chain.pop_back();
      used[j] = false;
    }
  };
  for (std::size_t i = 0; i < an.blocks.size(); ++i) {
    used[i] = true;
    chain.push_back(i);
    dfs(an.saturated[i], an.blocks[i].space.dim());
    chain.pop_back();
    used[i] = false;
  }
  if (an.result.d == 0) throw Error(ErrorCode::InternalCheck, "non-nilpotent algebra got exponent 0");
  return an;
}

// Re-evaluates the witness chain from first principles: saturation of the
// named blocks, then the alternating product, which must be nonzero and
// account for the claimed exponent.
inline bool verify_exponent_witness(const Algebra& a, const ExponentAnalysis& an) {
  if (an.result.nilpotent) return an.result.d == 0 && an.result.witness_chain.empty();
  if (an.result.witness_chain.empty()) return false;
  std::size_t total = 0;
  Subspace s = an.saturated[an.result.witness_chain.front()];
  total += an.blocks[an.result.witness_chain.front()].space.dim();
  const Subspace whole = Subspace::full(a.dim());
  auto mult = [&](const Vec& x, const Vec& y) { return a.multiply(x, y); };
  for (std::size_t t = 1; t < an.result.witness_chain.size(); ++t) {
    std::size_t j = an.result.witness_chain[t];
    Subspace sap = subspace_sum(subspace_product(s, whole, mult), s);
    s = subspace_product(sap, an.saturated[j], mult);
    total += an.blocks[j].space.dim();
  }
  return !s.is_zero() && total == an.result.d && s.dim() == an.result.witness_product_dim;
}

}  // namespace hpi
