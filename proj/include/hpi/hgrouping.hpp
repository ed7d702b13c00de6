#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "hpi/algebra.hpp"
#include "hpi/haction.hpp"
#include "hpi/semisimple.hpp"

namespace hpi {

// A decomposition of a semisimple algebra with operator action into
// action-stable ideals, each simple as an algebra-with-action. Two simple
// components land in the same block when some operator maps one into the
// other, in either direction. Such a decomposition is unique when it exists;
// when a block fails to be simple under the action the input admits none.
struct HSimpleBlock {
  Subspace space;
  std::vector<std::size_t> component_indices;  // into the decomposition
};

inline std::vector<HSimpleBlock> h_simple_grouping(const Algebra& s,
                                                   const SemisimpleDecomposition& dec,
                                                   const HActionData& act) {
  const std::size_t r = dec.components.size();
  auto part = [&](const Vec& v, std::size_t j) { return s.multiply(dec.idempotents[j], v); };

  std::vector<std::vector<bool>> edge(r, std::vector<bool>(r, false));
  for (std::size_t i = 0; i < r; ++i) {
    edge[i][i] = true;
    for (const HOperator& z : act.zeta)
      for (std::size_t b = 0; b < dec.components[i].dim(); ++b) {
        Vec img = mat_apply(z.mat, dec.components[i].basis_vector(b));
        for (std::size_t j = 0; j < r; ++j)
          if (!edge[i][j] && !vec_is_zero(part(img, j))) edge[i][j] = true;
      }
  }

  std::vector<std::size_t> group(r, r);
  std::size_t ngroups = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if (group[i] != r) continue;
    std::vector<std::size_t> stack = {i};
    group[i] = ngroups;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < r; ++v)
        if (group[v] == r && (edge[u][v] || edge[v][u])) {
          group[v] = ngroups;
          stack.push_back(v);
        }
    }
    ++ngroups;
  }

  std::vector<HSimpleBlock> blocks(ngroups);
  for (std::size_t i = 0; i < r; ++i) blocks[group[i]].component_indices.push_back(i);
  for (HSimpleBlock& b : blocks) {
    std::vector<Vec> gens;
    for (std::size_t ci : b.component_indices)
      for (std::size_t k = 0; k < dec.components[ci].dim(); ++k)
        gens.push_back(dec.components[ci].basis_vector(k));
    b.space = Subspace::from_span(gens, s.dim());
    if (!is_h_invariant(b.space, act))
      throw Error(ErrorCode::InternalCheck, "block is not stable under the operator algebra");
  }

  // Simplicity of each block under the action: the closure of any single
  // component under multiplication by the block and under the operators must
  // exhaust the block. Ideals of a semisimple algebra are partial sums of
  // components, so starting from each component is a complete test.
  for (const HSimpleBlock& b : blocks) {
    for (std::size_t start : b.component_indices) {
      Subspace closure = dec.components[start];
      for (;;) {
        std::vector<Vec> gens;
        for (std::size_t k = 0; k < closure.dim(); ++k) {
          Vec v = closure.basis_vector(k);
          gens.push_back(v);
          for (const HOperator& z : act.zeta) gens.push_back(mat_apply(z.mat, v));
          for (std::size_t m = 0; m < b.space.dim(); ++m) {
            Vec w = b.space.basis_vector(m);
            gens.push_back(s.multiply(v, w));
            gens.push_back(s.multiply(w, v));
          }
        }
        Subspace next = Subspace::from_span(gens, s.dim());
        if (next.dim() == closure.dim()) break;
        closure = std::move(next);
      }
      if (closure.dim() != b.space.dim())
        throw Error(ErrorCode::NotHSimple, "a block admits a proper nonzero action-stable ideal");
    }
  }

  std::sort(blocks.begin(), blocks.end(), [](const HSimpleBlock& x, const HSimpleBlock& y) {
    if (x.space.dim() != y.space.dim()) return x.space.dim() > y.space.dim();
    return x.space.pivots().front() < y.space.pivots().front();
  });
  return blocks;
}

}  // namespace hpi
