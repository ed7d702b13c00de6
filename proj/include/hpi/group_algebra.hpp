#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "hpi/partition.hpp"
#include "hpi/perm.hpp"
#include "hpi/rational.hpp"

namespace hpi {

struct GroupAlgebraElement {
  int n = 0;
  std::map<Perm, Rat> terms;

  void add(const Perm& g, const Rat& c) {
    if (is_zero(c)) return;
    Rat& slot = terms[g];
    slot += c;
    if (is_zero(slot)) terms.erase(g);
  }

  bool operator==(const GroupAlgebraElement& o) const { return n == o.n && terms == o.terms; }
};

inline GroupAlgebraElement ga_scale(const GroupAlgebraElement& x, const Rat& c) {
  GroupAlgebraElement out;
  out.n = x.n;
  if (is_zero(c)) return out;
  for (const auto& [g, v] : x.terms) out.terms[g] = v * c;
  return out;
}

inline GroupAlgebraElement ga_mul(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
  GroupAlgebraElement out;
  out.n = x.n;
  for (const auto& [g, cg] : x.terms)
    for (const auto& [h, ch] : y.terms) out.add(perm_compose(g, h), cg * ch);
  return out;
}

// The canonical tableau of shape lam: entries 1..n filled row by row.
// rows()[i] lists the 0-based entry positions of row i.
struct Tableau {
  Partition shape;
  std::vector<std::vector<int>> row_sets;
  std::vector<std::vector<int>> col_sets;

  explicit Tableau(const Partition& lam) : shape(lam) {
    int next = 0;
    for (std::size_t i = 0; i < lam.size(); ++i) {
      std::vector<int> row;
      for (int j = 0; j < lam[i]; ++j) row.push_back(next++);
      row_sets.push_back(row);
    }
    Partition conj = conjugate_partition(lam);
    for (std::size_t j = 0; j < conj.size(); ++j) {
      std::vector<int> col;
      for (int i = 0; i < conj[j]; ++i) col.push_back(row_sets[static_cast<std::size_t>(i)][j]);
      col_sets.push_back(col);
    }
  }

  int size() const {
    int n = 0;
    for (int part : shape) n += part;
    return n;
  }
};

namespace ga_detail {

// All permutations of {1..n} that permute each listed set within itself and
// fix everything else.
inline std::vector<Perm> stabilizer_perms(int n, const std::vector<std::vector<int>>& sets) {
  std::vector<Perm> out = {perm_identity(n)};
  for (const std::vector<int>& set : sets) {
    std::vector<int> arrangement(set);
    std::vector<Perm> next;
    std::sort(arrangement.begin(), arrangement.end());
    do {
      std::vector<Perm> grown;
      Perm block = perm_identity(n);
      for (std::size_t i = 0; i < set.size(); ++i) block[static_cast<std::size_t>(set[i])] = arrangement[i];
      for (const Perm& base : out) grown.push_back(perm_compose(block, base));
      next.insert(next.end(), grown.begin(), grown.end());
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    out = std::move(next);
  }
  return out;
}

}  // namespace ga_detail

inline GroupAlgebraElement row_symmetrizer(const Tableau& t) {
  GroupAlgebraElement a;
  a.n = t.size();
  for (const Perm& g : ga_detail::stabilizer_perms(a.n, t.row_sets)) a.add(g, Rat(1));
  return a;
}

inline GroupAlgebraElement column_antisymmetrizer(const Tableau& t) {
  GroupAlgebraElement b;
  b.n = t.size();
  for (const Perm& g : ga_detail::stabilizer_perms(b.n, t.col_sets)) b.add(g, Rat(perm_sign(g)));
  return b;
}

// e_T = a_T b_T; it satisfies e_T^2 = (n!/f^lambda) e_T.
inline GroupAlgebraElement young_symmetrizer(const Tableau& t) {
  return ga_mul(row_symmetrizer(t), column_antisymmetrizer(t));
}

// e*_T = b_T a_T, the transposed idempotent used for vanishing checks.
inline GroupAlgebraElement dual_young_symmetrizer(const Tableau& t) {
  return ga_mul(column_antisymmetrizer(t), row_symmetrizer(t));
}

}  // namespace hpi
