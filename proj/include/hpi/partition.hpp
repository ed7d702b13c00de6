#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hpi/rational.hpp"

namespace hpi {

using Partition = std::vector<int>;  // weakly decreasing positive parts

// All partitions of n in decreasing lexicographic order: (n) first, (1^n) last.
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(rest, maxpart); part >= 1; --part) {
      cur.push_back(part);
      self(self, rest - part, part);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

inline Partition conjugate_partition(const Partition& lam) {
  Partition out;
  if (lam.empty()) return out;
  for (int col = 0; col < lam[0]; ++col) {
    int h = 0;
    for (int part : lam)
      if (part > col) ++h;
    out.push_back(h);
  }
  return out;
}

inline std::string partition_str(const Partition& lam) {
  std::string s = "(";
  for (std::size_t i = 0; i < lam.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(lam[i]);
  }
  return s + ")";
}

// Number of standard tableaux of shape lam, by the hook length formula.
inline Int hook_dimension(const Partition& lam) {
  int n = 0;
  for (int part : lam) n += part;
  Partition conj = conjugate_partition(lam);
  Int num = 1;
  for (int k = 1; k <= n; ++k) num *= k;
  Int den = 1;
  for (std::size_t i = 0; i < lam.size(); ++i)
    for (int j = 0; j < lam[i]; ++j) {
      long hook = (lam[i] - j - 1) + (conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
      den *= hook;
    }
  Int q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

// Centralizer order of the conjugacy class with cycle type mu.
inline Int centralizer_order(const Partition& mu) {
  Int z = 1;
  int run_val = 0, run_len = 0;
  auto flush = [&]() {
    for (int t = 1; t <= run_len; ++t) z *= t;
  };
  for (int part : mu) {
    if (part == run_val) {
      ++run_len;
    } else {
      flush();
      run_val = part;
      run_len = 1;
    }
    z *= part;
  }
  flush();
  return z;
}

inline Int class_size(const Partition& mu) {
  int n = 0;
  for (int part : mu) n += part;
  Int num = 1;
  for (int k = 1; k <= n; ++k) num *= k;
  Int q;
  Int z = centralizer_order(mu);
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), z.get_mpz_t());
  return q;
}

}  // namespace hpi
