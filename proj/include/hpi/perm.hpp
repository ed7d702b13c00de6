#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace hpi {

// Permutations of {0, .., n-1} in one-line notation: p[i] is the image of i.
// Products compose as functions, (p*q)(i) = p(q(i)).
using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline Perm perm_compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

inline Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

inline int perm_sign(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t j = i, len = 0;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<std::size_t>(p[j]);
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

inline bool perm_is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

// Lexicographic rank over all n! one-line words, 0 for the identity.
inline std::uint64_t perm_rank(const Perm& p) {
  const int n = static_cast<int>(p.size());
  std::uint64_t rank = 0;
  std::uint64_t fact = 1;
  for (int i = 2; i <= n; ++i) fact *= static_cast<std::uint64_t>(i);
  std::vector<bool> used(n, false);
  for (int i = 0; i < n; ++i) {
    if (n - i > 0) fact /= static_cast<std::uint64_t>(n - i);
    int smaller = 0;
    for (int v = 0; v < p[i]; ++v)
      if (!used[v]) ++smaller;
    rank += static_cast<std::uint64_t>(smaller) * fact;
    used[p[i]] = true;
  }
  return rank;
}

inline Perm perm_unrank(int n, std::uint64_t rank) {
  std::uint64_t fact = 1;
  for (int i = 2; i <= n; ++i) fact *= static_cast<std::uint64_t>(i);
  std::vector<int> avail(n);
  std::iota(avail.begin(), avail.end(), 0);
  Perm p(n);
  for (int i = 0; i < n; ++i) {
    fact /= static_cast<std::uint64_t>(n - i);
    std::uint64_t k = rank / fact;
    rank %= fact;
    p[i] = avail[k];
    avail.erase(avail.begin() + static_cast<long>(k));
  }
  return p;
}

// Cycle type as a partition (decreasing part lengths).
inline std::vector<int> perm_cycle_type(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> parts;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t j = i;
    int len = 0;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<std::size_t>(p[j]);
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

// Canonical representative of the conjugacy class with the given cycle type:
// consecutive cycles over 0,1,2,.. in the given part order.
inline Perm perm_from_cycle_type(int n, const std::vector<int>& parts) {
  Perm p = perm_identity(n);
  int start = 0;
  for (int len : parts) {
    for (int k = 0; k < len; ++k) p[start + k] = start + (k + 1) % len;
    start += len;
  }
  return p;
}

inline std::uint64_t factorial_u64(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace hpi
