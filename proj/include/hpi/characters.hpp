#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "hpi/partition.hpp"

namespace hpi {

namespace char_detail {

// Border-strip recursion on beta-numbers: removing a strip of length L moves
// a bead from b to b - L; the sign is (-1)^(number of beads jumped over).
inline long long mn_rec(const Partition& lam, const Partition& mu, std::size_t pos,
                        std::map<std::pair<Partition, std::size_t>, long long>& memo) {
  if (pos == mu.size()) return lam.empty() ? 1 : 0;
  if (lam.empty()) return 0;
  auto key = std::make_pair(lam, pos);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  const int len = mu[pos];
  const std::size_t s = lam.size();
  std::vector<int> beta(s);
  for (std::size_t i = 0; i < s; ++i)
    beta[i] = lam[i] + static_cast<int>(s - 1 - i);  // strictly decreasing

  long long total = 0;
  for (std::size_t i = 0; i < s; ++i) {
    const int target = beta[i] - len;
    if (target < 0) continue;
    bool occupied = false;
    int jumped = 0;
    for (std::size_t j = 0; j < s; ++j) {
      if (j == i) continue;
      if (beta[j] == target) occupied = true;
      if (beta[j] > target && beta[j] < beta[i]) ++jumped;
    }
    if (occupied) continue;
    std::vector<int> nb = beta;
    nb[i] = target;
    std::sort(nb.begin(), nb.end(), std::greater<int>());
    Partition next;
    for (std::size_t j = 0; j < s; ++j) {
      int part = nb[j] - static_cast<int>(s - 1 - j);
      if (part > 0) next.push_back(part);
    }
    long long sub = mn_rec(next, mu, pos + 1, memo);
    total += (jumped % 2 == 0) ? sub : -sub;
  }
  memo[key] = total;
  return total;
}

}  // namespace char_detail

// Irreducible character of S_n: value of chi^lambda on the class of cycle
// type mu, by the Murnaghan-Nakayama rule.
inline long long irreducible_character(const Partition& lam, const Partition& mu) {
  std::map<std::pair<Partition, std::size_t>, long long> memo;
  return char_detail::mn_rec(lam, mu, 0, memo);
}

}  // namespace hpi
