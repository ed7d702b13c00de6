#pragma once

// Self-contained reference implementations used to check the main library.
// Deliberately naive: textbook row reduction over the rationals with no
// modular arithmetic and no fraction-free tricks, and a brute-force standard
// tableau counter. Kept independent of the library's linear algebra.

#include <cstddef>
#include <vector>

#include "hpi/partition.hpp"
#include "hpi/rational.hpp"

namespace oracle {

inline std::size_t plain_gauss_rank(std::vector<std::vector<hpi::Rat>> rows) {
  if (rows.empty()) return 0;
  const std::size_t w = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < w && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && hpi::is_zero(rows[sel][col])) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || hpi::is_zero(rows[r][col])) continue;
      hpi::Rat f = rows[r][col] / rows[rank][col];
      for (std::size_t k = col; k < w; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Counts standard Young tableaux of the given shape by direct enumeration:
// place 1..n one at a time, always into a cell whose left and upper
// neighbors are already filled.
inline long long syt_count(const hpi::Partition& shape) {
  std::vector<int> filled(shape.size(), 0);  // cells filled so far per row
  auto rec = [&](auto&& self, int remaining) -> long long {
    if (remaining == 0) return 1;
    long long total = 0;
    for (std::size_t i = 0; i < shape.size(); ++i) {
      if (filled[i] >= shape[i]) continue;
      if (i > 0 && filled[i - 1] <= filled[i]) continue;
      ++filled[i];
      total += self(self, remaining - 1);
      --filled[i];
    }
    return total;
  };
  int n = 0;
  for (int part : shape) n += part;
  return rec(rec, n);
}

}  // namespace oracle
