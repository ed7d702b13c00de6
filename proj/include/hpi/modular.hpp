#pragma once

#include <cstdint>
#include <future>
#include <map>
#include <mutex>
#include <vector>

#include "hpi/matrix.hpp"
#include "hpi/rational.hpp"

namespace hpi {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

// Fixed deterministic prime sequence: primes below 2^30 in descending order.
// 30-bit primes keep elimination products inside uint64 lazy-reduction
// windows and make integer trace lifts |t| < p/2 valid at the size limits.
inline bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline u64 prime_sequence(std::size_t k) {
  static std::vector<u64> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  u64 candidate = cache.empty() ? ((1ull << 30) - 1) : cache.back() - 1;
  while (cache.size() <= k) {
    while (!is_prime_u64(candidate)) --candidate;
    cache.push_back(candidate);
    --candidate;
  }
  return cache[k];
}

inline u64 mod_inverse(u64 a, u64 p) {
  long long t = 0, newt = 1;
  long long r = static_cast<long long>(p), newr = static_cast<long long>(a % p);
  while (newr != 0) {
    long long q = r / newr;
    t -= q * newt;
    std::swap(t, newt);
    r -= q * newr;
    std::swap(r, newr);
  }
  if (r != 1) throw Error(ErrorCode::InternalCheck, "non-invertible residue");
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<u64>(t);
}

// Streaming row echelon accumulator over F_p, p < 2^30. Pivot rows are kept
// normalized (< p, unit pivot, zeros before the pivot). Incoming rows are
// uint64 work buffers; elimination is a multiply-add loop with a full
// renormalization every few pivots so products never overflow.
class ModularRref {
 public:
  ModularRref(u64 p, std::size_t width) : p_(p), width_(width) {}

  u64 prime() const { return p_; }
  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }

  // Pivot columns in increasing order.
  std::vector<std::size_t> pivot_columns() const {
    std::vector<std::size_t> cols;
    cols.reserve(rows_.size());
    for (const auto& kv : rows_) cols.push_back(kv.first);
    return cols;
  }

  // Reduces w in place against the stored pivot rows; afterwards w is fully
  // renormalized (< p) with zeros at all pivot columns that were eliminated.
  void reduce(std::vector<u64>& w) const {
    constexpr int kWindow = 8;  // 2^30 + 8 * 2^60 < 2^64
    for (u64& x : w) x %= p_;
    int since_renorm = 0;
    for (const auto& kv : rows_) {
      const std::size_t col = kv.first;
      if (since_renorm == kWindow) {
        for (std::size_t k = col; k < width_; ++k) w[k] %= p_;
        since_renorm = 0;
      }
      u64 c = w[col] % p_;
      if (c == 0) {
        w[col] = 0;
        continue;
      }
      const u64 coef = p_ - c;
      const u32* prow = kv.second.data();
      u64* wp = w.data();
      for (std::size_t k = col; k < width_; ++k) wp[k] += coef * prow[k];
      ++since_renorm;
    }
    for (u64& x : w) x %= p_;
  }

  // Returns the new pivot column, or npos if the row lies in the span.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t insert(std::vector<u64>& w) {
    reduce(w);
    std::size_t piv = npos;
    for (std::size_t k = 0; k < width_; ++k)
      if (w[k] != 0) {
        piv = k;
        break;
      }
    if (piv == npos) return npos;
    const u64 inv = mod_inverse(w[piv], p_);
    std::vector<u32> row(width_, 0);
    for (std::size_t k = piv; k < width_; ++k) row[k] = static_cast<u32>((w[k] % p_) * inv % p_);
    rows_.emplace(piv, std::move(row));
    return piv;
  }

 private:
  u64 p_;
  std::size_t width_;
  std::map<std::size_t, std::vector<u32>> rows_;
};

// Rank of an exact matrix modulo p. Empty when p divides some denominator
// (the prime is unusable and the caller moves on in the sequence).
inline std::optional<std::size_t> modular_matrix_rank(const Matrix& m, u64 p) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (den_divisible(m.at(i, j), p)) return std::nullopt;
  ModularRref acc(p, m.cols());
  std::vector<u64> w(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) w[j] = rat_mod(m.at(i, j), p);
    acc.insert(w);
  }
  return acc.rank();
}

struct MultimodularReport {
  std::size_t rank = 0;
  u64 p1 = 0, p2 = 0;
  bool agreed = false;
  bool exact_fallback = false;
};

// Certified rank: ranks modulo the first two usable primes of the fixed
// sequence must agree; a disagreement falls back to exact fraction-free
// elimination. A modular rank can only undershoot the true rank, never
// exceed it, so agreement across disjoint primes certifies the value.
inline MultimodularReport multimodular_rank_report(const Matrix& m, int threads = 1) {
  MultimodularReport rep;
  std::size_t k = 0;
  std::vector<u64> primes;
  std::vector<std::size_t> ranks;
  auto compute = [&](u64 p) { return modular_matrix_rank(m, p); };
  while (primes.size() < 2) {
    u64 p1 = prime_sequence(k++);
    if (primes.empty() && threads >= 2) {
      // Probe two candidate primes concurrently; selection order stays the
      // canonical sequence order, so results do not depend on scheduling.
      u64 p2 = prime_sequence(k++);
      auto f1 = std::async(std::launch::async, compute, p1);
      auto f2 = std::async(std::launch::async, compute, p2);
      auto r1 = f1.get(), r2 = f2.get();
      if (r1) {
        primes.push_back(p1);
        ranks.push_back(*r1);
      }
      if (r2 && primes.size() < 2) {
        primes.push_back(p2);
        ranks.push_back(*r2);
      }
      continue;
    }
    auto r = compute(p1);
    if (r) {
      primes.push_back(p1);
      ranks.push_back(*r);
    }
  }
  rep.p1 = primes[0];
  rep.p2 = primes[1];
  rep.agreed = ranks[0] == ranks[1];
  if (rep.agreed) {
    rep.rank = ranks[0];
  } else {
    rep.exact_fallback = true;
    rep.rank = bareiss_rank(m);
  }
  return rep;
}

inline std::size_t multimodular_rank(const Matrix& m, int threads = 1) {
  return multimodular_rank_report(m, threads).rank;
}

}  // namespace hpi
