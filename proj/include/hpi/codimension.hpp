#pragma once

#include <cstdint>
#include <future>
#include <utility>
#include <vector>

#include "hpi/characters.hpp"
#include "hpi/evaluation.hpp"
#include "hpi/partition.hpp"

namespace hpi {

struct RankCertificate {
  std::size_t c = 0;
  u64 p1 = 0, p2 = 0;
  bool agreed = false;
  bool exact_fallback = false;
};

inline std::pair<u64, u64> pick_primes(const Evaluator& ev) {
  u64 first = 0;
  for (std::size_t k = 0; k < 10000; ++k) {
    u64 p = prime_sequence(k);
    if (!ev.prime_usable(p)) continue;
    if (first == 0) {
      first = p;
    } else {
      return {first, p};
    }
  }
  throw Error(ErrorCode::InternalCheck, "no usable primes found");
}

namespace codim_detail {

inline std::pair<Evaluator::RefData, Evaluator::RefData> two_prime_refs(const Evaluator& ev,
                                                                        u64 p1, u64 p2,
                                                                        int threads) {
  if (threads >= 2) {
    auto second = std::async(std::launch::async, [&]() { return ev.modular_ref(p2); });
    Evaluator::RefData r1 = ev.modular_ref(p1);
    return {std::move(r1), second.get()};
  }
  return {ev.modular_ref(p1), ev.modular_ref(p2)};
}

}  // namespace codim_detail

// The codimension as the rank of the evaluation matrix, certified by two
// independent primes. A modular rank can only fall below the rational rank,
// so agreement of two 30-bit primes is accepted; disagreement falls back to
// exact fraction-free elimination when the matrix fits the exact budget.
inline RankCertificate codimension_rank(const Algebra& a, const HActionData& act, std::size_t n,
                                        EvalLimits lim = {}) {
  Evaluator ev(a, act, n, lim);
  auto [p1, p2] = pick_primes(ev);
  auto [r1, r2] = codim_detail::two_prime_refs(ev, p1, p2, lim.threads);
  if (r1.rank == r2.rank) return {r1.rank, p1, p2, true, false};
  if (ev.num_rows() * ev.num_cols() <= lim.max_exact_cells)
    return {bareiss_rank(ev.exact_matrix()), p1, p2, false, true};
  throw Error(ErrorCode::SizeLimit,
              "modular ranks disagree and the exact fallback exceeds its budget");
}

struct CocharacterResult {
  std::size_t c = 0;
  long long colength = 0;
  std::vector<std::pair<Partition, long long>> mult;  // ordered as partitions_of(n)
  RankCertificate cert;
};

// Multiplicities of the irreducible characters in the character of the
// evaluation image. Class traces are computed modulo two primes and lifted;
// the multiplicities must come out as nonnegative integers and recombine to
// the codimension, which cross-validates the whole pipeline.
inline CocharacterResult cocharacter_multiplicities(const Algebra& a, const HActionData& act,
                                                    std::size_t n, EvalLimits lim = {}) {
  Evaluator ev(a, act, n, lim);
  auto [p1, p2] = pick_primes(ev);
  auto [r1, r2] = codim_detail::two_prime_refs(ev, p1, p2, lim.threads);
  if (r1.rank != r2.rank)
    throw Error(ErrorCode::SizeLimit, "modular ranks disagree; no certified rank available");

  const std::vector<Partition> classes = partitions_of(static_cast<int>(n));
  std::vector<Perm> reps;
  for (const Partition& mu : classes) reps.push_back(perm_from_cycle_type(static_cast<int>(n), mu));

  std::vector<long long> t1, t2;
  if (lim.threads >= 2) {
    auto second =
        std::async(std::launch::async, [&]() { return ev.class_traces(p2, r2, reps); });
    t1 = ev.class_traces(p1, r1, reps);
    t2 = second.get();
  } else {
    t1 = ev.class_traces(p1, r1, reps);
    t2 = ev.class_traces(p2, r2, reps);
  }
  if (t1 != t2) throw Error(ErrorCode::InternalCheck, "class traces disagree between primes");
  // the identity class (cycle type 1^n) is the last partition in the order
  if (!t1.empty() && t1.back() != static_cast<long long>(r1.rank))
    throw Error(ErrorCode::InternalCheck, "identity trace differs from the rank");

  CocharacterResult out;
  out.c = r1.rank;
  out.cert = {r1.rank, p1, p2, true, false};
  Int nfact = 1;
  for (std::size_t k = 2; k <= n; ++k) nfact *= static_cast<unsigned long>(k);
  Int recombined = 0;
  for (const Partition& lam : partitions_of(static_cast<int>(n))) {
    Int acc = 0;
    for (std::size_t ci = 0; ci < classes.size(); ++ci)
      acc += class_size(classes[ci]) * Int(static_cast<long>(irreducible_character(lam, classes[ci]))) *
             Int(static_cast<long>(t1[ci]));
    Int q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), acc.get_mpz_t(), nfact.get_mpz_t());
    if (rem != 0)
      throw Error(ErrorCode::InternalCheck,
                  "multiplicity is not an integer at " + partition_str(lam));
    if (q < 0)
      throw Error(ErrorCode::InternalCheck, "negative multiplicity at " + partition_str(lam));
    long long mv = static_cast<long long>(q.get_si());
    out.mult.emplace_back(lam, mv);
    out.colength += mv;
    recombined += Int(static_cast<long>(mv)) * hook_dimension(lam);
  }
  if (recombined != Int(static_cast<unsigned long>(out.c)))
    throw Error(ErrorCode::InternalCheck, "multiplicities do not recombine to the codimension");
  return out;
}

// Exact kernel of the evaluation map: a basis of the multilinear identities
// of degree n. Exact-arithmetic path, intended for small instances.
inline std::vector<HPolynomial> identity_basis(const Algebra& a, const HActionData& act,
                                               std::size_t n, EvalLimits lim = {}) {
  Evaluator ev(a, act, n, lim);
  Matrix m = ev.exact_matrix();
  std::vector<Vec> ker = kernel_basis(m.transposed());
  std::vector<HPolynomial> out;
  for (const Vec& v : ker) {
    HPolynomial f;
    f.n = n;
    f.m = ev.op_count();
    for (std::size_t w = 0; w < v.size(); ++w)
      if (!is_zero(v[w])) f.add(static_cast<std::uint64_t>(w), v[w]);
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace hpi
