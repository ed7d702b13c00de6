#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "hpi/codimension.hpp"
#include "hpi/evaluation.hpp"
#include "hpi/exponent.hpp"
#include "hpi/group_algebra.hpp"
#include "hpi/hpolynomial.hpp"
#include "hpi/partition.hpp"

namespace hpi {

// True iff f is alternating in each listed variable set and does not vanish
// identically under every basis substitution.  The sets must be disjoint
// subsets of {0, ..., f.n - 1}; a malformed request is the caller's bug.
inline bool verify_witness(const HPolynomial& f, const std::vector<std::vector<int>>& sets,
                           const Algebra& a, const HActionData& act, EvalLimits lim = {}) {
  std::vector<char> seen(f.n, 0);
  for (const auto& s : sets)
    for (int v : s) {
      if (v < 0 || static_cast<std::size_t>(v) >= f.n)
        throw Error(ErrorCode::ValidationError, "witness set names a variable out of range");
      if (seen[v]) throw Error(ErrorCode::ValidationError, "witness sets are not disjoint");
      seen[v] = 1;
    }
  HPolynomial neg = poly_scale(f, Rat(-1));
  for (const auto& s : sets) {
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    // Transpositions of consecutive members generate the symmetric group on
    // the set, so checking those suffices for alternation.
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
      Perm tau = perm_identity(static_cast<int>(f.n));
      std::swap(tau[sorted[i]], tau[sorted[i + 1]]);
      if (!(sn_act(tau, f) == neg)) return false;
    }
  }
  Evaluator ev(a, act, f.n, lim);
  return !ev.is_identity(f);
}

struct VanishingViolation {
  Partition lam;
  std::string kind;    // "multiplicity" or "direct"
  std::string detail;
};

struct VanishingReport {
  std::size_t n = 0;
  std::size_t d = 0;          // PI-exponent of the model
  std::size_t nil_index = 1;  // smallest p with J^p = 0
  std::vector<Partition> constrained;  // shapes forced to have multiplicity zero
  bool multiplicities_checked = false;
  bool direct_checked = false;
  std::vector<VanishingViolation> violations;

  bool ok() const { return violations.empty(); }
};

namespace report_detail {

// Exact evaluation table for all degree-n monomials against all basis
// tuples, stored sparsely.  Only built when rows * tuples stays small.
constexpr std::uint64_t kDirectCellBudget = 1ull << 20;

}  // namespace report_detail

// Cross-checks the vanishing constraint in two independent ways: via the
// computed cocharacter multiplicities, and by exact evaluation of the dual
// Young symmetrizer applied to every basis monomial.  A shape lambda of n is
// constrained when the parts beyond the first d sum to at least the
// nilpotency index of the radical; both checks must then report zero.
inline VanishingReport vanishing_report(const Algebra& a, const std::vector<HOperator>& gens,
                                        std::size_t n, EvalLimits lim = {}) {
  VanishingReport rep;
  rep.n = n;
  ExponentAnalysis an = pi_exponent(a, gens);
  rep.d = an.result.d;
  rep.nil_index = an.rad.index;

  for (const Partition& lam : partitions_of(static_cast<int>(n))) {
    long long tail = 0;
    for (std::size_t i = rep.d; i < lam.size(); ++i) tail += lam[i];
    if (tail >= static_cast<long long>(rep.nil_index)) rep.constrained.push_back(lam);
  }
  if (rep.constrained.empty()) return rep;

  CocharacterResult cc = cocharacter_multiplicities(a, an.action, n, lim);
  rep.multiplicities_checked = true;
  for (const Partition& lam : rep.constrained)
    for (const auto& [mu, m] : cc.mult)
      if (mu == lam && m != 0)
        rep.violations.push_back(
            {lam, "multiplicity", "m = " + std::to_string(m)});

  Evaluator ev(a, an.action, n, lim);
  std::uint64_t rows = ev.num_rows();
  std::uint64_t tuples = ev.num_tuples();
  if (rows * tuples > report_detail::kDirectCellBudget) return rep;
  rep.direct_checked = true;

  std::uint64_t mpow = rows / factorial_u64(static_cast<int>(n));
  std::vector<std::vector<std::pair<std::size_t, Rat>>> val(rows * tuples);
  for (std::uint64_t w = 0; w < rows; ++w) {
    HMonomial mono = monomial_from_index(w, n, ev.op_count());
    for (std::uint64_t t = 0; t < tuples; ++t) {
      Vec v = ev.eval_monomial(mono, t);
      auto& cell = val[w * tuples + t];
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!is_zero(v[k])) cell.emplace_back(k, v[k]);
    }
  }

  std::uint64_t nfact = factorial_u64(static_cast<int>(n));
  for (const Partition& lam : rep.constrained) {
    GroupAlgebraElement estar = dual_young_symmetrizer(Tableau(lam));
    // rank(pi . sigma) for every sigma, shared across the operator digits.
    std::vector<std::vector<std::uint64_t>> tgt(nfact);
    std::vector<Rat> coeff;
    coeff.reserve(estar.terms.size());
    for (const auto& [pi, c] : estar.terms) coeff.push_back(c);
    for (std::uint64_t sr = 0; sr < nfact; ++sr) {
      Perm sigma = perm_unrank(static_cast<int>(n), sr);
      auto& row = tgt[sr];
      row.reserve(estar.terms.size());
      for (const auto& [pi, c] : estar.terms) row.push_back(perm_rank(perm_compose(pi, sigma)));
    }
    bool bad = false;
    for (std::uint64_t w = 0; w < rows && !bad; ++w) {
      std::uint64_t sr = w / mpow, ops = w % mpow;
      const auto& row = tgt[sr];
      for (std::uint64_t t = 0; t < tuples && !bad; ++t) {
        Vec acc = vec_zero(a.dim());
        bool touched = false;
        for (std::size_t j = 0; j < row.size(); ++j) {
          const auto& cell = val[(row[j] * mpow + ops) * tuples + t];
          for (const auto& [k, v] : cell) {
            acc[k] += coeff[j] * v;
            touched = true;
          }
        }
        if (touched && !vec_is_zero(acc)) {
          rep.violations.push_back(
              {lam, "direct",
               "symmetrized " + monomial_str(monomial_from_index(w, n, ev.op_count()), ev.op_names()) +
                   " survives at tuple " + std::to_string(t)});
          bad = true;  // one witness per shape keeps the report short
        }
      }
    }
  }
  return rep;
}

struct GrowthRow {
  std::size_t n = 0;
  bool computed = false;
  std::string skip_reason;  // set when the row hit a size limit
  std::uint64_t c = 0;
  long long colength = 0;
  bool have_ratio = false;
  Rat ratio;          // c_n / c_{n-1} when both neighbours computed and nonzero
  double root = 0.0;  // c_n^(1/n), display only
  std::string flag;   // ok | skip | FAIL | SIZE_LIMIT
};

struct GrowthTable {
  std::size_t d = 0;
  bool nilpotent = false;
  int band = 3;
  std::vector<GrowthRow> rows;
  bool sandwich_ok = true;  // every applicable row stayed inside the band
};

// Codimension growth over n = 1..n_max with the polynomial band check
// d^n / n^band <= c_n <= n^band * d^n, applied for n >= 3 and d >= 2.
// Rows that exceed the evaluation budget are kept as explicit skips.
inline GrowthTable growth_report(const Algebra& a, const std::vector<HOperator>& gens,
                                 std::size_t n_max, int band = 3, EvalLimits lim = {}) {
  GrowthTable table;
  table.band = band;
  ExponentAnalysis an = pi_exponent(a, gens);
  table.d = an.result.d;
  table.nilpotent = an.result.nilpotent;

  for (std::size_t n = 1; n <= n_max; ++n) {
    GrowthRow row;
    row.n = n;
    try {
      CocharacterResult cc = cocharacter_multiplicities(a, an.action, n, lim);
      row.computed = true;
      row.c = cc.c;
      row.colength = cc.colength;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SizeLimit) throw;
      row.skip_reason = e.what();
      row.flag = "SIZE_LIMIT";
      table.rows.push_back(std::move(row));
      continue;
    }
    if (!table.rows.empty()) {
      const GrowthRow& prev = table.rows.back();
      if (prev.computed && prev.n + 1 == n && prev.c > 0) {
        row.have_ratio = true;
        row.ratio = Rat(Int(static_cast<unsigned long>(row.c))) /
                    Rat(Int(static_cast<unsigned long>(prev.c)));
      }
    }
    row.root = std::pow(static_cast<double>(row.c), 1.0 / static_cast<double>(n));
    if (n < 3 || table.d <= 1) {
      row.flag = "skip";
    } else {
      Int dn, nb;
      mpz_ui_pow_ui(dn.get_mpz_t(), static_cast<unsigned long>(table.d),
                    static_cast<unsigned long>(n));
      mpz_ui_pow_ui(nb.get_mpz_t(), static_cast<unsigned long>(n),
                    static_cast<unsigned long>(band));
      Int cn(static_cast<unsigned long>(row.c));
      bool lower = cn * nb >= dn;
      bool upper = cn <= nb * dn;
      row.flag = (lower && upper) ? "ok" : "FAIL";
      if (!(lower && upper)) table.sandwich_ok = false;
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

inline std::string growth_csv(const GrowthTable& t) {
  std::string out = "n,c,colength,ratio,root,d,flags\n";
  char buf[64];
  for (const GrowthRow& r : t.rows) {
    out += std::to_string(r.n);
    if (r.computed) {
      out += "," + std::to_string(r.c) + "," + std::to_string(r.colength) + ",";
      if (r.have_ratio) out += rat_str(r.ratio);
      std::snprintf(buf, sizeof buf, ",%.6f", r.root);
      out += buf;
    } else {
      out += ",,,,";
    }
    out += "," + std::to_string(t.d) + "," + r.flag + "\n";
  }
  return out;
}

}  // namespace hpi
