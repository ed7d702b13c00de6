#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

#include "hpi/algebra.hpp"
#include "hpi/haction.hpp"
#include "hpi/hpolynomial.hpp"
#include "hpi/matrix.hpp"
#include "hpi/modular.hpp"

namespace hpi {

struct EvalLimits {
  std::uint64_t max_rows = 1'000'000;        // monomials: n! * m^n
  std::uint64_t max_cols = 4'000'000;        // substitution columns: d^n * d
  std::uint64_t max_exact_cells = 1ull << 22;  // exact-arithmetic path budget
  int threads = 2;
};

// The multilinear evaluation map of degree n: monomials (one operator label
// per position) evaluated on all basis substitution tuples. Rows index
// monomials, columns index (tuple, output coordinate) pairs; the matrix rank
// is the codimension because a multilinear map vanishes identically iff it
// vanishes on basis tuples.
class Evaluator {
 public:
  Evaluator(const Algebra& a, const HActionData& act, std::size_t n, EvalLimits lim = {})
      : a_(a), n_(n), lim_(lim) {
    if (n_ == 0 || n_ > 12)
      throw Error(ErrorCode::SizeLimit, "degree out of the supported range");
    d_ = a.dim();
    if (d_ == 0) throw Error(ErrorCode::ValidationError, "evaluation over the zero algebra");
    m_ = act.zeta.size();
    rows_ = monomial_count(n_, m_);
    tuples_ = pow_u64(d_, n_);
    cols_ = tuples_ * d_;
    if (rows_ > lim_.max_rows)
      throw Error(ErrorCode::SizeLimit, "monomial count exceeds the row budget");
    if (cols_ > lim_.max_cols)
      throw Error(ErrorCode::SizeLimit, "substitution count exceeds the column budget");
    powd_.assign(n_, 1);
    for (std::size_t i = 1; i < n_; ++i) powd_[i] = powd_[i - 1] * d_;

    denlcm_ = 1;
    app_exact_.assign(m_, std::vector<Vec>(d_));
    for (std::size_t z = 0; z < m_; ++z) {
      op_names_.push_back(act.zeta[z].name);
      for (std::size_t b = 0; b < d_; ++b) {
        app_exact_[z][b] = mat_apply(act.zeta[z].mat, a.basis_vec(b));
        for (const Rat& v : app_exact_[z][b])
          mpz_lcm(denlcm_.get_mpz_t(), denlcm_.get_mpz_t(), v.get_den().get_mpz_t());
      }
    }
    for (std::size_t i = 0; i < d_; ++i)
      for (std::size_t j = 0; j < d_; ++j)
        for (const auto& [k, v] : a.basis_product(i, j))
          mpz_lcm(denlcm_.get_mpz_t(), denlcm_.get_mpz_t(), v.get_den().get_mpz_t());
  }

  std::size_t degree() const { return n_; }
  std::size_t op_count() const { return m_; }
  std::size_t dim() const { return d_; }
  std::uint64_t num_rows() const { return rows_; }
  std::uint64_t num_tuples() const { return tuples_; }
  std::uint64_t num_cols() const { return cols_; }
  const std::vector<std::string>& op_names() const { return op_names_; }

  std::size_t tuple_digit(std::uint64_t t, std::size_t var) const {
    return static_cast<std::size_t>((t / powd_[n_ - 1 - var]) % d_);
  }

  Vec eval_monomial(const HMonomial& w, std::uint64_t tuple) const {
    Vec cur = app_exact_[static_cast<std::size_t>(w.ops[0])]
                        [tuple_digit(tuple, static_cast<std::size_t>(w.sigma[0]))];
    for (std::size_t t = 1; t < n_ && !vec_is_zero(cur); ++t)
      cur = a_.multiply(cur, app_exact_[static_cast<std::size_t>(w.ops[t])]
                                       [tuple_digit(tuple, static_cast<std::size_t>(w.sigma[t]))]);
    return cur;
  }

  Vec eval_poly(const HPolynomial& f, std::uint64_t tuple) const {
    Vec acc = vec_zero(d_);
    for (const auto& [idx, c] : f.terms) {
      HMonomial w = monomial_from_index(idx, n_, m_);
      vec_axpy(acc, c, eval_monomial(w, tuple));
    }
    return acc;
  }

  bool is_identity(const HPolynomial& f) const {
    if (f.n != n_ || f.m != m_)
      throw Error(ErrorCode::ValidationError, "polynomial context does not match the evaluator");
    for (std::uint64_t t = 0; t < tuples_; ++t)
      if (!vec_is_zero(eval_poly(f, t))) return false;
    return true;
  }

  Vec exact_row(std::uint64_t widx) const {
    HMonomial w = monomial_from_index(widx, n_, m_);
    Vec row(cols_, Rat(0));
    for (std::uint64_t t = 0; t < tuples_; ++t) {
      Vec v = eval_monomial(w, t);
      for (std::size_t k = 0; k < d_; ++k) row[t * d_ + k] = v[k];
    }
    return row;
  }

  Matrix exact_matrix() const {
    if (rows_ * cols_ > lim_.max_exact_cells)
      throw Error(ErrorCode::SizeLimit, "exact evaluation matrix exceeds its budget");
    Matrix m(rows_, cols_);
    for (std::uint64_t w = 0; w < rows_; ++w) {
      Vec row = exact_row(w);
      for (std::uint64_t c = 0; c < cols_; ++c) m.at(w, c) = row[c];
    }
    return m;
  }

  bool prime_usable(u64 p) const {
    return mpz_divisible_ui_p(denlcm_.get_mpz_t(), static_cast<unsigned long>(p)) == 0;
  }

  // Certified independent rows and columns: monomials[i] and columns[i] are
  // paired pivots, and the rank x rank minor they select is invertible mod p.
  struct RefData {
    std::size_t rank = 0;
    bool streamed_rows = true;
    std::vector<std::uint64_t> monomials;
    std::vector<std::uint64_t> columns;
  };

  RefData modular_ref(u64 p) const {
    const ModTables& tb = tables_for(p);
    RefData rd;
    const std::size_t maxrank = static_cast<std::size_t>(std::min(rows_, cols_));
    if (rows_ >= cols_) {
      rd.streamed_rows = true;
      ModularRref acc(p, static_cast<std::size_t>(cols_));
      std::vector<u64> work(cols_);
      for (std::uint64_t widx = 0; widx < rows_; ++widx) {
        modular_row(widx, tb, p, work);
        std::size_t piv = acc.insert(work);
        if (piv != ModularRref::npos) {
          rd.monomials.push_back(widx);
          rd.columns.push_back(piv);
          if (acc.rank() == maxrank) break;
        }
      }
      rd.rank = acc.rank();
    } else {
      rd.streamed_rows = false;
      ModularRref acc(p, static_cast<std::size_t>(rows_));
      std::vector<u64> slab(rows_ * d_);
      std::vector<u64> work(rows_);
      for (std::uint64_t t = 0; t < tuples_ && acc.rank() < maxrank; ++t) {
        modular_slab(t, tb, p, slab);
        for (std::size_t k = 0; k < d_; ++k) {
          for (std::uint64_t r = 0; r < rows_; ++r) work[r] = slab[r * d_ + k];
          std::size_t piv = acc.insert(work);
          if (piv != ModularRref::npos) {
            rd.columns.push_back(t * d_ + k);
            rd.monomials.push_back(piv);
            if (acc.rank() == maxrank) break;
          }
        }
      }
      rd.rank = acc.rank();
    }
    return rd;
  }

  // Traces of the class representatives acting on the image of the
  // evaluation map, lifted to integers. With W the pivot minor and V the
  // same columns of the permuted pivot rows, the action matrix in the image
  // basis is V W^{-1}; its trace is bounded by the rank, so the symmetric
  // lift from a 30-bit prime is exact.
  std::vector<long long> class_traces(u64 p, const RefData& ref,
                                      const std::vector<Perm>& reps) const {
    const ModTables& tb = tables_for(p);
    const std::size_t r = ref.rank;
    std::vector<long long> out;
    if (r == 0) {
      out.assign(reps.size(), 0);
      return out;
    }
    std::vector<u64> rowbuf(cols_);
    std::vector<u64> winv(r * r);
    {
      std::vector<u64> w(r * r);
      for (std::size_t i = 0; i < r; ++i) {
        modular_row(ref.monomials[i], tb, p, rowbuf);
        for (std::size_t j = 0; j < r; ++j) w[i * r + j] = rowbuf[ref.columns[j]];
      }
      winv = invert_mod(w, r, p);
    }
    const std::uint64_t mpow = pow_u64(m_, n_);
    for (const Perm& tau : reps) {
      u64 trace = 0;
      for (std::size_t i = 0; i < r; ++i) {
        const std::uint64_t widx = ref.monomials[i];
        Perm sigma = perm_unrank(static_cast<int>(n_), widx / mpow);
        std::uint64_t pidx = perm_rank(perm_compose(tau, sigma)) * mpow + widx % mpow;
        modular_row(pidx, tb, p, rowbuf);
        u64 acc = 0;
        for (std::size_t j = 0; j < r; ++j)
          acc = (acc + rowbuf[ref.columns[j]] * winv[j * r + i]) % p;
        trace = (trace + acc) % p;
      }
      long long lifted = (trace <= p / 2) ? static_cast<long long>(trace)
                                          : static_cast<long long>(trace) - static_cast<long long>(p);
      if (lifted < -static_cast<long long>(r) || lifted > static_cast<long long>(r))
        throw Error(ErrorCode::InternalCheck, "class trace exceeds the rank bound");
      out.push_back(lifted);
    }
    return out;
  }

 private:
  struct ModTables {
    // sc[i*d+j] lists (k, value) for the product of basis i and j
    std::vector<std::vector<std::pair<u32, u32>>> sc;
    // app[z*d+b] lists (i, value) for operator z applied to basis b
    std::vector<std::vector<std::pair<u32, u32>>> app;
  };

  const ModTables& tables_for(u64 p) const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.find(p);
    if (it != cache_.end()) return it->second;
    if (!prime_usable(p))
      throw Error(ErrorCode::InternalCheck, "prime divides an input denominator");
    ModTables tb;
    tb.sc.resize(d_ * d_);
    for (std::size_t i = 0; i < d_; ++i)
      for (std::size_t j = 0; j < d_; ++j)
        for (const auto& [k, v] : a_.basis_product(i, j)) {
          u64 mv = rat_mod(v, p);
          if (mv != 0) tb.sc[i * d_ + j].emplace_back(static_cast<u32>(k), static_cast<u32>(mv));
        }
    tb.app.resize(m_ * d_);
    for (std::size_t z = 0; z < m_; ++z)
      for (std::size_t b = 0; b < d_; ++b)
        for (std::size_t i = 0; i < d_; ++i) {
          u64 mv = rat_mod(app_exact_[z][b][i], p);
          if (mv != 0) tb.app[z * d_ + b].emplace_back(static_cast<u32>(i), static_cast<u32>(mv));
        }
    return cache_.emplace(p, std::move(tb)).first->second;
  }

  // cur (dense, reduced) times the sparse operator image, through the
  // structure constants; accumulation stays below 2^43 for d <= 32.
  void mod_step(const std::vector<u64>& cur, const std::vector<std::pair<u32, u32>>& app,
                const ModTables& tb, u64 p, std::vector<u64>& next) const {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t i = 0; i < d_; ++i) {
      if (cur[i] == 0) continue;
      for (const auto& [j, av] : app) {
        const u64 t = cur[i] * av % p;
        if (t == 0) continue;
        for (const auto& [k, c] : tb.sc[i * d_ + j]) next[k] += t * c % p;
      }
    }
    for (std::size_t k = 0; k < d_; ++k) next[k] %= p;
  }

  void modular_row(std::uint64_t widx, const ModTables& tb, u64 p, std::vector<u64>& out) const {
    HMonomial w = monomial_from_index(widx, n_, m_);
    std::vector<u64> cur(d_), next(d_);
    for (std::uint64_t t = 0; t < tuples_; ++t) {
      std::fill(cur.begin(), cur.end(), 0);
      for (const auto& [i, v] :
           tb.app[static_cast<std::size_t>(w.ops[0]) * d_ +
                  tuple_digit(t, static_cast<std::size_t>(w.sigma[0]))])
        cur[i] = v;
      for (std::size_t pos = 1; pos < n_; ++pos) {
        bool zero = true;
        for (std::size_t i = 0; i < d_; ++i)
          if (cur[i] != 0) {
            zero = false;
            break;
          }
        if (zero) break;
        mod_step(cur,
                 tb.app[static_cast<std::size_t>(w.ops[pos]) * d_ +
                        tuple_digit(t, static_cast<std::size_t>(w.sigma[pos]))],
                 tb, p, next);
        std::swap(cur, next);
      }
      for (std::size_t k = 0; k < d_; ++k) out[t * d_ + k] = cur[k];
    }
  }

  // All rows at one substitution tuple, sharing operator-prefix products.
  void modular_slab(std::uint64_t t, const ModTables& tb, u64 p, std::vector<u64>& slab) const {
    std::vector<std::vector<u64>> buf(n_ + 1, std::vector<u64>(d_));
    const std::uint64_t nperm = factorial_u64(n_);
    for (std::uint64_t srank = 0; srank < nperm; ++srank) {
      Perm sigma = perm_unrank(static_cast<int>(n_), srank);
      std::vector<std::size_t> digit(n_);
      for (std::size_t pos = 0; pos < n_; ++pos)
        digit[pos] = tuple_digit(t, static_cast<std::size_t>(sigma[pos]));
      auto rec = [&](auto&& self, std::size_t pos, std::uint64_t prefix_idx) -> void {
        if (pos == n_) {
          for (std::size_t k = 0; k < d_; ++k) slab[prefix_idx * d_ + k] = buf[pos][k];
          return;
        }
        for (std::size_t z = 0; z < m_; ++z) {
          const auto& app = tb.app[z * d_ + digit[pos]];
          if (pos == 0) {
            std::fill(buf[1].begin(), buf[1].end(), 0);
            for (const auto& [i, v] : app) buf[1][i] = v;
          } else {
            mod_step(buf[pos], app, tb, p, buf[pos + 1]);
          }
          self(self, pos + 1, prefix_idx * m_ + z);
        }
      };
      rec(rec, 0, srank);
    }
  }

  const Algebra& a_;
  std::size_t n_;
  EvalLimits lim_;
  std::size_t d_ = 0;
  std::size_t m_ = 0;
  std::uint64_t rows_ = 0, tuples_ = 0, cols_ = 0;
  std::vector<std::uint64_t> powd_;
  std::vector<std::vector<Vec>> app_exact_;
  std::vector<std::string> op_names_;
  Int denlcm_;
  mutable std::mutex cache_mutex_;
  mutable std::map<u64, ModTables> cache_;

  static std::vector<u64> invert_mod(const std::vector<u64>& w, std::size_t r, u64 p) {
    std::vector<u64> a(w);
    std::vector<u64> inv(r * r, 0);
    for (std::size_t i = 0; i < r; ++i) inv[i * r + i] = 1;
    for (std::size_t col = 0; col < r; ++col) {
      std::size_t piv = col;
      while (piv < r && a[piv * r + col] % p == 0) ++piv;
      if (piv == r) throw Error(ErrorCode::InternalCheck, "pivot minor is singular");
      if (piv != col)
        for (std::size_t k = 0; k < r; ++k) {
          std::swap(a[piv * r + k], a[col * r + k]);
          std::swap(inv[piv * r + k], inv[col * r + k]);
        }
      const u64 s = mod_inverse(a[col * r + col] % p, p);
      for (std::size_t k = 0; k < r; ++k) {
        a[col * r + k] = a[col * r + k] % p * s % p;
        inv[col * r + k] = inv[col * r + k] % p * s % p;
      }
      for (std::size_t row = 0; row < r; ++row) {
        if (row == col) continue;
        const u64 c = a[row * r + col] % p;
        if (c == 0) continue;
        const u64 nc = p - c;
        for (std::size_t k = 0; k < r; ++k) {
          a[row * r + k] = (a[row * r + k] + nc * a[col * r + k]) % p;
          inv[row * r + k] = (inv[row * r + k] + nc * inv[col * r + k]) % p;
        }
      }
    }
    return inv;
  }
};

}  // namespace hpi
