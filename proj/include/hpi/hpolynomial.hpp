#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hpi/errors.hpp"
#include "hpi/group_algebra.hpp"
#include "hpi/perm.hpp"
#include "hpi/rational.hpp"

namespace hpi {

// A multilinear monomial over n variables with one operator label per
// position: the word op[0](x_{sigma(0)+1}) op[1](x_{sigma(1)+1}) ... read
// left to right. Operator labels index a fixed operator basis of size m.
struct HMonomial {
  Perm sigma;
  std::vector<int> ops;
};

inline std::uint64_t pow_u64(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

inline std::uint64_t monomial_count(std::size_t n, std::size_t m) {
  return factorial_u64(n) * pow_u64(m, n);
}

inline std::uint64_t monomial_index(const HMonomial& w, std::size_t m) {
  const std::size_t n = w.sigma.size();
  std::uint64_t idx = perm_rank(w.sigma);
  for (std::size_t t = 0; t < n; ++t) idx = idx * m + static_cast<std::uint64_t>(w.ops[t]);
  return idx;
}

inline HMonomial monomial_from_index(std::uint64_t idx, std::size_t n, std::size_t m) {
  HMonomial w;
  w.ops.assign(n, 0);
  for (std::size_t t = n; t-- > 0;) {
    w.ops[t] = static_cast<int>(idx % m);
    idx /= m;
  }
  w.sigma = perm_unrank(static_cast<int>(n), idx);
  return w;
}

// Sparse rational combination of multilinear monomials, fixed (n, m).
struct HPolynomial {
  std::size_t n = 0;
  std::size_t m = 1;
  std::map<std::uint64_t, Rat> terms;

  void add(std::uint64_t idx, const Rat& c) {
    if (is_zero(c)) return;
    Rat& slot = terms[idx];
    slot += c;
    if (is_zero(slot)) terms.erase(idx);
  }
  void add(const HMonomial& w, const Rat& c) { add(monomial_index(w, m), c); }
  bool is_zero_poly() const { return terms.empty(); }
  bool operator==(const HPolynomial& o) const { return n == o.n && m == o.m && terms == o.terms; }
};

inline HPolynomial poly_scale(const HPolynomial& f, const Rat& c) {
  HPolynomial out;
  out.n = f.n;
  out.m = f.m;
  if (is_zero(c)) return out;
  for (const auto& [idx, v] : f.terms) out.terms[idx] = v * c;
  return out;
}

inline HPolynomial poly_add(const HPolynomial& f, const HPolynomial& g) {
  if (f.n != g.n || f.m != g.m)
    throw Error(ErrorCode::ValidationError, "polynomial contexts differ");
  HPolynomial out = f;
  for (const auto& [idx, v] : g.terms) out.add(idx, v);
  return out;
}

// Variable substitution x_i -> x_{tau(i)}: the word positions keep their
// operators, the monomial permutation becomes tau o sigma.
inline HPolynomial sn_act(const Perm& tau, const HPolynomial& f) {
  HPolynomial out;
  out.n = f.n;
  out.m = f.m;
  const std::uint64_t mpow = pow_u64(f.m, f.n);
  for (const auto& [idx, c] : f.terms) {
    Perm sigma = perm_unrank(static_cast<int>(f.n), idx / mpow);
    std::uint64_t nidx = perm_rank(perm_compose(tau, sigma)) * mpow + idx % mpow;
    out.add(nidx, c);
  }
  return out;
}

inline HPolynomial group_act(const GroupAlgebraElement& g, const HPolynomial& f) {
  HPolynomial out;
  out.n = f.n;
  out.m = f.m;
  for (const auto& [tau, c] : g.terms) {
    HPolynomial part = sn_act(tau, f);
    for (const auto& [idx, v] : part.terms) out.add(idx, v * c);
  }
  return out;
}

// Sum over all permutations of the listed variable indices (0-based), with
// sign: the alternation operator in those variables.
inline HPolynomial alternate(const HPolynomial& f, const std::vector<int>& vars) {
  std::vector<int> arrangement(vars);
  std::sort(arrangement.begin(), arrangement.end());
  const std::vector<int> base = arrangement;
  HPolynomial out;
  out.n = f.n;
  out.m = f.m;
  do {
    Perm tau = perm_identity(static_cast<int>(f.n));
    for (std::size_t i = 0; i < base.size(); ++i)
      tau[static_cast<std::size_t>(base[i])] = arrangement[i];
    HPolynomial part = sn_act(tau, f);
    Rat sign(perm_sign(tau));
    for (const auto& [idx, v] : part.terms) out.add(idx, v * sign);
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  return out;
}

inline std::string monomial_str(const HMonomial& w, const std::vector<std::string>& op_names) {
  std::string s;
  for (std::size_t t = 0; t < w.sigma.size(); ++t) {
    if (t) s += " ";
    s += "x" + std::to_string(w.sigma[t] + 1);
    const std::string& op = op_names[static_cast<std::size_t>(w.ops[t])];
    if (op != "id") s += "[" + op + "]";
  }
  return s;
}

inline std::string polynomial_str(const HPolynomial& f, const std::vector<std::string>& op_names) {
  if (f.terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [idx, c] : f.terms) {
    HMonomial w = monomial_from_index(idx, f.n, f.m);
    std::string cs = rat_str(c);
    if (first) {
      if (cs == "1") {
      } else if (cs == "-1") {
        s += "-";
      } else {
        s += cs + " ";
      }
      first = false;
    } else if (cs[0] == '-') {
      s += (cs == "-1") ? " - " : " - " + cs.substr(1) + " ";
    } else {
      s += (cs == "1") ? " + " : " + " + cs + " ";
    }
    s += monomial_str(w, op_names);
  }
  return s;
}

}  // namespace hpi
