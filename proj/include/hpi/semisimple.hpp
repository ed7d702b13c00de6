#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "hpi/algebra.hpp"
#include "hpi/matrix.hpp"
#include "hpi/radical.hpp"
#include "hpi/subspace.hpp"

namespace hpi {

// Characteristic polynomial by the Faddeev-LeVerrier recurrence; returned
// monic, coeffs[k] multiplying x^k.
inline std::vector<Rat> char_poly(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::ValidationError, "char poly of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = 1;
  Matrix mk = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = mat_mul(m, mk);
    Rat ck = -trace(mk) / Rat(static_cast<long>(k));
    c[n - k] = ck;
    for (std::size_t i = 0; i < n; ++i) mk.at(i, i) += ck;
  }
  return c;
}

// All rational roots of a rational polynomial, exactly. Denominators are
// cleared and the polynomial monicized by y = a_n x, after which every
// rational root is an integer within the Cauchy bound and divides the
// constant term. The scan is complete for rational roots; irrational or
// complex roots are simply absent from the result.
inline std::vector<Rat> rational_roots(std::vector<Rat> coeffs) {
  while (!coeffs.empty() && is_zero(coeffs.back())) coeffs.pop_back();
  if (coeffs.size() <= 1) return {};
  const std::size_t deg = coeffs.size() - 1;
  Int lcm = 1;
  for (const Rat& c : coeffs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Int> a(deg + 1);
  for (std::size_t k = 0; k <= deg; ++k) {
    Rat t = coeffs[k] * Rat(lcm);
    a[k] = t.get_num();
  }
  const Int lead = a[deg];
  // q[k] = a[k] * lead^(deg-1-k) for k < deg, q[deg] = 1: monic in y = lead*x
  std::vector<Int> q(deg + 1);
  q[deg] = 1;
  Int powl = 1;
  for (std::size_t k = deg; k-- > 0;) {
    q[k] = a[k] * powl;
    powl *= lead;
  }
  std::vector<Rat> roots;
  std::size_t zero_strip = 0;
  while (zero_strip < deg && q[zero_strip] == 0) ++zero_strip;
  if (zero_strip > 0) roots.push_back(Rat(0));
  std::vector<Int> qq(q.begin() + static_cast<long>(zero_strip), q.end());
  const std::size_t d2 = qq.size() - 1;
  if (d2 > 0) {
    Int bound = 0;
    for (std::size_t k = 0; k < d2; ++k) {
      Int v = abs(qq[k]);
      if (v > bound) bound = v;
    }
    bound += 1;
    if (bound > 4000000)
      throw Error(ErrorCode::SizeLimit, "eigenvalue scan bound exceeds the configured budget");
    const long b = static_cast<long>(bound.get_si());
    const Int& constant = qq[0];
    for (long y = -b; y <= b; ++y) {
      if (y == 0) continue;
      if (mpz_divisible_ui_p(constant.get_mpz_t(), static_cast<unsigned long>(y < 0 ? -y : y)) == 0)
        continue;
      Int val = 0;
      for (std::size_t k = d2 + 1; k-- > 0;) val = val * y + qq[k];
      if (val == 0) {
        Rat r(Int(y), lead);
        r.canonicalize();
        roots.push_back(r);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

struct SemisimpleDecomposition {
  std::vector<Subspace> components;  // two-sided ideals, decreasing dim, ties by first pivot
  std::vector<Vec> idempotents;      // primitive central idempotents, same order
};

// Decomposition of a semisimple algebra into simple two-sided ideals via the
// common eigenspaces of multiplication operators on the center. Fails with
// SPLIT_FAILURE when the center has irrational spectrum or a common
// eigenspace refuses to split to dimension one.
inline SemisimpleDecomposition simple_decomposition(const Algebra& s) {
  SemisimpleDecomposition out;
  if (s.dim() == 0) return out;
  if (jacobson_radical(s).radical.dim() != 0)
    throw Error(ErrorCode::ValidationError, "simple decomposition requires semisimple input");

  Subspace z = center(s);
  const std::size_t zd = z.dim();
  // blocks live in center coordinates
  std::vector<Subspace> blocks = {Subspace::full(zd)};
  for (std::size_t t = 0; t < zd; ++t) {
    Vec zt = z.basis_vector(t);
    Matrix mt(zd, zd);
    for (std::size_t scol = 0; scol < zd; ++scol) {
      Vec img = z.coordinates(s.multiply(zt, z.basis_vector(scol)));
      for (std::size_t r = 0; r < zd; ++r) mt.at(r, scol) = img[r];
    }
    std::vector<Subspace> next;
    for (const Subspace& b : blocks) {
      if (b.dim() == 1) {
        next.push_back(b);
        continue;
      }
      // restriction of mt to the block, in the block's echelon basis
      Matrix rest(b.dim(), b.dim());
      for (std::size_t j = 0; j < b.dim(); ++j) {
        Vec img = mat_apply(mt, b.basis_vector(j));
        Vec coords = b.coordinates(img);
        for (std::size_t i = 0; i < b.dim(); ++i) rest.at(i, j) = coords[i];
      }
      std::vector<Rat> roots = rational_roots(char_poly(rest));
      std::size_t covered = 0;
      for (const Rat& lam : roots) {
        Matrix shifted = rest;
        for (std::size_t i = 0; i < b.dim(); ++i) shifted.at(i, i) -= lam;
        std::vector<Vec> ker = kernel_basis(shifted);
        if (ker.empty()) continue;
        std::vector<Vec> lifted;
        for (const Vec& k : ker) {
          Vec v(zd, Rat(0));
          for (std::size_t i = 0; i < b.dim(); ++i)
            if (!is_zero(k[i])) vec_axpy(v, k[i], b.basis_vector(i));
          lifted.push_back(std::move(v));
        }
        next.push_back(Subspace::from_span(lifted, zd));
        covered += ker.size();
      }
      if (covered != b.dim())
        throw Error(ErrorCode::SplitFailure, "center multiplication has irrational spectrum");
    }
    blocks = std::move(next);
  }
  for (const Subspace& b : blocks)
    if (b.dim() != 1)
      throw Error(ErrorCode::SplitFailure, "center eigenvalue profiles do not separate");

  std::vector<Vec> idems;
  for (const Subspace& b : blocks) {
    Vec v(s.dim(), Rat(0));
    Vec bz = b.basis_vector(0);
    for (std::size_t i = 0; i < zd; ++i)
      if (!is_zero(bz[i])) vec_axpy(v, bz[i], z.basis_vector(i));
    Vec sq = s.multiply(v, v);
    std::size_t piv = 0;
    while (piv < v.size() && is_zero(v[piv])) ++piv;
    if (piv == v.size() || is_zero(sq[piv]))
      throw Error(ErrorCode::InternalCheck, "central eigenline is nilpotent in semisimple input");
    Rat lam = sq[piv] / v[piv];
    if (vec_scaled(v, lam) != sq)
      throw Error(ErrorCode::InternalCheck, "central eigenline is not closed under squaring");
    idems.push_back(vec_scaled(v, 1 / lam));
  }

  std::vector<Subspace> comps;
  for (const Vec& e : idems) {
    std::vector<Vec> gens;
    for (std::size_t k = 0; k < s.dim(); ++k) gens.push_back(s.multiply(e, s.basis_vec(k)));
    comps.push_back(Subspace::from_span(gens, s.dim()));
  }
  std::vector<std::size_t> order(comps.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (comps[x].dim() != comps[y].dim()) return comps[x].dim() > comps[y].dim();
    return comps[x].pivots().front() < comps[y].pivots().front();
  });
  std::size_t total = 0;
  for (std::size_t i : order) {
    out.components.push_back(comps[i]);
    out.idempotents.push_back(idems[i]);
    total += comps[i].dim();
  }
  if (total != s.dim())
    throw Error(ErrorCode::InternalCheck, "component dimensions do not fill the algebra");
  for (std::size_t i = 0; i < out.idempotents.size(); ++i)
    for (std::size_t j = 0; j < out.idempotents.size(); ++j) {
      Vec p = s.multiply(out.idempotents[i], out.idempotents[j]);
      Vec expect = (i == j) ? out.idempotents[i] : vec_zero(s.dim());
      if (p != expect)
        throw Error(ErrorCode::InternalCheck, "central idempotents are not orthogonal");
    }
  return out;
}

// Matrix units of a split simple component: a full system E[s][t] with
// E[s][t] E[u][v] = delta_{tu} E[s][v], expressed in the coordinates of the
// enclosing algebra. Construction: find a regular split element by a
// deterministic seeded search, take its spectral idempotents (they are
// primitive), then wire the corners, which are one dimensional exactly in
// the split case.
struct MatrixUnits {
  std::size_t k = 0;
  std::vector<std::vector<Vec>> unit;  // k x k
};

inline std::vector<Rat> min_poly_in_algebra(const Algebra& s, const Vec& unit_elt, const Vec& c) {
  std::vector<Vec> powers = {unit_elt};
  for (;;) {
    Matrix m = Matrix::from_rows(powers);
    RrefResult rr = rref(m);
    if (rr.mat.rows() < powers.size()) {
      // last power is dependent: solve for its expansion in the previous ones
      std::vector<Vec> prev(powers.begin(), powers.end() - 1);
      Matrix pm = Matrix::from_rows(prev).transposed();
      auto sol = solve(pm, powers.back());
      if (!sol) throw Error(ErrorCode::InternalCheck, "minimal polynomial solve failed");
      std::vector<Rat> coeffs(powers.size());
      for (std::size_t i = 0; i + 1 < powers.size(); ++i) coeffs[i] = -(*sol)[i];
      coeffs[powers.size() - 1] = 1;
      return coeffs;
    }
    powers.push_back(s.multiply(powers.back(), c));
    if (powers.size() > s.dim() + 2)
      throw Error(ErrorCode::InternalCheck, "minimal polynomial search runaway");
  }
}

inline MatrixUnits matrix_units(const Algebra& s, const Subspace& comp, const Vec& idem) {
  MatrixUnits mu;
  const std::size_t n2 = comp.dim();
  std::size_t k = 0;
  while (k * k < n2) ++k;
  if (k * k != n2)
    throw Error(ErrorCode::SplitFailure, "component dimension is not a perfect square");
  mu.k = k;
  mu.unit.assign(k, std::vector<Vec>(k));
  if (k == 1) {
    mu.unit[0][0] = idem;
    return mu;
  }

  // Splitting element search: an element whose minimal polynomial has k
  // distinct rational roots yields k rank-one spectral projectors.
  std::vector<Vec> proj;
  auto attempt = [&](const Vec& c) {
    std::vector<Rat> mp = min_poly_in_algebra(s, idem, c);
    if (mp.size() != k + 1) return false;
    std::vector<Rat> roots = rational_roots(mp);
    if (roots.size() != k) return false;
    // spectral projectors via Lagrange interpolation at the roots
    proj.clear();
    for (std::size_t i = 0; i < k; ++i) {
      Vec p = idem;
      for (std::size_t j = 0; j < k; ++j) {
        if (j == i) continue;
        Vec factor = c;
        vec_axpy(factor, -roots[j], idem);
        p = s.multiply(p, factor);
        Rat scale = 1 / (roots[i] - roots[j]);
        p = vec_scaled(p, scale);
      }
      proj.push_back(std::move(p));
    }
    return true;
  };
  bool found = false;
  // Structured phase: singles and weighted pairs of component basis vectors.
  // Matrix-unit-like bases hit small integer spectra here; dense random
  // elements would almost always have irrational eigenvalues once k > 2.
  for (std::size_t t = 0; t < n2 && !found; ++t) found = attempt(comp.basis_vector(t));
  static constexpr long kPairWeights[] = {1, 2, 3, -1, -2};
  for (std::size_t a = 0; a < n2 && !found; ++a)
    for (std::size_t b = a + 1; b < n2 && !found; ++b)
      for (long w : kPairWeights) {
        Vec c = comp.basis_vector(a);
        vec_axpy(c, Rat(w), comp.basis_vector(b));
        if ((found = attempt(c))) break;
      }
  // Dense random fallback.
  std::uint64_t state = 0x9E3779B97F4A7C15ull;
  auto next_small = [&state]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<long>((state >> 33) % 21) - 10;
  };
  for (int trial = 0; trial < 64 && !found; ++trial) {
    Vec c(s.dim(), Rat(0));
    for (std::size_t t = 0; t < n2; ++t) {
      long w = next_small();
      if (w != 0) vec_axpy(c, Rat(w), comp.basis_vector(t));
    }
    found = attempt(c);
  }
  if (!found)
    throw Error(ErrorCode::SplitFailure,
                "no rational splitting element found in the simple component");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Vec p = s.multiply(proj[i], proj[j]);
      Vec expect = (i == j) ? proj[i] : vec_zero(s.dim());
      if (p != expect) throw Error(ErrorCode::InternalCheck, "spectral projectors misbehave");
    }

  auto corner = [&](const Vec& l, const Vec& r) {
    std::vector<Vec> gens;
    for (std::size_t b = 0; b < n2; ++b)
      gens.push_back(s.multiply(s.multiply(l, comp.basis_vector(b)), r));
    return Subspace::from_span(gens, s.dim());
  };

  mu.unit[0][0] = proj[0];
  for (std::size_t t = 1; t < k; ++t) {
    Subspace xt = corner(proj[0], proj[t]);
    Subspace yt = corner(proj[t], proj[0]);
    if (xt.dim() != 1 || yt.dim() != 1)
      throw Error(ErrorCode::SplitFailure, "corner spaces are not one dimensional");
    Vec x = xt.basis_vector(0);
    Vec y = yt.basis_vector(0);
    Vec prod = s.multiply(x, y);  // = mu * proj[0]
    std::size_t piv = 0;
    while (piv < prod.size() && is_zero(proj[0][piv])) ++piv;
    if (is_zero(prod[piv]))
      throw Error(ErrorCode::SplitFailure, "degenerate corner pairing");
    Rat muv = prod[piv] / proj[0][piv];
    if (vec_scaled(proj[0], muv) != prod)
      throw Error(ErrorCode::InternalCheck, "corner pairing is not scalar");
    mu.unit[0][t] = x;
    mu.unit[t][0] = vec_scaled(y, 1 / muv);
  }
  for (std::size_t sx = 1; sx < k; ++sx)
    for (std::size_t t = 1; t < k; ++t) mu.unit[sx][t] = s.multiply(mu.unit[sx][0], mu.unit[0][t]);
  for (std::size_t t = 1; t < k; ++t)
    if (mu.unit[t][t] != proj[t])
      throw Error(ErrorCode::InternalCheck, "diagonal units disagree with spectral projectors");
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t cidx = 0; cidx < k; ++cidx)
        for (std::size_t d = 0; d < k; ++d) {
          Vec p = s.multiply(mu.unit[a][b], mu.unit[cidx][d]);
          Vec expect = (b == cidx) ? mu.unit[a][d] : vec_zero(s.dim());
          if (p != expect) throw Error(ErrorCode::InternalCheck, "matrix unit relations fail");
        }
  return mu;
}

// Coordinates of v (inside the component) over the matrix units.
inline std::vector<std::vector<Rat>> unit_coordinates(const Algebra& s, const MatrixUnits& mu,
                                                      const Vec& v) {
  const std::size_t k = mu.k;
  std::vector<Vec> rows;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) rows.push_back(mu.unit[a][b]);
  Matrix m = Matrix::from_rows(rows).transposed();
  auto sol = solve(m, v);
  if (!sol) throw Error(ErrorCode::InternalCheck, "vector escapes matrix unit span");
  std::vector<std::vector<Rat>> out(k, std::vector<Rat>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) out[a][b] = (*sol)[a * k + b];
  return out;
}

}  // namespace hpi
