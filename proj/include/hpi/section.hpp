#pragma once

#include <cstddef>
#include <vector>

#include "hpi/algebra.hpp"
#include "hpi/radical.hpp"
#include "hpi/semisimple.hpp"

namespace hpi {

// Newton refinement e <- 3e^2 - 2e^3 starting from an element that is
// idempotent modulo the radical; converges in at most ceil(log2(index)) + 1
// steps because the defect e^2 - e squares at each pass.
inline Vec lift_idempotent(const Algebra& a, const Vec& start, std::size_t nil_index) {
  Vec e = start;
  std::size_t budget = 2;
  while ((std::size_t{1} << (budget - 2)) < nil_index + 1) ++budget;
  budget += 2;
  for (std::size_t it = 0; it < budget; ++it) {
    Vec e2 = a.multiply(e, e);
    if (e2 == e) return e;
    Vec e3 = a.multiply(e2, e);
    Vec next = vec_scaled(e2, Rat(3));
    vec_axpy(next, Rat(-2), e3);
    e = std::move(next);
  }
  Vec e2 = a.multiply(e, e);
  if (e2 != e) throw Error(ErrorCode::InternalCheck, "idempotent refinement did not converge");
  return e;
}

// A multiplicative section kappa : A/J -> A of the quotient map, built by
// lifting the matrix units of every simple component and recombining. The
// optional twist conjugates the section by 1 + j for a chosen radical
// element j, producing a genuinely different section with the same image
// dimension profile.
struct WedderburnSection {
  QuotientMap qm;
  SemisimpleDecomposition decomp;
  std::vector<MatrixUnits> units;  // per component, quotient coordinates
  Matrix kappa;                    // dim(A) x dim(A/J)

  Vec apply(const Vec& quotient_vec) const { return mat_apply(kappa, quotient_vec); }
};

namespace detail {

inline Vec mul3(const Algebra& a, const Vec& x, const Vec& y, const Vec& z) {
  return a.multiply(a.multiply(x, y), z);
}

}  // namespace detail

inline WedderburnSection wedderburn_section(const Algebra& a, const RadicalData& rad,
                                            const Vec* twist = nullptr) {
  WedderburnSection ws{QuotientMap(a, rad.radical), {}, {}, Matrix(0, 0)};
  const Algebra& q = ws.qm.quotient();
  ws.decomp = simple_decomposition(q);
  ws.kappa = Matrix(a.dim(), q.dim());
  if (q.dim() == 0) return ws;

  for (std::size_t i = 0; i < ws.decomp.components.size(); ++i)
    ws.units.push_back(matrix_units(q, ws.decomp.components[i], ws.decomp.idempotents[i]));

  // Lift all diagonal units to orthogonal idempotents of A, sequentially:
  // each raw lift is first corrected into the corner orthogonal to the sum
  // already built, so orthogonality holds exactly at every step.
  std::vector<std::vector<Vec>> diag(ws.units.size());
  Vec accumulated = vec_zero(a.dim());
  for (std::size_t i = 0; i < ws.units.size(); ++i) {
    diag[i].resize(ws.units[i].k);
    for (std::size_t s = 0; s < ws.units[i].k; ++s) {
      Vec raw = ws.qm.embed(ws.units[i].unit[s][s]);
      Vec x = raw;
      vec_axpy(x, Rat(-1), a.multiply(accumulated, raw));
      Vec xa = a.multiply(x, accumulated);
      vec_axpy(x, Rat(-1), xa);
      vec_axpy(x, Rat(1), a.multiply(accumulated, xa));
      Vec e = lift_idempotent(a, x, rad.index);
      if (!vec_is_zero(a.multiply(e, accumulated)) || !vec_is_zero(a.multiply(accumulated, e)))
        throw Error(ErrorCode::InternalCheck, "lifted idempotents are not orthogonal");
      diag[i][s] = e;
      vec_axpy(accumulated, Rat(1), e);
    }
  }

  // Lift the off-diagonal units inside each component. The product of the
  // two raw corner lifts differs from the diagonal idempotent by a radical
  // element of the corner, invertible there via a finite geometric series.
  std::vector<std::vector<std::vector<Vec>>> lifted(ws.units.size());
  for (std::size_t i = 0; i < ws.units.size(); ++i) {
    const std::size_t k = ws.units[i].k;
    lifted[i].assign(k, std::vector<Vec>(k));
    lifted[i][0][0] = diag[i][0];
    for (std::size_t t = 1; t < k; ++t) {
      Vec at = detail::mul3(a, diag[i][0], ws.qm.embed(ws.units[i].unit[0][t]), diag[i][t]);
      Vec bt = detail::mul3(a, diag[i][t], ws.qm.embed(ws.units[i].unit[t][0]), diag[i][0]);
      Vec g = a.multiply(at, bt);
      Vec j = g;
      vec_axpy(j, Rat(-1), diag[i][0]);
      Vec inv = diag[i][0];
      Vec jp = j;
      Rat sign(-1);
      std::size_t guard = 0;
      while (!vec_is_zero(jp)) {
        vec_axpy(inv, sign, jp);
        jp = a.multiply(jp, j);
        sign = -sign;
        if (++guard > rad.index + 2)
          throw Error(ErrorCode::InternalCheck, "corner defect is not nilpotent");
      }
      if (a.multiply(g, inv) != diag[i][0])
        throw Error(ErrorCode::InternalCheck, "corner inversion failed");
      lifted[i][0][t] = at;
      lifted[i][t][0] = a.multiply(bt, inv);
    }
    for (std::size_t s = 1; s < k; ++s)
      for (std::size_t t = 1; t < k; ++t)
        lifted[i][s][t] = a.multiply(lifted[i][s][0], lifted[i][0][t]);
    for (std::size_t s = 0; s < k; ++s)
      for (std::size_t t = 0; t < k; ++t)
        for (std::size_t u = 0; u < k; ++u)
          for (std::size_t v = 0; v < k; ++v) {
            Vec p = a.multiply(lifted[i][s][t], lifted[i][u][v]);
            Vec expect = (t == u) ? lifted[i][s][v] : vec_zero(a.dim());
            if (p != expect)
              throw Error(ErrorCode::InternalCheck, "lifted matrix unit relations fail");
          }
  }

  for (std::size_t col = 0; col < q.dim(); ++col) {
    Vec target = vec_zero(a.dim());
    Vec qb = q.basis_vec(col);
    for (std::size_t i = 0; i < ws.units.size(); ++i) {
      Vec part = q.multiply(ws.decomp.idempotents[i], qb);
      if (vec_is_zero(part)) continue;
      auto coords = unit_coordinates(q, ws.units[i], part);
      for (std::size_t s = 0; s < ws.units[i].k; ++s)
        for (std::size_t t = 0; t < ws.units[i].k; ++t)
          if (!is_zero(coords[s][t])) vec_axpy(target, coords[s][t], lifted[i][s][t]);
    }
    for (std::size_t r = 0; r < a.dim(); ++r) ws.kappa.at(r, col) = target[r];
  }

  if (twist != nullptr) {
    if (!rad.radical.contains(*twist))
      throw Error(ErrorCode::ValidationError, "twist element must lie in the radical");
    Algebra hull = a.unital_hull();
    auto to_hull = [&](const Vec& v) {
      Vec h(v);
      h.push_back(Rat(0));
      return h;
    };
    Vec u = to_hull(*twist);
    u.back() = 1;  // 1 + j
    Vec uinv(a.dim() + 1, Rat(0));
    uinv.back() = 1;
    Vec jp = to_hull(*twist);
    Rat sign(-1);
    std::size_t guard = 0;
    while (!vec_is_zero(jp)) {
      vec_axpy(uinv, sign, jp);
      jp = hull.multiply(jp, to_hull(*twist));
      sign = -sign;
      if (++guard > rad.index + 2)
        throw Error(ErrorCode::InternalCheck, "twist element is not nilpotent");
    }
    for (std::size_t col = 0; col < q.dim(); ++col) {
      Vec kv(a.dim());
      for (std::size_t r = 0; r < a.dim(); ++r) kv[r] = ws.kappa.at(r, col);
      Vec conj = detail::mul3(hull, u, to_hull(kv), uinv);
      if (!is_zero(conj.back()))
        throw Error(ErrorCode::InternalCheck, "twisted section leaves the algebra");
      for (std::size_t r = 0; r < a.dim(); ++r) ws.kappa.at(r, col) = conj[r];
    }
  }

  // verify: right inverse of the projection, and multiplicative
  for (std::size_t col = 0; col < q.dim(); ++col) {
    Vec kv(a.dim());
    for (std::size_t r = 0; r < a.dim(); ++r) kv[r] = ws.kappa.at(r, col);
    if (ws.qm.project(kv) != q.basis_vec(col))
      throw Error(ErrorCode::InternalCheck, "section is not a right inverse of the projection");
  }
  for (std::size_t x = 0; x < q.dim(); ++x)
    for (std::size_t y = 0; y < q.dim(); ++y) {
      Vec lhs = ws.apply(q.multiply(q.basis_vec(x), q.basis_vec(y)));
      Vec rhs = a.multiply(ws.apply(q.basis_vec(x)), ws.apply(q.basis_vec(y)));
      if (lhs != rhs)
        throw Error(ErrorCode::InternalCheck, "section is not multiplicative");
    }
  return ws;
}

}  // namespace hpi
