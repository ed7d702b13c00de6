#include <catch2/catch_amalgamated.hpp>

#include "hpi/evaluation.hpp"
#include "hpi/haction.hpp"
#include "hpi/hpolynomial.hpp"
#include "hpi/zoo.hpp"

using namespace hpi;

namespace {

// x1 x2 ... xn as a bare monomial (identity permutation, identity operators).
HPolynomial word(std::size_t n, std::size_t m) {
  HPolynomial f(n, m);
  f.add(HMonomial{perm_identity(static_cast<int>(n)), std::vector<int>(n, 0)}, Rat(1));
  return f;
}

HPolynomial standard_poly(std::size_t n, std::size_t m) {
  return alternate(word(n, m), [&] {
    std::vector<int> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<int>(i);
    return all;
  }());
}

}  // namespace

TEST_CASE("monomial indexing is a bijection") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t m = 1; m <= 3; ++m) {
      std::uint64_t count = monomial_count(n, m);
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        HMonomial w = monomial_from_index(idx, n, m);
        CHECK(monomial_index(w, m) == idx);
      }
    }
}

TEST_CASE("permutation action on polynomials is a left group action") {
  HPolynomial f(3, 2);
  f.add(HMonomial{{0, 1, 2}, {0, 1, 0}}, Rat(1));
  f.add(HMonomial{{2, 0, 1}, {1, 1, 0}}, Rat(-2));
  Perm s{1, 0, 2}, t{0, 2, 1};
  CHECK(sn_act(perm_compose(s, t), f) == sn_act(s, sn_act(t, f)));
}

TEST_CASE("alternation produces the standard polynomial") {
  HPolynomial s2 = standard_poly(2, 1);
  HPolynomial expect(2, 1);
  expect.add(HMonomial{{0, 1}, {0, 0}}, Rat(1));
  expect.add(HMonomial{{1, 0}, {0, 0}}, Rat(-1));
  CHECK(s2 == expect);
  CHECK(standard_poly(3, 1).terms.size() == 6);
  // Alternating: any transposition negates it.
  HPolynomial s3 = standard_poly(3, 1);
  CHECK(sn_act(Perm{1, 0, 2}, s3) == poly_scale(s3, Rat(-1)));
}

TEST_CASE("polynomial context mismatches are rejected") {
  HPolynomial f(2, 1), g(3, 1), h(2, 2);
  CHECK_THROWS_AS(poly_add(f, g), Error);
  CHECK_THROWS_AS(poly_add(f, h), Error);
}

TEST_CASE("monomial display uses one-based variables and operator tags") {
  std::vector<std::string> ops{"id", "t"};
  HMonomial w{{1, 0}, {0, 1}};
  CHECK(monomial_str(w, ops) == "x2 x1[t]");
}

TEST_CASE("the commutator is an identity exactly for commutative models") {
  HPolynomial comm(2, 1);
  comm.add(HMonomial{{0, 1}, {0, 0}}, Rat(1));
  comm.add(HMonomial{{1, 0}, {0, 0}}, Rat(-1));
  ZooModel point = zoo_model("point");
  HActionData act_p = operator_algebra_basis(point.alg, point.generators);
  Evaluator ev_p(point.alg, act_p, 2);
  CHECK(ev_p.is_identity(comm));
  ZooModel m2 = zoo_model("m2");
  HActionData act_m = operator_algebra_basis(m2.alg, m2.generators);
  Evaluator ev_m(m2.alg, act_m, 2);
  CHECK_FALSE(ev_m.is_identity(comm));
}

TEST_CASE("the 2x2 upper triangular algebra satisfies its defining identity") {
  // [x1, x2] [x3, x4] vanishes on the upper triangular algebra.
  ZooModel z = zoo_model("ut2");
  HActionData act = operator_algebra_basis(z.alg, z.generators);
  HPolynomial f(4, 1);
  int sgn[2] = {1, -1};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Perm p = {a == 0 ? 0 : 1, a == 0 ? 1 : 0, b == 0 ? 2 : 3, b == 0 ? 3 : 2};
      f.add(HMonomial{p, {0, 0, 0, 0}}, Rat(sgn[a] * sgn[b]));
    }
  Evaluator ev(z.alg, act, 4);
  CHECK(ev.is_identity(f));
  // But it is not an identity of the full matrix algebra.
  ZooModel m2 = zoo_model("m2");
  HActionData act_m = operator_algebra_basis(m2.alg, m2.generators);
  CHECK_FALSE(Evaluator(m2.alg, act_m, 4).is_identity(f));
  // And the degree-3 standard polynomial is not an identity of ut2.
  CHECK_FALSE(Evaluator(z.alg, act, 3).is_identity(standard_poly(3, 1)));
}

TEST_CASE("the standard polynomial of degree 4 annihilates 2x2 matrices") {
  ZooModel z = zoo_model("m2");
  HActionData act = operator_algebra_basis(z.alg, z.generators);
  Evaluator ev(z.alg, act, 4);
  CHECK(ev.is_identity(standard_poly(4, 1)));
  CHECK_FALSE(Evaluator(z.alg, act, 3).is_identity(standard_poly(3, 1)));
}

TEST_CASE("evaluation is linear and matches manual substitution") {
  ZooModel z = zoo_model("ut2");
  HActionData act = operator_algebra_basis(z.alg, z.generators);
  Evaluator ev(z.alg, act, 2);
  // tuple index encodes the substitution digits; decode and multiply by hand.
  for (std::uint64_t t = 0; t < ev.num_tuples(); ++t) {
    std::size_t v0 = (t / 3) % 3, v1 = t % 3;
    Vec manual = z.alg.multiply(z.alg.basis_vec(v0), z.alg.basis_vec(v1));
    CHECK(ev.eval_monomial(HMonomial{{0, 1}, {0, 0}}, t) == manual);
  }
}

TEST_CASE("operator digits apply the action inside monomials") {
  ZooModel z = zoo_model("m2-transpose");
  HActionData act = operator_algebra_basis(z.alg, z.generators);
  Evaluator ev(z.alg, act, 1);
  REQUIRE(ev.op_count() == 2);
  for (std::uint64_t t = 0; t < ev.num_tuples(); ++t) {
    for (std::size_t z_i = 0; z_i < 2; ++z_i) {
      Vec direct = mat_apply(act.zeta[z_i].mat, z.alg.basis_vec(t % 4));
      CHECK(ev.eval_monomial(HMonomial{{0}, {static_cast<int>(z_i)}}, t) == direct);
    }
  }
}
