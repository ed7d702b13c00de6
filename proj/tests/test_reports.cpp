#include <catch2/catch_amalgamated.hpp>

#include "hpi/reports.hpp"
#include "hpi/zoo.hpp"

using namespace hpi;

namespace {

HPolynomial commutator() {
  HPolynomial f(2, 1);
  f.add(HMonomial{{0, 1}, {0, 0}}, Rat(1));
  f.add(HMonomial{{1, 0}, {0, 0}}, Rat(-1));
  return f;
}

HPolynomial standard4() {
  HPolynomial base(4, 1);
  base.add(HMonomial{perm_identity(4), {0, 0, 0, 0}}, Rat(1));
  return alternate(base, {0, 1, 2, 3});
}

}  // namespace

TEST_CASE("witnesses must alternate and must not vanish identically") {
  ZooModel m2 = zoo_model("m2");
  HActionData act = operator_algebra_basis(m2.alg, m2.generators);
  // The commutator alternates in its two variables and is nonzero on M2.
  CHECK(verify_witness(commutator(), {{0, 1}}, m2.alg, act));
  // On a commutative model the same polynomial vanishes identically.
  ZooModel pt = zoo_model("point");
  HActionData act_p = operator_algebra_basis(pt.alg, pt.generators);
  CHECK_FALSE(verify_witness(commutator(), {{0, 1}}, pt.alg, act_p));
  // The degree-4 standard polynomial alternates but is an identity of M2.
  CHECK_FALSE(verify_witness(standard4(), {{0, 1, 2, 3}}, m2.alg, act));
  // A plain word does not alternate.
  HPolynomial w(2, 1);
  w.add(HMonomial{{0, 1}, {0, 0}}, Rat(1));
  CHECK_FALSE(verify_witness(w, {{0, 1}}, m2.alg, act));
  // Malformed variable sets are the caller's error.
  CHECK_THROWS_AS(verify_witness(commutator(), {{0, 0}}, m2.alg, act), Error);
  CHECK_THROWS_AS(verify_witness(commutator(), {{0, 5}}, m2.alg, act), Error);
}

TEST_CASE("vanishing report on the upper triangular window") {
  ZooModel z = zoo_model("ut2");
  VanishingReport rep = vanishing_report(z.alg, z.generators, 5);
  CHECK(rep.d == 2);
  CHECK(rep.nil_index == 2);
  REQUIRE(rep.constrained.size() == 2);
  CHECK(rep.constrained[0] == Partition{2, 1, 1, 1});
  CHECK(rep.constrained[1] == Partition{1, 1, 1, 1, 1});
  CHECK(rep.multiplicities_checked);
  CHECK(rep.direct_checked);
  CHECK(rep.ok());
}

TEST_CASE("vanishing report is vacuous without constrained shapes") {
  ZooModel z = zoo_model("m2");
  VanishingReport rep = vanishing_report(z.alg, z.generators, 3);
  CHECK(rep.constrained.empty());
  CHECK(rep.ok());
  CHECK_FALSE(rep.multiplicities_checked);
}

TEST_CASE("nilpotent vanishing constrains every shape") {
  ZooModel z = zoo_model("nil3");
  VanishingReport rep = vanishing_report(z.alg, z.generators, 4);
  CHECK(rep.constrained.size() == partitions_of(4).size());
  CHECK(rep.ok());
  CHECK(rep.direct_checked);
}

TEST_CASE("growth table values and band flags for the glued model") {
  ZooModel z = zoo_model("bahturin-m2");
  GrowthTable t = growth_report(z.alg, z.generators, 4);
  CHECK(t.d == 4);
  CHECK_FALSE(t.nilpotent);
  CHECK(t.sandwich_ok);
  REQUIRE(t.rows.size() == 4);
  const std::uint64_t expect_c[4] = {2, 4, 12, 47};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(t.rows[i].computed);
    CHECK(t.rows[i].c == expect_c[i]);
  }
  CHECK(t.rows[0].flag == "skip");
  CHECK(t.rows[1].flag == "skip");
  CHECK(t.rows[2].flag == "ok");
  CHECK(t.rows[3].flag == "ok");
  CHECK(t.rows[3].have_ratio);
  CHECK(t.rows[3].ratio == Rat(47, 12));
}

TEST_CASE("growth csv is byte stable") {
  ZooModel z = zoo_model("bahturin-m2");
  GrowthTable t = growth_report(z.alg, z.generators, 3);
  std::string expect =
      "n,c,colength,ratio,root,d,flags\n"
      "1,2,2,,2.000000,4,skip\n"
      "2,4,4,2,2.000000,4,skip\n"
      "3,12,8,3,2.289428,4,ok\n";
  CHECK(growth_csv(t) == expect);
}

TEST_CASE("rows over budget are recorded as skips, not failures") {
  ZooModel z = zoo_model("ut2");
  EvalLimits lim;
  lim.max_rows = 10;  // degree 4 needs 24 rows
  GrowthTable t = growth_report(z.alg, z.generators, 4, 3, lim);
  REQUIRE(t.rows.size() == 4);
  CHECK(t.rows[0].computed);
  CHECK(t.rows[2].computed);  // degree 3 only needs 6 rows
  CHECK(t.rows[3].computed == false);
  CHECK(t.rows[3].flag == "SIZE_LIMIT");
  CHECK_FALSE(t.rows[3].skip_reason.empty());
}

TEST_CASE("colength stays below the codimension on the desk window") {
  for (const char* name : {"point", "nil3", "ut2", "qq-swap"}) {
    ZooModel z = zoo_model(name);
    HActionData act = operator_algebra_basis(z.alg, z.generators);
    for (std::size_t n = 3; n <= 6; ++n) {
      CAPTURE(name, n);
      CocharacterResult cc;
      try {
        cc = cocharacter_multiplicities(z.alg, act, n);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::SizeLimit) continue;  // recorded skip
        throw;
      }
      CHECK(cc.colength >= 0);
      CHECK((cc.colength <= static_cast<long long>(cc.c) || cc.c == 0));
      long long total = 0;
      for (const auto& [lam, m] : cc.mult) total += m;
      CHECK(total == cc.colength);
    }
  }
}
