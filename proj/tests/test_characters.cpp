#include <catch2/catch_amalgamated.hpp>

#include "hpi/characters.hpp"
#include "hpi/partition.hpp"
#include "support/oracle.hpp"

using namespace hpi;

TEST_CASE("partitions enumerate in decreasing lexicographic order") {
  auto p4 = partitions_of(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4.front() == Partition{4});
  CHECK(p4[1] == Partition{3, 1});
  CHECK(p4[2] == Partition{2, 2});
  CHECK(p4[3] == Partition{2, 1, 1});
  CHECK(p4.back() == Partition{1, 1, 1, 1});
  CHECK(partitions_of(8).size() == 22);
  CHECK(partitions_of(1).size() == 1);
}

TEST_CASE("conjugation is an involution") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& lam : partitions_of(n))
      CHECK(conjugate_partition(conjugate_partition(lam)) == lam);
  CHECK(conjugate_partition(Partition{3, 1}) == Partition{2, 1, 1});
}

TEST_CASE("hook length dimensions match the standard tableau count") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& lam : partitions_of(n))
      CHECK(hook_dimension(lam) == Int(static_cast<unsigned long>(oracle::syt_count(lam))));
}

TEST_CASE("class sizes partition the group order") {
  for (int n = 1; n <= 7; ++n) {
    Int total(0), nfact(1);
    for (int k = 2; k <= n; ++k) nfact *= k;
    for (const auto& mu : partitions_of(n)) {
      CHECK(class_size(mu) * centralizer_order(mu) == nfact);
      total += class_size(mu);
    }
    CHECK(total == nfact);
  }
}

TEST_CASE("the symmetric group character table of degree 3") {
  // Rows: shapes (3), (2,1), (1,1,1); columns: classes in the same order.
  const long long expect[3][3] = {{1, 1, 1}, {-1, 0, 2}, {1, -1, 1}};
  auto parts = partitions_of(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(irreducible_character(parts[i], parts[j]) == expect[i][j]);
}

TEST_CASE("spot values of larger characters") {
  CHECK(irreducible_character({2, 2}, {4}) == 0);
  CHECK(irreducible_character({2, 2}, {2, 2}) == 2);
  CHECK(irreducible_character({2, 2}, {3, 1}) == -1);
  CHECK(irreducible_character({3, 1}, {2, 1, 1}) == 1);
  CHECK(irreducible_character({4, 3, 2, 1}, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1}) == 768);
}

TEST_CASE("character values on the identity are the dimensions") {
  for (int n = 1; n <= 7; ++n) {
    Partition ones(n, 1);
    for (const auto& lam : partitions_of(n))
      CHECK(Int(static_cast<long>(irreducible_character(lam, ones))) == hook_dimension(lam));
  }
}

TEST_CASE("sign and trivial characters") {
  for (int n = 2; n <= 6; ++n) {
    Partition ntop{n}, ones(n, 1);
    for (const auto& mu : partitions_of(n)) {
      CHECK(irreducible_character(ntop, mu) == 1);
      int transpositions = 0;
      for (int part : mu) transpositions += part - 1;
      long long sign = transpositions % 2 == 0 ? 1 : -1;
      CHECK(irreducible_character(ones, mu) == sign);
    }
  }
}

TEST_CASE("first orthogonality relation up to degree 5") {
  for (int n = 1; n <= 5; ++n) {
    auto parts = partitions_of(n);
    Int nfact(1);
    for (int k = 2; k <= n; ++k) nfact *= k;
    for (std::size_t a = 0; a < parts.size(); ++a)
      for (std::size_t b = a; b < parts.size(); ++b) {
        Int acc(0);
        for (const auto& mu : parts)
          acc += class_size(mu) * Int(static_cast<long>(irreducible_character(parts[a], mu))) *
                 Int(static_cast<long>(irreducible_character(parts[b], mu)));
        CHECK(acc == (a == b ? nfact : Int(0)));
      }
  }
}
