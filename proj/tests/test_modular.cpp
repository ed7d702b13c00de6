#include <catch2/catch_amalgamated.hpp>

#include "hpi/matrix.hpp"
#include "hpi/modular.hpp"

using namespace hpi;

namespace {

struct Lcg {
  std::uint64_t s = 0x2545F4914F6CDD1Dull;
  std::uint64_t next() {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return s >> 33;
  }
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

}  // namespace

TEST_CASE("primality screen on known values") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(3));
  CHECK(is_prime_u64(1073741789));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(1073741787));
  CHECK_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime to small bases
}

TEST_CASE("prime sequence is strictly decreasing primes below 2^30") {
  CHECK(prime_sequence(0) == 1073741789);
  u64 prev = 1ull << 30;
  for (std::size_t k = 0; k < 20; ++k) {
    u64 p = prime_sequence(k);
    CHECK(is_prime_u64(p));
    CHECK(p < prev);
    prev = p;
  }
}

TEST_CASE("modular inverse multiplies back to one") {
  const u64 p = prime_sequence(0);
  Lcg rng;
  for (int t = 0; t < 50; ++t) {
    u64 a = 1 + rng.next() % (p - 1);
    u64 inv = mod_inverse(a, p);
    CHECK((static_cast<unsigned __int128>(a) * inv) % p == 1);
  }
}

TEST_CASE("rational residues respect field operations") {
  const u64 p = prime_sequence(0);
  Lcg rng;
  for (int t = 0; t < 30; ++t) {
    Rat a = Rat(static_cast<long>(rng.range(-20, 20))) / Rat(static_cast<long>(rng.range(1, 9)));
    Rat b = Rat(static_cast<long>(rng.range(-20, 20))) / Rat(static_cast<long>(rng.range(1, 9)));
    u64 ra = rat_mod(a, p), rb = rat_mod(b, p);
    CHECK(rat_mod(a + b, p) == (ra + rb) % p);
    CHECK(rat_mod(a * b, p) ==
          static_cast<u64>((static_cast<unsigned __int128>(ra) * rb) % p));
  }
}

TEST_CASE("denominator divisibility screen") {
  const u64 p = prime_sequence(0);
  Rat bad = Rat(1) / Rat(Int(p));
  CHECK(den_divisible(bad, p));
  CHECK_FALSE(den_divisible(Rat(3, 7), p));
}

TEST_CASE("incremental modular elimination matches exact rank") {
  const u64 p = prime_sequence(0);
  Lcg rng;
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t r = 2 + rng.next() % 10, c = 2 + rng.next() % 10;
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rat(static_cast<long>(rng.range(-9, 9)));
    ModularRref elim(p, c);
    std::size_t rank = 0;
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<u64> row(c);
      for (std::size_t j = 0; j < c; ++j) row[j] = rat_mod(m.at(i, j), p);
      if (elim.insert(row) != ModularRref::npos) ++rank;
    }
    CHECK(rank == elim.rank());
    CHECK(rank == bareiss_rank(m));  // small integer entries: no unlucky prime
  }
}

TEST_CASE("multimodular rank survives entries divisible by the leading prime") {
  const u64 p1 = prime_sequence(0);
  // Diagonal p1 * I: rank mod p1 is 0, exact rank is full, and the report
  // must notice the residue disagreement and recover.
  Matrix m(4, 4);
  for (int i = 0; i < 4; ++i) m.at(i, i) = Rat(Int(p1));
  MultimodularReport rep = multimodular_rank_report(m);
  CHECK(rep.rank == 4);
  Matrix mixed(3, 5);
  mixed.at(0, 0) = Rat(Int(p1));
  mixed.at(0, 1) = 1;
  mixed.at(1, 2) = Rat(Int(p1)) * Rat(Int(p1));
  mixed.at(2, 4) = Rat(3, 2);
  CHECK(multimodular_rank(mixed) == bareiss_rank(mixed));
}

TEST_CASE("multimodular rank equals exact elimination on random samples") {
  Lcg rng;
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + rng.next() % 12, c = 1 + rng.next() % 12;
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        m.at(i, j) = Rat(static_cast<long>(rng.range(-50, 50))) /
                     Rat(static_cast<long>(rng.range(1, 12)));
    CHECK(multimodular_rank(m) == bareiss_rank(m));
  }
}
