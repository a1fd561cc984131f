#include <doctest.h>

#include <cmath>
#include <thread>

#include "collatz_zeros/collatz.hpp"
#include "oracles.hpp"

using namespace collatz;

namespace {

std::vector<long> as_longs(const Trajectory& t) {
  std::vector<long> v;
  for (const auto& x : t.iterates) v.push_back(x.get_si());
  return v;
}

}  // namespace

TEST_CASE("collatz_step follows the shortcut map") {
  CHECK(collatz_step(6) == 3);
  CHECK(collatz_step(3) == 5);
  CHECK(collatz_step(1) == 0);
  CHECK(collatz_step(27) == 41);
  CHECK_THROWS_AS(collatz_step(0), DomainError);
  CHECK_THROWS_AS(collatz_step(-4), DomainError);
}

TEST_CASE("collatz_step is exact far beyond 64 bits") {
  BigInt x;
  mpz_ui_pow_ui(x.get_mpz_t(), 3, 200);  // odd
  CHECK(collatz_step(x) == (3 * x + 1) / 2);
  BigInt e = x * 2;
  CHECK(collatz_step(e) == x);
}

TEST_CASE("iterate_k") {
  CHECK(iterate_k(3, 2) == 8);
  CHECK(iterate_k(7, 0) == 7);
  CHECK(iterate_k(2, 1) == 1);
  CHECK(iterate_k(2, 2) == 0);  // c(1) = 0 on the last step is allowed
  CHECK_THROWS_AS(iterate_k(2, 3), DomainError);
  CHECK_THROWS_AS(iterate_k(0, 1), DomainError);
}

TEST_CASE("trajectory examples") {
  const Trajectory t3 = trajectory(3);
  CHECK(as_longs(t3) == std::vector<long>{3, 5, 8, 4, 2, 1});
  CHECK(t3.n == 5);
  CHECK(t3.parities == std::vector<std::uint8_t>{1, 1, 0, 0, 0, 1});

  const Trajectory t4 = trajectory(4);
  CHECK(as_longs(t4) == std::vector<long>{4, 2, 1});
  CHECK(t4.n == 2);

  const Trajectory t10 = trajectory(10);
  CHECK(as_longs(t10) == std::vector<long>{10, 5, 8, 4, 2, 1});
  CHECK(t10.n == 5);

  CHECK_THROWS_AS(trajectory(1), DomainError);
  CHECK_THROWS_AS(trajectory(0), DomainError);
}

TEST_CASE("trajectory cap error carries the partial trajectory") {
  try {
    trajectory(27, 10);
    FAIL("expected CapExceededError");
  } catch (const CapExceededError& e) {
    CHECK(e.cap() == 10);
    CHECK(e.partial().start == 27);
    CHECK(e.partial().iterates.size() == 11);
    CHECK(e.partial().iterates[1] == 41);
    CHECK(e.partial().parities.size() == 11);
  }
  // The cap is inclusive of exactly n steps.
  CHECK(trajectory(3, 5).n == 5);
  CHECK_THROWS_AS(trajectory(3, 4), CapExceededError);
}

TEST_CASE("least_odd_iterate") {
  CHECK(*least_odd_iterate(trajectory(3)).value == 3);
  CHECK(least_odd_iterate(trajectory(8)).is_none());
  CHECK(*least_odd_iterate(trajectory(10)).value == 5);
  CHECK(*least_odd_iterate(trajectory(7)).value == 5);
}

TEST_CASE("parity_vector examples") {
  CHECK(parity_vector(3, 1) == std::vector<std::uint8_t>{1, 1});
  CHECK(parity_vector(0, 1) == std::vector<std::uint8_t>{0, 0});
  CHECK(parity_vector(2, 1) == std::vector<std::uint8_t>{0, 1});
  CHECK(parity_vector(1, 0) == std::vector<std::uint8_t>{1});
  CHECK_THROWS_AS(parity_vector(4, 1), DomainError);
  CHECK_THROWS_AS(parity_vector(0, 64), DomainError);
}

TEST_CASE("parity_vector agrees with big-integer iteration of the pure map at k = 63") {
  // The modular shortcut inside parity_word must match exact iteration.
  for (std::uint64_t r : {0x0123456789abcdefULL, 0xffffffffffffffffULL, 27ULL, 1ULL << 63}) {
    BigInt x = from_u64(r);
    const auto bits = parity_vector(r, 63);
    for (unsigned j = 0; j <= 63; ++j) {
      const bool odd = mpz_odd_p(x.get_mpz_t());
      REQUIRE(bits[j] == (odd ? 1 : 0));
      x = odd ? BigInt((3 * x + 1) / 2) : BigInt(x / 2);
    }
  }
}

TEST_CASE("trajectories match the word-size oracle and basic invariants up to 2^16") {
  for (std::uint64_t N = 2; N <= (1u << 16); ++N) {
    const Trajectory t = trajectory(from_u64(N));
    const auto ref = oracle::trajectory(N);
    REQUIRE(t.iterates.size() == ref.size());
    for (std::size_t k = 0; k < ref.size(); ++k) REQUIRE(t.iterates[k] == from_u64(ref[k]));
    REQUIRE(t.iterates.back() == 1);
    REQUIRE(t.parities.back() == 1);
    // n(N) >= log2 N
    REQUIRE(static_cast<double>(t.n) >= std::log2(static_cast<double>(N)) - 1e-12);

    // Parity consistency with the residue map while the trajectory has not
    // yet passed 1 (the pure map sends 1 to 2, the shortcut map to 0).
    const unsigned k = static_cast<unsigned>(std::min<std::size_t>(t.n, 16));
    const std::uint64_t residue = N & ((std::uint64_t{2} << k) - 1);
    const auto bits = parity_vector(residue, k);
    for (unsigned j = 0; j <= k; ++j) REQUIRE(bits[j] == t.parities[j]);
  }
}

TEST_CASE("n(2^j) = j") {
  for (unsigned j = 1; j <= 200; ++j) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, j);
    const Trajectory t = trajectory(p);
    REQUIRE(t.n == j);
    REQUIRE(least_odd_iterate(t).is_none());
    REQUIRE(is_power_of_two(p));
  }
  CHECK_FALSE(is_power_of_two(12));
  CHECK_FALSE(is_power_of_two(0));
}

TEST_CASE("trajectory is deterministic across threads") {
  const Trajectory ref = trajectory(77031);
  std::vector<Trajectory> results(4);
  std::vector<std::thread> pool;
  for (int i = 0; i < 4; ++i) pool.emplace_back([&, i] { results[i] = trajectory(77031); });
  for (auto& th : pool) th.join();
  for (const auto& t : results) {
    CHECK(t.iterates == ref.iterates);
    CHECK(t.parities == ref.parities);
  }
}
