#include <doctest.h>

#include "collatz_zeros/ek_bounds.hpp"
#include "oracles.hpp"

using namespace collatz;

namespace {

IntPolynomial P(long N) { return build_collatz_polynomial(trajectory(N)); }

// Sharpness set by integer cross-multiplication, without rationals:
// beta = bn/bd, compare bn * a_{n+1-j} > bd * a_{n-j}.
IndexSet sharpness_by_cross_multiplication(const IntPolynomial& p) {
  const std::size_t n = p.degree();
  BigInt bn = p[0], bd = p[1];
  for (std::size_t k = 1; k < n; ++k) {
    if (p[k] * bd > bn * p[k + 1]) {
      bn = p[k];
      bd = p[k + 1];
    }
  }
  IndexSet S;
  for (std::size_t j = 1; j <= n + 1; ++j) {
    const BigInt num = j == n + 1 ? BigInt(0) : p[n - j];
    if (bn * p[n + 1 - j] > bd * num) S.push_back(j);
  }
  return S;
}

}  // namespace

TEST_CASE("ek_alpha_beta") {
  auto ab = ek_alpha_beta(P(3));
  CHECK(ab.alpha == Rational(3, 5));
  CHECK(ab.beta == 2);
  ab = ek_alpha_beta(P(4));
  CHECK(ab.alpha == 2);
  CHECK(ab.beta == 2);
  ab = ek_alpha_beta(P(10));
  CHECK(ab.alpha == Rational(5, 8));
  CHECK(ab.beta == 2);

  CHECK_THROWS_AS(ek_alpha_beta(IntPolynomial{1, 0, 1}), DomainError);
  CHECK_THROWS_AS(ek_alpha_beta(IntPolynomial{-1, 1}), DomainError);
  CHECK_THROWS_AS(ek_alpha_beta(IntPolynomial{5}), DomainError);
}

TEST_CASE("theorem1_bounds") {
  auto b = theorem1_bounds(trajectory(3));
  CHECK(b.lower == Rational(3, 5));
  CHECK(b.upper == 2);
  b = theorem1_bounds(trajectory(8));
  CHECK(b.lower == 2);
  CHECK(b.upper == 2);
  b = theorem1_bounds(trajectory(10));
  CHECK(b.lower == Rational(5, 8));
  CHECK(b.upper == 2);
}

TEST_CASE("sharpness_set_S, index_set_T and gcd_d examples") {
  CHECK(sharpness_set_S(P(4)) == IndexSet{3});
  CHECK(sharpness_set_S(P(3)) == IndexSet{4, 5, 6});
  CHECK(sharpness_set_S(P(2)) == IndexSet{2});

  CHECK(index_set_T(trajectory(10)) == IndexSet{4, 6});
  CHECK(index_set_T(trajectory(4)) == IndexSet{3});
  CHECK(index_set_T(trajectory(3)) == IndexSet{4, 5, 6});
  CHECK(index_set_T(trajectory(16)) == IndexSet{5});

  CHECK(gcd_d({4, 6}) == 2);
  CHECK(gcd_d({3}) == 3);
  CHECK(gcd_d({4, 5, 6}) == 1);
  CHECK_THROWS_AS(gcd_d({}), DomainError);
}

TEST_CASE("upper_strictness") {
  CHECK(upper_strictness(trajectory(3)).strict);

  const UpperVerdict v10 = upper_strictness(trajectory(10));
  CHECK_FALSE(v10.strict);
  CHECK(v10.d == 2);
  REQUIRE(v10.factorization);
  REQUIRE(v10.factorization->boundary_roots.size() == 1);
  CHECK(std::abs(v10.factorization->boundary_roots[0].value() + 2.0) < 1e-15);
  CHECK(eval_exact(P(10), BigInt(-2)) == 0);

  const UpperVerdict v4 = upper_strictness(trajectory(4));
  CHECK_FALSE(v4.strict);
  CHECK(v4.d == 3);
  REQUIRE(v4.factorization);
  CHECK(v4.factorization->boundary_roots.size() == 2);
}

TEST_CASE("lower_strictness") {
  CHECK_FALSE(lower_strictness(trajectory(8)).strict);
  const LowerVerdict v3 = lower_strictness(trajectory(3));
  CHECK(v3.strict);
  CHECK(*v3.reciprocal_beta == Rational(5, 3));
  CHECK(*v3.reciprocal_gcd == 1);
  CHECK(lower_strictness(trajectory(10)).strict);
}

TEST_CASE("reciprocal_beta_identity_check") {
  CHECK(reciprocal_beta_identity_check(trajectory(3)));
  CHECK(reciprocal_beta_identity_check(trajectory(10)));
  CHECK(reciprocal_beta_identity_check(trajectory(7)));
  CHECK(*least_odd_iterate(trajectory(7)).value == 5);
  CHECK_THROWS_AS(reciprocal_beta_identity_check(trajectory(64)), DomainError);
}

TEST_CASE("certify_no_boundary_roots") {
  const NoBoundaryCertificate c = certify_no_boundary_roots(trajectory(3));
  CHECK(c.value_at_minus_two != 0);
  CHECK(c.primes_checked == std::vector<std::size_t>{2, 3});  // n + 1 = 6
  CHECK_THROWS_AS(certify_no_boundary_roots(trajectory(10)), DomainError);
  CHECK(prime_divisors(360) == std::vector<std::size_t>{2, 3, 5});
  CHECK(prime_divisors(97) == std::vector<std::size_t>{97});
  CHECK(prime_divisors(1).empty());
}

TEST_CASE("ek_report composes the verdicts") {
  const EKReport r = ek_report(trajectory(16));
  CHECK(r.lower_bound == 2);
  CHECK(r.upper_bound == 2);
  CHECK_FALSE(r.lower_strict);
  CHECK_FALSE(r.upper_strict);
  CHECK(r.d == 5);
  CHECK(r.T == IndexSet{5});

  const EKReport r3 = ek_report(trajectory(3));
  CHECK(r3.lower_strict);
  CHECK(r3.upper_strict);
  CHECK(r3.d == 1);
  CHECK_FALSE(r3.factorization);
}

TEST_CASE("report invariants for N <= 4096") {
  for (long N = 2; N <= 4096; ++N) {
    const Trajectory t = trajectory(N);
    const IntPolynomial p = build_collatz_polynomial(t);
    const EKReport r = ek_report(t);
    REQUIRE(r.alpha <= r.beta);
    REQUIRE(r.lower_bound == r.alpha);
    REQUIRE(r.upper_bound == r.beta);
    REQUIRE(r.T.back() == t.n + 1);
    REQUIRE(r.upper_strict == (r.d == 1));
    REQUIRE(r.lower_strict == !is_power_of_two(N));
    REQUIRE(r.d == oracle::circle_gcd(static_cast<std::uint64_t>(N)));
    REQUIRE(sharpness_set_S(p) == sharpness_by_cross_multiplication(p));
    REQUIRE(index_set_T(t) == sharpness_set_S(p));

    // Two consecutive odd coefficients force d = 1.
    for (std::size_t k = 0; k + 1 < t.n; ++k) {
      if (t.parities[k] && t.parities[k + 1]) {
        REQUIRE(r.d == 1);
        break;
      }
    }
    if (r.d == 1) {
      certify_no_boundary_roots(t);
    } else {
      REQUIRE(r.factorization);
    }
    // -2 = 2 * (-1) is a boundary root exactly when -1 is a d-th root of unity.
    REQUIRE((eval_exact(p, BigInt(-2)) == 0) == (r.d % 2 == 0));
  }
}
