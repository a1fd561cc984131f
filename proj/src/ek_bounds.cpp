#include "collatz_zeros/ek_bounds.hpp"

#include <numeric>
#include <string>

#include "collatz_zeros/errors.hpp"

namespace collatz {

namespace {

void require_positive(const IntPolynomial& p, const char* who) {
  if (p.degree() < 1) throw DomainError(std::string(who) + ": degree must be >= 1");
  for (std::size_t k = 0; k <= p.degree(); ++k) {
    if (p[k] <= 0) {
      throw DomainError(std::string(who) + ": coefficient a_" + std::to_string(k) +
                        " is not strictly positive");
    }
  }
}

Rational ratio(const BigInt& num, const BigInt& den) { return make_rational(num, den); }

}  // namespace

AlphaBeta ek_alpha_beta(const IntPolynomial& p) {
  require_positive(p, "ek_alpha_beta");
  AlphaBeta ab{ratio(p[0], p[1]), ratio(p[0], p[1])};
  for (std::size_t k = 1; k < p.degree(); ++k) {
    const Rational r = ratio(p[k], p[k + 1]);
    if (r < ab.alpha) ab.alpha = r;
    if (r > ab.beta) ab.beta = r;
  }
  return ab;
}

ModulusBounds theorem1_bounds(const Trajectory& t) {
  if (t.start < 2) throw DomainError("theorem1_bounds: N must be >= 2");
  const LeastOddIterate m = least_odd_iterate(t);
  // M = -1/2 gives 2M/(3M+1) = 2: every root of the geometric partial sum
  // lies on |z| = 2.
  if (m.is_none()) return {Rational(2), Rational(2)};
  const BigInt& M = *m.value;
  return {make_rational(2 * M, 3 * M + 1), Rational(2)};
}

IndexSet sharpness_set_S(const IntPolynomial& p) {
  const AlphaBeta ab = ek_alpha_beta(p);
  const std::size_t n = p.degree();
  IndexSet S;
  for (std::size_t j = 1; j <= n + 1; ++j) {
    // a_{-1} = 0 makes j = n + 1 always qualify.
    if (j == n + 1) {
      S.push_back(j);
      continue;
    }
    // beta > a_{n-j} / a_{n+1-j}  <=>  beta * a_{n+1-j} > a_{n-j}
    if (ab.beta * p[n + 1 - j] > p[n - j]) S.push_back(j);
  }
  return S;
}

IndexSet index_set_T(const Trajectory& t) {
  IndexSet T;
  for (std::size_t j = 1; j <= t.n; ++j) {
    if (t.parities[t.n - j]) T.push_back(j);
  }
  T.push_back(t.n + 1);
  return T;
}

std::size_t gcd_d(const IndexSet& T) {
  if (T.empty()) throw DomainError("gcd_d: empty index set");
  std::size_t g = 0;
  for (std::size_t j : T) g = std::gcd(g, j);
  return g;
}

UpperVerdict upper_strictness(const Trajectory& t) {
  UpperVerdict v;
  v.d = gcd_d(index_set_T(t));
  v.strict = v.d == 1;
  if (!v.strict) {
    const IntPolynomial scaled = scale_argument_by_2(build_collatz_polynomial(t));
    v.factorization = extract_circle_factorization(scaled, v.d);
  }
  return v;
}

LowerVerdict lower_strictness(const Trajectory& t) {
  LowerVerdict v;
  if (least_odd_iterate(t).is_none()) {
    v.strict = false;
    return v;
  }
  const IntPolynomial rec = reciprocal(build_collatz_polynomial(t));
  v.reciprocal_beta = ek_alpha_beta(rec).beta;
  v.reciprocal_gcd = gcd_d(sharpness_set_S(rec));
  if (*v.reciprocal_gcd != 1) {
    throw CertificationError("lower_strictness: gcd of S[reciprocal(P_" + to_decimal(t.start) +
                             ")] is " + std::to_string(*v.reciprocal_gcd) + ", expected 1");
  }
  return v;
}

bool reciprocal_beta_identity_check(const Trajectory& t) {
  const LeastOddIterate m = least_odd_iterate(t);
  if (m.is_none()) {
    throw DomainError("reciprocal_beta_identity_check: N = " + to_decimal(t.start) +
                      " is a power of 2");
  }
  const IntPolynomial p = build_collatz_polynomial(t);
  const Rational inv_alpha = 1 / ek_alpha_beta(p).alpha;
  const Rational closed_form = Rational(3, 2) + make_rational(BigInt(1), 2 * *m.value);
  const Rational rec_beta = ek_alpha_beta(reciprocal(p)).beta;
  const std::string who = "N = " + to_decimal(t.start) + ": ";
  if (inv_alpha != closed_form) {
    throw CertificationError(who + "1/alpha[P_N] = " + inv_alpha.get_str() +
                             " differs from 3/2 + 1/(2M) = " + closed_form.get_str());
  }
  if (closed_form != rec_beta) {
    throw CertificationError(who + "3/2 + 1/(2M) = " + closed_form.get_str() +
                             " differs from beta[reciprocal] = " + rec_beta.get_str());
  }
  return true;
}

std::vector<std::size_t> prime_divisors(std::size_t x) {
  std::vector<std::size_t> primes;
  for (std::size_t p = 2; p * p <= x; ++p) {
    if (x % p != 0) continue;
    primes.push_back(p);
    while (x % p == 0) x /= p;
  }
  if (x > 1) primes.push_back(x);
  return primes;
}

NoBoundaryCertificate certify_no_boundary_roots(const Trajectory& t) {
  if (gcd_d(index_set_T(t)) != 1) {
    throw DomainError("certify_no_boundary_roots: N = " + to_decimal(t.start) +
                      " has boundary roots (d > 1)");
  }
  const IntPolynomial p = build_collatz_polynomial(t);
  NoBoundaryCertificate cert;
  cert.value_at_minus_two = eval_exact(p, BigInt(-2));
  if (cert.value_at_minus_two == 0) {
    throw CertificationError("P_" + to_decimal(t.start) + "(-2) = 0 although d = 1");
  }
  const IntPolynomial scaled = scale_argument_by_2(p);
  for (std::size_t prime : prime_divisors(t.n + 1)) {
    if (exact_divide(scaled, repunit_polynomial(prime)).remainder.is_zero()) {
      throw CertificationError("P_" + to_decimal(t.start) + "(2z) is divisible by 1 + ... + z^" +
                               std::to_string(prime - 1) + " although d = 1");
    }
    cert.primes_checked.push_back(prime);
  }
  return cert;
}

EKReport ek_report(const Trajectory& t) {
  EKReport r;
  r.N = t.start;
  r.n = t.n;
  r.M = least_odd_iterate(t);
  const AlphaBeta ab = ek_alpha_beta(build_collatz_polynomial(t));
  r.alpha = ab.alpha;
  r.beta = ab.beta;
  const ModulusBounds b = theorem1_bounds(t);
  r.lower_bound = b.lower;
  r.upper_bound = b.upper;
  r.T = index_set_T(t);
  const UpperVerdict up = upper_strictness(t);
  r.d = up.d;
  r.upper_strict = up.strict;
  r.factorization = up.factorization;
  r.lower_strict = lower_strictness(t).strict;
  return r;
}

}  // namespace collatz
