#include "collatz_zeros/polynomial.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "collatz_zeros/errors.hpp"

namespace collatz {

namespace {

void trim(std::vector<BigInt>& c) {
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  if (c.empty()) c.emplace_back(0);
}

// Double-double helpers: a value is hi + lo with |lo| <= ulp(hi)/2.
struct DD {
  double hi = 0;
  double lo = 0;
};

inline DD two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline DD quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DD dd_add(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  DD t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DD dd_neg(DD a) { return {-a.hi, -a.lo}; }

inline DD dd_mul(DD a, DD b) {
  DD p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

// Exact-ish conversion of a big coefficient into double-double.
DD to_dd(const BigInt& x) {
  const double hi = x.get_d();
  BigInt rest = x - BigInt(hi);
  return quick_two_sum(hi, rest.get_d());
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("polynomial needs at least one coefficient");
  if (coeffs_.size() > 1 && coeffs_.back() == 0) {
    throw DomainError("leading coefficient must be nonzero");
  }
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  if (coeffs_.empty()) throw DomainError("polynomial needs at least one coefficient");
  if (coeffs_.size() > 1 && coeffs_.back() == 0) {
    throw DomainError("leading coefficient must be nonzero");
  }
}

std::vector<double> IntPolynomial::to_doubles() const {
  std::vector<double> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_d());
  return out;
}

std::complex<double> BoundaryRoot::value() const {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(d);
  return std::polar(2.0, angle);
}

IntPolynomial CircleFactorization::expanded_quotient() const {
  std::vector<BigInt> c(d * quotient_q.degree() + 1, BigInt(0));
  for (std::size_t i = 0; i <= quotient_q.degree(); ++i) c[d * i] = quotient_q[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial build_collatz_polynomial(const Trajectory& t) {
  if (t.start < 2 || t.iterates.empty()) {
    throw DomainError("build_collatz_polynomial: trajectory must start at N >= 2");
  }
  return IntPolynomial(t.iterates);
}

IntPolynomial reciprocal(const IntPolynomial& p) {
  if (p[0] == 0) throw DomainError("reciprocal: constant term is zero");
  return IntPolynomial(std::vector<BigInt>(p.coeffs().rbegin(), p.coeffs().rend()));
}

Rational eval_exact(const IntPolynomial& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t k = p.degree() + 1; k-- > 0;) {
    acc = acc * x + p[k];
  }
  acc.canonicalize();
  return acc;
}

BigInt eval_exact(const IntPolynomial& p, const BigInt& x) {
  BigInt acc = 0;
  for (std::size_t k = p.degree() + 1; k-- > 0;) acc = acc * x + p[k];
  return acc;
}

GaussianInteger eval_exact(const IntPolynomial& p, const GaussianInteger& x) {
  GaussianInteger acc{0, 0};
  for (std::size_t k = p.degree() + 1; k-- > 0;) {
    BigInt re = acc.re * x.re - acc.im * x.im + p[k];
    BigInt im = acc.re * x.im + acc.im * x.re;
    acc.re = std::move(re);
    acc.im = std::move(im);
  }
  return acc;
}

std::complex<double> eval_complex(const IntPolynomial& p, std::complex<double> z) {
  std::complex<double> acc = 0;
  for (std::size_t k = p.degree() + 1; k-- > 0;) acc = acc * z + p[k].get_d();
  return acc;
}

std::complex<double> eval_complex_accurate(const IntPolynomial& p, std::complex<double> z) {
  const DD zr{z.real(), 0};
  const DD zi{z.imag(), 0};
  DD re{}, im{};
  for (std::size_t k = p.degree() + 1; k-- > 0;) {
    const DD nre = dd_add(dd_add(dd_mul(re, zr), dd_neg(dd_mul(im, zi))), to_dd(p[k]));
    const DD nim = dd_add(dd_mul(re, zi), dd_mul(im, zr));
    re = nre;
    im = nim;
  }
  return {re.hi + re.lo, im.hi + im.lo};
}

double eval_magnitude(const IntPolynomial& p, std::complex<double> z) {
  const double r = std::abs(z);
  double acc = 0;
  for (std::size_t k = p.degree() + 1; k-- > 0;) acc = acc * r + std::abs(p[k].get_d());
  return acc;
}

IntPolynomial scale_argument_by_2(const IntPolynomial& p) {
  std::vector<BigInt> c(p.coeffs());
  for (std::size_t k = 1; k < c.size(); ++k) {
    mpz_mul_2exp(c[k].get_mpz_t(), c[k].get_mpz_t(), k);
  }
  return IntPolynomial(std::move(c));
}

DivisionResult exact_divide(const IntPolynomial& dividend, const IntPolynomial& divisor) {
  if (divisor.leading() != 1) throw DomainError("exact_divide: divisor must be monic");
  const std::size_t m = divisor.degree();
  if (dividend.degree() < m) return {IntPolynomial(), dividend};
  std::vector<BigInt> rem(dividend.coeffs());

  const std::size_t qdeg = dividend.degree() - m;
  std::vector<BigInt> quot(qdeg + 1);
  for (std::size_t i = qdeg + 1; i-- > 0;) {
    quot[i] = rem[i + m];
    if (quot[i] == 0) continue;
    for (std::size_t k = 0; k <= m; ++k) {
      if (divisor[k] == 0) continue;
      rem[i + k] -= quot[i] * divisor[k];
    }
  }
  rem.resize(m == 0 ? 1 : m);
  trim(rem);
  trim(quot);
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(a.degree() + b.degree() + 1, BigInt(0));
  for (std::size_t i = 0; i <= a.degree(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j <= b.degree(); ++j) c[i + j] += a[i] * b[j];
  }
  trim(c);
  return IntPolynomial(std::move(c));
}

IntPolynomial repunit_polynomial(std::size_t d) {
  if (d == 0) throw DomainError("repunit_polynomial: d must be >= 1");
  return IntPolynomial(std::vector<BigInt>(d, BigInt(1)));
}

CircleFactorization extract_circle_factorization(const IntPolynomial& p_scaled, std::size_t d) {
  if (d < 2) throw DomainError("extract_circle_factorization: d must be >= 2");
  const auto [quotient, remainder] = exact_divide(p_scaled, repunit_polynomial(d));
  const std::string where = " (d = " + std::to_string(d) + ", degree " +
                            std::to_string(p_scaled.degree()) + ")";
  if (!remainder.is_zero()) {
    throw CertificationError("circle factorization: nonzero remainder" + where);
  }
  if (quotient.degree() % d != 0) {
    throw CertificationError("circle factorization: quotient degree not a multiple of d" + where);
  }
  std::vector<BigInt> q;
  q.reserve(quotient.degree() / d + 1);
  for (std::size_t k = 0; k <= quotient.degree(); ++k) {
    if (k % d != 0) {
      if (quotient[k] != 0) {
        throw CertificationError("circle factorization: quotient has exponent " +
                                 std::to_string(k) + " not divisible by d" + where);
      }
      continue;
    }
    if (quotient[k] <= 0) {
      throw CertificationError("circle factorization: Q coefficient of w^" +
                               std::to_string(k / d) + " is not positive" + where);
    }
    q.push_back(quotient[k]);
  }

  CircleFactorization f;
  f.d = d;
  f.quotient_q = IntPolynomial(std::move(q));
  for (std::size_t j = 1; j < d; ++j) f.boundary_roots.push_back({j, d});
  return f;
}

}  // namespace collatz
