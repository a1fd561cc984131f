#include "collatz_zeros/serialize.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <system_error>
#include <unistd.h>

#include "collatz_zeros/errors.hpp"

namespace collatz {

Json bigint_to_json(const BigInt& x) {
  if (fits_u64(x)) return Json(to_u64(x));
  if (x < 0 && mpz_fits_slong_p(x.get_mpz_t())) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(to_decimal(x));
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_unsigned()) return from_u64(j.get<std::uint64_t>());
  if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  throw DomainError("expected an integer or decimal string in JSON, got " + j.dump());
}

Json rational_to_json(const Rational& value) {
  Rational q(value);
  q.canonicalize();
  return Json{{"num", to_decimal(q.get_num())}, {"den", to_decimal(q.get_den())}};
}

Rational rational_from_json(const Json& j) {
  const BigInt num = parse_bigint(j.at("num").get<std::string>());
  const BigInt den = parse_bigint(j.at("den").get<std::string>());
  if (den == 0) throw DomainError("rational with zero denominator");
  return make_rational(num, den);
}

Json polynomial_to_json(const BigInt& N, const IntPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_decimal(c));
  return Json{{"N", bigint_to_json(N)}, {"coeffs", std::move(coeffs)}};
}

IntPolynomial polynomial_from_json(const Json& j) {
  std::vector<BigInt> c;
  for (const auto& s : j.at("coeffs")) c.push_back(parse_bigint(s.get<std::string>()));
  return IntPolynomial(std::move(c));
}

namespace {

Json least_odd_to_json(const LeastOddIterate& m) {
  return m.is_none() ? Json(nullptr) : bigint_to_json(*m.value);
}

}  // namespace

Json trajectory_to_json(const Trajectory& t) {
  Json iterates = Json::array();
  for (const auto& x : t.iterates) iterates.push_back(to_decimal(x));
  return Json{{"N", bigint_to_json(t.start)},
              {"n", t.n},
              {"M", least_odd_to_json(least_odd_iterate(t))},
              {"iterates", std::move(iterates)},
              {"parities", t.parities}};
}

Json factorization_to_json(const CircleFactorization& f) {
  Json q = Json::array();
  for (const auto& c : f.quotient_q.coeffs()) q.push_back(to_decimal(c));
  Json roots = Json::array();
  for (const auto& r : f.boundary_roots) {
    const auto z = r.value();
    roots.push_back(Json{{"radius", 2}, {"j", r.j}, {"d", r.d}, {"re", z.real()}, {"im", z.imag()}});
  }
  return Json{{"d", f.d}, {"Q", std::move(q)}, {"boundary_roots", std::move(roots)}};
}

Json report_to_json(const EKReport& r) {
  return Json{{"N", bigint_to_json(r.N)},
              {"n", r.n},
              {"M", least_odd_to_json(r.M)},
              {"alpha", rational_to_json(r.alpha)},
              {"beta", rational_to_json(r.beta)},
              {"lower_bound", rational_to_json(r.lower_bound)},
              {"upper_bound", rational_to_json(r.upper_bound)},
              {"T", r.T},
              {"d", r.d},
              {"lower_strict", r.lower_strict},
              {"upper_strict", r.upper_strict},
              {"circle_factorization",
               r.factorization ? factorization_to_json(*r.factorization) : Json(nullptr)}};
}

Json rootset_to_json(const RootSet& r, const VietaDiagnostics& v) {
  Json roots = Json::array();
  for (std::size_t i = 0; i < r.roots.size(); ++i) {
    roots.push_back(Json{{"index", i},
                         {"re", r.roots[i].real()},
                         {"im", r.roots[i].imag()},
                         {"modulus", std::abs(r.roots[i])},
                         {"residual", r.residuals[i]}});
  }
  return Json{{"N", bigint_to_json(r.N)},
              {"degree", r.roots.size()},
              {"kernel", r.kernel},
              {"iterations", r.iterations_used},
              {"converged", r.converged},
              {"roots", std::move(roots)},
              {"vieta",
               {{"sum_error", v.sum_error},
                {"product_error", v.product_error},
                {"sum_rel_error", v.sum_rel_error},
                {"product_rel_error", v.product_rel_error}}}};
}

Json sweep_to_json(const DensitySweepResult& r) {
  return Json{{"n_max", r.n_max},
              {"count", r.count_equality},
              {"fraction", rational_to_json(r.fraction)},
              {"markov_bound_avg", r.markov_bound_avg},
              {"li_bound", r.li_bound}};
}

DensitySweepResult sweep_from_json(const Json& j) {
  DensitySweepResult r;
  r.n_max = j.at("n_max").get<std::uint64_t>();
  r.count_equality = j.at("count").get<std::uint64_t>();
  r.fraction = rational_from_json(j.at("fraction"));
  r.markov_bound_avg = j.at("markov_bound_avg").get<double>();
  r.li_bound = j.at("li_bound").get<double>();
  return r;
}

std::string format_shortest(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string format_17g(double x) {
  char buf[64];
  const int len = std::snprintf(buf, sizeof buf, "%.17g", x);
  return std::string(buf, static_cast<std::size_t>(len));
}

void write_root_csv_rows(std::ostream& os, const RootSet& r) {
  const std::string n = to_decimal(r.N);
  for (std::size_t i = 0; i < r.roots.size(); ++i) {
    const auto z = r.roots[i];
    os << n << ',' << i << ',' << format_17g(z.real()) << ',' << format_17g(z.imag()) << ','
       << format_17g(std::abs(z)) << ',' << format_17g(r.residuals[i]) << '\n';
  }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  namespace fs = std::filesystem;
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw IoError("write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw IoError("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
  }
}

}  // namespace collatz
