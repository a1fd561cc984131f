#include "collatz_zeros/rootfinder.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "kernels/scalar_impl.hpp"

namespace collatz {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Points kept structure-of-arrays so SIMD kernels can stream over them.
template <typename T>
struct Points {
  std::vector<T> re;
  std::vector<T> im;
};

template <typename T>
struct Evaluation {
  std::vector<T> p_re, p_im, dp_re, dp_im, mag;

  explicit Evaluation(std::size_t n) : p_re(n), p_im(n), dp_re(n), dp_im(n), mag(n) {}
};

// Backend over plain doubles, delegating the data-parallel loops to a kernel set.
struct DoubleBackend {
  using Real = double;
  const kernels::KernelSet& set;
  std::vector<double> coeffs;

  void horner(const Points<double>& z, Evaluation<double>& e) const {
    set.horner(coeffs, z.re.data(), z.im.data(), z.re.size(),
               {e.p_re.data(), e.p_im.data(), e.dp_re.data(), e.dp_im.data(), e.mag.data()});
  }
  void aberth_sum(const Points<double>& z, std::size_t i, double& sr, double& si) const {
    set.aberth_sum(z.re.data(), z.im.data(), z.re.size(), i, &sr, &si);
  }
};

struct ExtendedBackend {
  using Real = long double;
  std::vector<long double> coeffs;

  void horner(const Points<long double>& z, Evaluation<long double>& e) const {
    for (std::size_t i = 0; i < z.re.size(); ++i) {
      kernels::detail::horner_point(coeffs.data(), coeffs.size(), z.re[i], z.im[i], e.p_re[i],
                                    e.p_im[i], e.dp_re[i], e.dp_im[i], e.mag[i]);
    }
  }
  void aberth_sum(const Points<long double>& z, std::size_t i, long double& sr,
                  long double& si) const {
    kernels::detail::aberth_sum_point(z.re.data(), z.im.data(), z.re.size(), i, sr, si);
  }
};

struct IterationOutcome {
  std::vector<std::complex<double>> roots;
  int iterations = 0;
  bool all_frozen = false;
};

template <typename Backend>
IterationOutcome aberth(const Backend& backend, std::size_t n, double inner, double outer,
                        double offset, const RootFinderConfig& config) {
  using T = typename Backend::Real;
  const T eps = std::numeric_limits<T>::epsilon();
  const T noise = T(2) * T(n) * eps;
  const T tol = static_cast<T>(config.tol);
  const double radius = std::sqrt(inner * outer);
  const T lo = static_cast<T>(inner);
  const T hi = static_cast<T>(outer);

  Points<T> z{std::vector<T>(n), std::vector<T>(n)};
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) +
                         offset;
    z.re[k] = static_cast<T>(radius * std::cos(angle));
    z.im[k] = static_cast<T>(radius * std::sin(angle));
  }

  std::vector<std::uint8_t> frozen(n, 0);
  std::vector<std::size_t> active;
  Points<T> za;
  Points<T> next = z;
  IterationOutcome out;

  while (out.iterations < config.max_iter) {
    active.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (!frozen[i]) active.push_back(i);
    }
    if (active.empty()) break;
    ++out.iterations;

    za.re.resize(active.size());
    za.im.resize(active.size());
    for (std::size_t a = 0; a < active.size(); ++a) {
      za.re[a] = z.re[active[a]];
      za.im[a] = z.im[active[a]];
    }
    Evaluation<T> e(active.size());
    backend.horner(za, e);

    for (std::size_t a = 0; a < active.size(); ++a) {
      const std::size_t i = active[a];
      const std::complex<T> pv(e.p_re[a], e.p_im[a]);
      const std::complex<T> dpv(e.dp_re[a], e.dp_im[a]);
      if (pv == std::complex<T>(0)) {
        frozen[i] = 1;
        continue;
      }
      T sr, si;
      backend.aberth_sum(z, i, sr, si);
      const std::complex<T> newton = pv / dpv;
      std::complex<T> w = newton / (T(1) - newton * std::complex<T>(sr, si));
      const std::complex<T> zi(z.re[i], z.im[i]);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
        // Stationary point of p or a collision: rotate the estimate.
        const std::complex<T> moved = zi * std::polar(T(1), T(0.3)) + std::complex<T>(eps, eps);
        next.re[i] = moved.real();
        next.im[i] = moved.imag();
        continue;
      }
      std::complex<T> moved = zi - w;
      // Every root lies in the annulus lo <= |z| <= hi; pull escaped
      // estimates back radially so Horner never overflows.
      const T m = std::abs(moved);
      if (m > hi) {
        moved *= hi / m;
      } else if (m < lo && m > 0) {
        moved *= lo / m;
      }
      next.re[i] = moved.real();
      next.im[i] = moved.imag();
      if (std::abs(w) < tol || std::abs(pv) <= noise * e.mag[a]) frozen[i] = 1;
    }
    for (std::size_t i : active) {
      z.re[i] = next.re[i];
      z.im[i] = next.im[i];
    }
  }

  out.all_frozen = true;
  for (std::size_t i = 0; i < n; ++i) out.all_frozen = out.all_frozen && frozen[i];
  out.roots.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.roots[i] = {static_cast<double>(z.re[i]), static_cast<double>(z.im[i])};
  }
  return out;
}

double scaled_residual(const IntPolynomial& p, std::complex<double> z, bool accurate) {
  const double mag = eval_magnitude(p, z);
  const std::complex<double> v = accurate ? eval_complex_accurate(p, z) : eval_complex(p, z);
  return mag > 0 ? std::abs(v) / mag : std::abs(v);
}

}  // namespace

double start_angle_offset(std::uint64_t seed, std::size_t degree) {
  const double u = static_cast<double>(splitmix64(seed) >> 11) * 0x1.0p-53;
  return (0.1 + 0.8 * u) * 2.0 * std::numbers::pi / static_cast<double>(degree);
}

RootSet find_roots(const IntPolynomial& p, const RootFinderConfig& config) {
  if (p.degree() < 1) throw DomainError("find_roots: polynomial must have degree >= 1");
  const AlphaBeta ab = ek_alpha_beta(p);  // also rejects non-positive coefficients
  const std::size_t n = p.degree();
  const double inner = ab.alpha.get_d();
  const double outer = std::nextafter(ab.beta.get_d(), 2 * ab.beta.get_d());
  const double offset = start_angle_offset(config.seed, n);

  RootSet rs;
  rs.N = p[0];
  IterationOutcome outcome;
  if (config.precision == Precision::extended) {
    ExtendedBackend backend;
    for (const auto& c : p.coeffs()) {
      // Split so coefficients wider than a double survive into long double.
      const double hi = c.get_d();
      const BigInt rest = c - BigInt(hi);
      backend.coeffs.push_back(static_cast<long double>(hi) + static_cast<long double>(rest.get_d()));
    }
    rs.kernel = "scalar-extended";
    outcome = aberth(backend, n, inner, outer, offset, config);
  } else {
    DoubleBackend backend{kernels::select_kernels(config.kernel), p.to_doubles()};
    rs.kernel = std::string(backend.set.name);
    outcome = aberth(backend, n, inner, outer, offset, config);
  }

  rs.roots = std::move(outcome.roots);
  rs.iterations_used = outcome.iterations;
  rs.residuals.resize(n);
  bool accepted = true;
  for (std::size_t i = 0; i < n; ++i) {
    double r = scaled_residual(p, rs.roots[i], false);
    if (!(r <= config.residual_tol)) r = scaled_residual(p, rs.roots[i], true);
    rs.residuals[i] = r;
    accepted = accepted && r <= config.residual_tol;
  }
  rs.converged = outcome.all_frozen && accepted;
  if (!rs.converged) {
    std::string why = outcome.all_frozen ? "residual above tolerance"
                                         : "corrections still above tolerance after " +
                                               std::to_string(config.max_iter) + " iterations";
    throw NonConvergenceError("find_roots: " + why + " (degree " + std::to_string(n) +
                                  ", a_0 = " + to_decimal(p[0]) + ")",
                              std::move(rs));
  }
  return rs;
}

VietaDiagnostics vieta_check(const IntPolynomial& p, const RootSet& r) {
  const std::size_t n = p.degree();
  VietaDiagnostics v;
  v.sum = 0;
  v.product = 1;
  for (const auto& z : r.roots) {
    v.sum += z;
    v.product *= z;
  }
  const double lead = p.leading().get_d();
  v.expected_sum = n >= 1 ? -p[n - 1].get_d() / lead : 0.0;
  v.expected_product = (n % 2 == 0 ? 1.0 : -1.0) * p[0].get_d() / lead;
  v.sum_error = std::abs(v.sum - v.expected_sum);
  v.product_error = std::abs(v.product - v.expected_product);
  v.sum_rel_error = v.expected_sum != 0 ? v.sum_error / std::abs(v.expected_sum) : v.sum_error;
  v.product_rel_error =
      v.expected_product != 0 ? v.product_error / std::abs(v.expected_product) : v.product_error;
  return v;
}

BoundCheck bound_check(std::span<const std::complex<double>> roots, double lower, double upper,
                       double margin) {
  BoundCheck c;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const double m = std::abs(roots[i]);
    if (!(m >= lower - margin && m <= upper + margin)) {
      c.ok = false;
      c.violations.push_back({i, m});
    }
  }
  return c;
}

BoundCheck bound_check(const RootSet& r, const ModulusBounds& bounds, double margin) {
  return bound_check(r.roots, bounds.lower.get_d(), bounds.upper.get_d(), margin);
}

}  // namespace collatz
