#include "collatz_zeros/experiments.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <numeric>
#include <queue>
#include <string>
#include <thread>

#include "collatz_zeros/errors.hpp"

namespace collatz {

bool parity_permutation_check(unsigned k, unsigned max_k) {
  if (k > max_k) {
    throw DomainError("parity_permutation_check: k = " + std::to_string(k) + " exceeds cap " +
                      std::to_string(max_k));
  }
  if (k > 30) throw DomainError("parity_permutation_check: table for k > 30 is too large");
  const std::uint64_t size = std::uint64_t{1} << (k + 1);
  constexpr std::uint64_t kUnseen = ~std::uint64_t{0};
  std::vector<std::uint64_t> owner(size, kUnseen);
  std::uint64_t odd_at_k = 0;
  for (std::uint64_t r = 0; r < size; ++r) {
    const std::uint64_t w = parity_word(r, k);
    if (owner[w] != kUnseen) {
      throw CertificationError("parity vectors collide for residues " + std::to_string(owner[w]) +
                               " and " + std::to_string(r) + " mod 2^" + std::to_string(k + 1));
    }
    owner[w] = r;
    odd_at_k += (w >> k) & 1u;
  }
  if (2 * odd_at_k != size) {
    throw CertificationError("parity bit x_k is odd for " + std::to_string(odd_at_k) + " of " +
                             std::to_string(size) + " residues");
  }
  return true;
}

BigInt no_two_heads_count(std::size_t n) {
  BigInt prev = 1;  // length 0
  BigInt cur = 2;   // length 1
  if (n == 0) return prev;
  for (std::size_t i = 1; i < n; ++i) {
    BigInt next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Rational q_exact(std::size_t n) {
  if (n == 0) throw DomainError("q_exact: n must be >= 1");
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, n);
  return make_rational(no_two_heads_count(n), den);
}

bool q_bound_check(std::size_t n_max) {
  if (n_max == 0) throw DomainError("q_bound_check: n_max must be >= 1");
  for (std::size_t n = 1; n <= n_max; ++n) {
    const Rational bound = make_rational(BigInt(6), from_u64(n));
    const Rational q = q_exact(n);
    if (q > bound) {
      throw CertificationError("q_" + std::to_string(n) + " = " + q.get_str() + " exceeds 6/" +
                               std::to_string(n));
    }
  }
  return true;
}

double s_bound(double N) {
  if (!(N >= 2)) throw DomainError("s_bound: N must be >= 2");
  return 6.0 * std::numbers::ln2 / std::log(2.0 * N);
}

namespace {

// 15-point Kronrod rule with its embedded 7-point Gauss rule.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <typename F>
Panel gauss_kronrod(const F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kXgk[i];
    const double sum = f(c - dx) + f(c + dx);
    kronrod += kWgk[i] * sum;
    if (i % 2 == 1) gauss += kWg[i / 2] * sum;
  }
  return {a, b, kronrod * h, std::abs((kronrod - gauss) * h)};
}

}  // namespace

double logarithmic_integral(double x, double rel_tol) {
  if (!(x >= 2)) throw DomainError("logarithmic_integral: x must be >= 2");
  if (x == 2) return 0.0;
  const auto f = [](double u) { return 1.0 / std::log(u); };

  // Seed with geometrically spaced panels; the integrand varies on the
  // scale of u itself.
  std::priority_queue<Panel> panels;
  const int seeds = std::max(1, static_cast<int>(std::ceil(std::log2(x / 2.0))));
  double total = 0, err = 0;
  for (int s = 0; s < seeds; ++s) {
    const double a = 2.0 * std::pow(x / 2.0, static_cast<double>(s) / seeds);
    const double b = s + 1 == seeds ? x : 2.0 * std::pow(x / 2.0, static_cast<double>(s + 1) / seeds);
    Panel p = gauss_kronrod(f, a, b);
    total += p.value;
    err += p.error;
    panels.push(p);
  }
  for (int iter = 0; iter < 100000 && err > rel_tol * std::abs(total); ++iter) {
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = gauss_kronrod(f, worst.a, mid);
    const Panel right = gauss_kronrod(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }
  // Re-sum in a fixed order to shed drift from the running updates.
  std::vector<Panel> all;
  all.reserve(panels.size());
  while (!panels.empty()) {
    all.push_back(panels.top());
    panels.pop();
  }
  std::sort(all.begin(), all.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
  double sum = 0;
  for (const auto& p : all) sum += p.value;
  return sum;
}

double li_upper_bound(std::uint64_t n) {
  if (n < 2) throw DomainError("li_upper_bound: n must be >= 2");
  return 3.0 * std::numbers::ln2 / static_cast<double>(n - 1) *
         logarithmic_integral(2.0 * static_cast<double>(n));
}

std::size_t circle_gcd(const Trajectory& t) {
  std::size_t g = t.n + 1;
  for (std::size_t j = 1; j <= t.n && g > 1; ++j) {
    if (t.parities[t.n - j]) g = std::gcd(g, j);
  }
  return g;
}

void parallel_for_range(std::uint64_t low, std::uint64_t high, unsigned threads,
                        const std::function<void(std::uint64_t)>& body) {
  if (high < low) return;
  const std::uint64_t count = high - low + 1;
  const std::uint64_t workers = std::clamp<std::uint64_t>(threads, 1, count);
  if (workers == 1) {
    for (std::uint64_t N = low; N <= high; ++N) body(N);
    return;
  }
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = low + count * w / workers;
    const std::uint64_t end = low + count * (w + 1) / workers;  // exclusive
    pool.emplace_back([&, begin, end] {
      try {
        for (std::uint64_t N = begin; N < end; ++N) body(N);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

DensitySweepResult density_sweep(std::uint64_t n_max, const SweepOptions& options) {
  if (n_max < 2) throw DomainError("density_sweep: n_max must be >= 2");
  std::vector<std::uint32_t> d(n_max - 1);
  parallel_for_range(2, n_max, options.threads, [&](std::uint64_t N) {
    d[N - 2] = static_cast<std::uint32_t>(circle_gcd(trajectory(from_u64(N), options.max_steps)));
  });

  DensitySweepResult r;
  r.n_max = n_max;
  r.count_equality = static_cast<std::uint64_t>(
      std::count_if(d.begin(), d.end(), [](std::uint32_t v) { return v > 1; }));
  r.fraction = make_rational(from_u64(r.count_equality), from_u64(n_max - 1));
  double sum = 0;
  for (std::uint64_t t = 2; t <= n_max; ++t) sum += s_bound(static_cast<double>(t));
  r.markov_bound_avg = sum / static_cast<double>(n_max - 1);
  r.li_bound = li_upper_bound(n_max);
  if (options.keep_per_n) r.per_n_d = std::move(d);
  return r;
}

}  // namespace collatz
