#include "collatz_zeros/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "collatz_zeros/collatz.hpp"
#include "collatz_zeros/ek_bounds.hpp"
#include "collatz_zeros/experiments.hpp"
#include "collatz_zeros/plot.hpp"
#include "collatz_zeros/polynomial.hpp"
#include "collatz_zeros/rootfinder.hpp"
#include "collatz_zeros/serialize.hpp"

namespace collatz::cli {

namespace {

std::size_t step_cap() {
  const char* env = std::getenv("COLLATZ_MAX_STEPS");
  if (!env || !*env) return kDefaultMaxSteps;
  const BigInt v = parse_bigint(env);
  if (v < 1) throw DomainError("COLLATZ_MAX_STEPS must be positive");
  return static_cast<std::size_t>(to_u64(v));
}

BigInt parse_start(const std::string& text) {
  BigInt N = parse_bigint(text);
  if (N < 2) throw DomainError("N must be an integer >= 2, got " + text);
  return N;
}

struct RootOptions {
  double tol = 1e-12;
  double residual_tol = 1e-10;
  int max_iter = 500;
  std::uint64_t seed = 0;
  bool extended = false;
  std::string kernel = "auto";

  RootFinderConfig config() const {
    RootFinderConfig c;
    c.tol = tol;
    c.residual_tol = residual_tol;
    c.max_iter = max_iter;
    c.seed = seed;
    c.precision = extended ? Precision::extended : Precision::standard;
    c.kernel = kernels::parse_kernel_choice(kernel);
    return c;
  }
};

void add_root_options(CLI::App* cmd, RootOptions& o) {
  cmd->add_option("--tol", o.tol, "Stop refining a root once its correction is below this");
  cmd->add_option("--residual-tol", o.residual_tol, "Largest accepted scaled residual");
  cmd->add_option("--max-iter", o.max_iter, "Iteration limit");
  cmd->add_option("--seed", o.seed, "Seed for the starting-circle rotation");
  cmd->add_flag("--extended", o.extended, "Iterate in long double");
  cmd->add_option("--kernel", o.kernel, "Kernel set: auto, scalar, avx2, neon");
}

int cmd_trajectory(const std::string& arg, bool json, std::ostream& out) {
  const Trajectory t = trajectory(parse_start(arg), step_cap());
  if (json) {
    out << trajectory_to_json(t).dump() << '\n';
    return kSuccess;
  }
  const LeastOddIterate m = least_odd_iterate(t);
  out << "N = " << to_decimal(t.start) << '\n'
      << "n = " << t.n << '\n'
      << "M = " << (m.is_none() ? std::string("none") : to_decimal(*m.value)) << '\n'
      << "iterates:";
  for (const auto& x : t.iterates) out << ' ' << to_decimal(x);
  out << "\nparities:";
  for (auto b : t.parities) out << ' ' << static_cast<int>(b);
  out << '\n';
  return kSuccess;
}

Json full_report(const Trajectory& t) {
  const EKReport r = ek_report(t);
  Json j = report_to_json(r);
  j["polynomial"] = polynomial_to_json(t.start, build_collatz_polynomial(t));
  const LowerVerdict lower = lower_strictness(t);
  if (lower.reciprocal_beta) {
    j["lower_certificate"] = Json{{"reciprocal_beta", rational_to_json(*lower.reciprocal_beta)},
                                  {"reciprocal_sharpness_gcd", *lower.reciprocal_gcd}};
  } else {
    j["lower_certificate"] = nullptr;
  }
  if (r.upper_strict) {
    const NoBoundaryCertificate c = certify_no_boundary_roots(t);
    j["upper_certificate"] = Json{{"value_at_minus_two", to_decimal(c.value_at_minus_two)},
                                  {"primes_checked", c.primes_checked}};
  } else {
    j["upper_certificate"] = nullptr;
  }
  return j;
}

int cmd_roots(const std::string& arg, const RootOptions& o, const std::string& format,
              std::ostream& out, std::ostream& err) {
  const Trajectory t = trajectory(parse_start(arg), step_cap());
  const IntPolynomial p = build_collatz_polynomial(t);
  const RootSet rs = find_roots(p, o.config());
  const VietaDiagnostics v = vieta_check(p, rs);
  if (format == "json") {
    out << rootset_to_json(rs, v).dump() << '\n';
  } else {
    out << kRootCsvHeader << '\n';
    write_root_csv_rows(out, rs);
    err << "vieta: sum_rel_error=" << format_shortest(v.sum_rel_error)
        << " product_rel_error=" << format_shortest(v.product_rel_error) << '\n';
  }
  return kSuccess;
}

int cmd_sweep(std::uint64_t n_max, unsigned threads, const std::string& out_path,
              const std::string& flags_path, std::ostream& out) {
  SweepOptions opts;
  opts.threads = threads;
  opts.keep_per_n = !flags_path.empty();
  opts.max_steps = step_cap();
  const DensitySweepResult r = density_sweep(n_max, opts);
  const std::string json = sweep_to_json(r).dump() + "\n";
  if (!out_path.empty()) write_file_atomic(out_path, json);
  if (!flags_path.empty()) {
    std::ostringstream csv;
    csv << "N,d\n";
    for (std::uint64_t N = 2; N <= n_max; ++N) csv << N << ',' << r.per_n_d[N - 2] << '\n';
    write_file_atomic(flags_path, csv.str());
  }
  out << json;
  return kSuccess;
}

int cmd_plot(PlotSpec spec, const std::string& color, const std::string& csv_path,
             unsigned threads, const RootOptions& o, std::ostream& out, std::ostream& err) {
  if (color == "uniform") {
    spec.color_rule = ColorRule::uniform;
  } else if (color == "by_modulus") {
    spec.color_rule = ColorRule::by_modulus;
  } else {
    throw DomainError("unknown color rule '" + color + "'");
  }
  spec.validate();
  const RootFinderConfig config = o.config();
  const std::size_t cap = step_cap();
  const std::uint64_t total = spec.high - spec.low + 1;
  std::vector<std::optional<RootSet>> sets(total);
  std::vector<std::string> failures(total);
  parallel_for_range(spec.low, spec.high, threads, [&](std::uint64_t N) {
    const std::size_t slot = N - spec.low;
    try {
      sets[slot] = find_roots(build_collatz_polynomial(trajectory(from_u64(N), cap)), config);
    } catch (const NonConvergenceError& e) {
      failures[slot] = e.what();
    }
  });

  std::uint64_t skipped = 0;
  std::vector<std::complex<double>> points;
  std::ostringstream csv;
  csv << kRootCsvHeader << '\n';
  for (std::uint64_t slot = 0; slot < total; ++slot) {
    if (!sets[slot]) {
      ++skipped;
      err << "skipped N = " << spec.low + slot << ": " << failures[slot] << '\n';
      continue;
    }
    points.insert(points.end(), sets[slot]->roots.begin(), sets[slot]->roots.end());
    write_root_csv_rows(csv, *sets[slot]);
  }
  // More than 0.1% of the range failing aborts the figure.
  if (skipped * 1000 > total) {
    err << "plot: " << skipped << " of " << total << " polynomials failed to converge\n";
    return kNonConvergence;
  }
  write_file_atomic(spec.output_path, render_svg(spec, points));
  const std::string csv_out = csv_path.empty() ? spec.output_path + ".csv" : csv_path;
  write_file_atomic(csv_out, csv.str());
  out << "wrote " << points.size() << " zeros of " << (total - skipped) << " polynomials to "
      << spec.output_path << " and " << csv_out << '\n';
  return kSuccess;
}

struct VerifyOptions {
  std::uint64_t n_max = 4096;
  unsigned k_max = 12;
  std::size_t q_max = 64;
  unsigned threads = 1;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  bool ok = true;
  const auto check = [&](const std::string& name, const std::function<void()>& body) {
    try {
      body();
      out << "PASS " << name << '\n';
    } catch (const std::exception& e) {
      ok = false;
      out << "FAIL " << name << '\n';
      err << name << ": " << e.what() << '\n';
    }
  };

  check("parity permutation k <= " + std::to_string(o.k_max), [&] {
    for (unsigned k = 0; k <= o.k_max; ++k) parity_permutation_check(k, std::max(o.k_max, 16u));
  });
  check("q_n <= 6/n for n <= " + std::to_string(o.q_max), [&] { q_bound_check(o.q_max); });
  check("q_n recurrence for n <= " + std::to_string(o.q_max), [&] {
    for (std::size_t n = 3; n <= o.q_max; ++n) {
      if (no_two_heads_count(n) != no_two_heads_count(n - 1) + no_two_heads_count(n - 2)) {
        throw CertificationError("recurrence fails at n = " + std::to_string(n));
      }
    }
  });
  check("exact certificates for 2 <= N <= " + std::to_string(o.n_max), [&] {
    const std::size_t cap = step_cap();
    parallel_for_range(2, o.n_max, o.threads, [&](std::uint64_t N) {
      const Trajectory t = trajectory(from_u64(N), cap);
      const IntPolynomial p = build_collatz_polynomial(t);
      const std::string who = "N = " + std::to_string(N) + ": ";
      if (index_set_T(t) != sharpness_set_S(p)) throw CertificationError(who + "S != T");
      if (!least_odd_iterate(t).is_none()) reciprocal_beta_identity_check(t);
      lower_strictness(t);
      if (upper_strictness(t).strict) certify_no_boundary_roots(t);
    });
  });
  out << (ok ? "all checks passed" : "some checks FAILED") << '\n';
  return ok ? kSuccess : kCertification;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Collatz polynomials: exact zero bounds, strictness certificates and root clouds",
               "collatz-zeros"};
  app.require_subcommand(1);

  std::string n_arg;
  bool json = false;
  auto* traj = app.add_subcommand("trajectory", "Print the trajectory, n(N) and M");
  traj->add_option("N", n_arg, "Starting value (>= 2)")->required();
  traj->add_flag("--json", json, "Emit JSON");

  auto* report = app.add_subcommand("report", "Certified bound and strictness report (JSON)");
  report->add_option("N", n_arg, "Starting value (>= 2)")->required();

  RootOptions root_opts;
  std::string format = "csv";
  auto* roots = app.add_subcommand("roots", "All complex zeros of P_N");
  roots->add_option("N", n_arg, "Starting value (>= 2)")->required();
  roots->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  add_root_options(roots, root_opts);

  std::uint64_t n_max = 0;
  unsigned threads = 1;
  std::string out_path, flags_path;
  auto* sweep = app.add_subcommand("sweep", "Count N <= n_max with zeros on |z| = 2");
  sweep->add_option("n_max", n_max, "Upper end of the range [2, n_max]")->required();
  sweep->add_option("--threads", threads, "Worker threads");
  sweep->add_option("--out", out_path, "Also write the JSON summary here");
  sweep->add_option("--flags-csv", flags_path, "Write per-N gcd values as CSV (N,d)");

  PlotSpec spec;
  std::string color = "uniform";
  std::string csv_path;
  std::vector<double> circles;
  auto* plot = app.add_subcommand("plot", "SVG scatter of every zero for N in [low, high]");
  plot->add_option("--low", spec.low, "First N");
  plot->add_option("--high", spec.high, "Last N")->required();
  plot->add_option("--width", spec.width_px, "Width in pixels");
  plot->add_option("--height", spec.height_px, "Height in pixels");
  plot->add_option("--radius", spec.point_radius_px, "Dot radius in pixels");
  plot->add_option("--circle", circles, "Overlay circle radius (repeatable, default 2)");
  plot->add_option("--color", color, "uniform or by_modulus");
  plot->add_option("--out", spec.output_path, "SVG path");
  plot->add_option("--csv", csv_path, "Companion root CSV path (default <out>.csv)");
  plot->add_option("--threads", threads, "Worker threads");
  add_root_options(plot, root_opts);

  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Run the exact invariant suite");
  verify->add_option("--n-max", verify_opts.n_max, "Certify every N in [2, n_max]");
  verify->add_option("--k", verify_opts.k_max, "Parity permutation up to k");
  verify->add_option("--q-max", verify_opts.q_max, "q_n bound up to n");
  verify->add_option("--threads", verify_opts.threads, "Worker threads");

  std::vector<std::string> storage{"collatz-zeros"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*traj) return cmd_trajectory(n_arg, json, out);
    if (*report) {
      out << full_report(trajectory(parse_start(n_arg), step_cap())).dump() << '\n';
      return kSuccess;
    }
    if (*roots) return cmd_roots(n_arg, root_opts, format, out, err);
    if (*sweep) return cmd_sweep(n_max, threads, out_path, flags_path, out);
    if (*plot) {
      if (!circles.empty()) spec.overlay_circles = circles;
      return cmd_plot(spec, color, csv_path, threads, root_opts, out, err);
    }
    if (*verify) return cmd_verify(verify_opts, out, err);
  } catch (const NonConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << '\n';
    return kCertification;
  } catch (const CertificationError& e) {
    err << "certification failure: " << e.what() << '\n';
    return kCertification;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const DomainError& e) {
    err << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCertification;
  }
  return kUsage;
}

}  // namespace collatz::cli
