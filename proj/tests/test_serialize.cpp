#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "collatz_zeros/serialize.hpp"

using namespace collatz;

namespace {

std::string reserialize(const std::string& text) { return Json::parse(text).dump(); }

}  // namespace

TEST_CASE("rational and big integer encodings") {
  CHECK(rational_to_json(Rational(10, 16)).dump() == R"({"den":"8","num":"5"})");
  CHECK(rational_from_json(Json::parse(R"({"num":"-6","den":"4"})")) == Rational(-3, 2));
  CHECK_THROWS_AS(rational_from_json(Json::parse(R"({"num":"1","den":"0"})")), DomainError);

  BigInt big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 30);
  CHECK(bigint_to_json(big).is_string());
  CHECK(bigint_from_json(bigint_to_json(big)) == big);
  CHECK(bigint_to_json(BigInt(42)) == Json(42));
  CHECK(bigint_from_json(Json(-7)) == -7);
  CHECK_THROWS_AS(bigint_from_json(Json(1.5)), DomainError);
  CHECK_THROWS_AS(parse_bigint("12a"), DomainError);
  CHECK_THROWS_AS(parse_bigint(""), DomainError);
}

TEST_CASE("polynomial JSON keeps coefficients as decimal strings") {
  const Trajectory t = trajectory(10);
  const IntPolynomial p = build_collatz_polynomial(t);
  const Json j = polynomial_to_json(t.start, p);
  CHECK(j.dump() == R"({"N":10,"coeffs":["10","5","8","4","2","1"]})");
  CHECK(polynomial_from_json(j) == p);
}

TEST_CASE("JSON serialize -> parse -> serialize is byte-identical") {
  for (long N : {2L, 3L, 10L, 16L, 27L, 40L, 77031L}) {
    const Trajectory t = trajectory(N);
    const std::string report = report_to_json(ek_report(t)).dump();
    CHECK(reserialize(report) == report);
    const std::string traj = trajectory_to_json(t).dump();
    CHECK(reserialize(traj) == traj);
    const IntPolynomial p = build_collatz_polynomial(t);
    const RootSet r = find_roots(p);
    const std::string roots = rootset_to_json(r, vieta_check(p, r)).dump();
    CHECK(reserialize(roots) == roots);
  }
  const DensitySweepResult s = density_sweep(3000);
  const std::string text = sweep_to_json(s).dump();
  CHECK(reserialize(text) == text);
  CHECK(sweep_to_json(sweep_from_json(Json::parse(text))).dump() == text);
}

TEST_CASE("report JSON content for N = 10") {
  const Json j = report_to_json(ek_report(trajectory(10)));
  CHECK(j["lower_bound"] == rational_to_json(Rational(5, 8)));
  CHECK(j["upper_bound"] == rational_to_json(Rational(2)));
  CHECK(j["T"] == Json::array({4, 6}));
  CHECK(j["d"] == 2);
  CHECK(j["M"] == 5);
  CHECK(j["circle_factorization"]["Q"] == Json::array({"10", "32", "32"}));
  CHECK(j["circle_factorization"]["boundary_roots"][0]["re"] == -2.0);
  CHECK(report_to_json(ek_report(trajectory(8)))["M"].is_null());
}

TEST_CASE("sweep JSON schema") {
  const Json j = sweep_to_json(density_sweep(4));
  CHECK(j.size() == 5);
  CHECK(j["n_max"] == 4);
  CHECK(j["count"] == 2);
  CHECK(j["fraction"] == rational_to_json(Rational(2, 3)));
  CHECK(j["markov_bound_avg"].is_number_float());
  CHECK(j["li_bound"].is_number_float());
}

TEST_CASE("float formatting") {
  CHECK(format_shortest(0.1) == "0.1");
  CHECK(format_shortest(-2.0) == "-2");
  CHECK(std::stod(format_shortest(1.0 / 3)) == 1.0 / 3);
  CHECK(format_17g(0.1) == "0.10000000000000001");
  CHECK(format_17g(-2.0) == "-2");
}

TEST_CASE("root CSV rows") {
  const Trajectory t = trajectory(2);
  const RootSet r = find_roots(build_collatz_polynomial(t));
  std::ostringstream os;
  write_root_csv_rows(os, r);
  CHECK(os.str().rfind("2,0,-2,", 0) == 0);
  CHECK(std::string(kRootCsvHeader) == "N,root_index,re,im,modulus,residual");
}

TEST_CASE("atomic file writes") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "collatz_zeros_serialize_test";
  fs::create_directories(dir);
  const fs::path target = dir / "out.json";
  write_file_atomic(target, "first");
  write_file_atomic(target, "second");
  std::ifstream in(target);
  std::string content((std::istreambuf_iterator<char>(in)), {});
  CHECK(content == "second");
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++files;
  CHECK(files == 1);  // no stray temporaries
  CHECK_THROWS_WITH_AS(write_file_atomic(dir / "missing" / "x.json", "x"),
                       doctest::Contains("missing"), IoError);
  fs::remove_all(dir);
}
