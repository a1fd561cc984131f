#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "collatz_zeros/bigint.hpp"
#include "collatz_zeros/collatz.hpp"
#include "collatz_zeros/ek_bounds.hpp"
#include "collatz_zeros/experiments.hpp"
#include "collatz_zeros/polynomial.hpp"
#include "collatz_zeros/rootfinder.hpp"

namespace collatz {

using Json = nlohmann::json;

/// Integers that fit in 64 bits become JSON numbers; larger ones decimal
/// strings. read_bigint accepts both.
Json bigint_to_json(const BigInt& x);
BigInt bigint_from_json(const Json& j);

/// {"num": "...", "den": "..."}
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// {"N": int, "coeffs": ["...", ...]}
Json polynomial_to_json(const BigInt& N, const IntPolynomial& p);
IntPolynomial polynomial_from_json(const Json& j);

Json trajectory_to_json(const Trajectory& t);
Json factorization_to_json(const CircleFactorization& f);
Json report_to_json(const EKReport& r);
Json rootset_to_json(const RootSet& r, const VietaDiagnostics& v);

/// {"n_max", "count", "fraction", "markov_bound_avg", "li_bound"}
Json sweep_to_json(const DensitySweepResult& r);
DensitySweepResult sweep_from_json(const Json& j);

/// Shortest decimal that reads back to the same double.
std::string format_shortest(double x);

/// Fixed 17 significant digits, used for the root CSV columns.
std::string format_17g(double x);

inline constexpr const char* kRootCsvHeader = "N,root_index,re,im,modulus,residual";

/// One row per root, no header.
void write_root_csv_rows(std::ostream& os, const RootSet& r);

/// Writes through a temporary in the same directory and renames it into
/// place. Throws IoError carrying the path.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace collatz
