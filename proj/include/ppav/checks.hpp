#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ppav/serialization.hpp"

namespace ppav {

struct CheckOptions {
  std::size_t gmax = 6;
  std::vector<std::size_t> factors{2, 3};
  /// Defaults to the number of elementary divisors of the factors.
  std::optional<std::size_t> ydim;
  std::uint64_t seed = 0;
};

enum class CheckStatus { Pass, Fail, Error };
std::string_view to_string(CheckStatus s) noexcept;

struct CheckOutcome {
  bool passed = false;
  Json witnesses = Json::object();
};

struct CheckResult {
  std::string check_id;
  CheckStatus status = CheckStatus::Error;
  Json witnesses = Json::object();
  double elapsed_ms = 0;
};

struct CheckSpec {
  std::string id;
  std::string summary;
  std::function<CheckOutcome(const CheckOptions&)> run;
};

const std::vector<CheckSpec>& check_catalog();
bool is_known_check(std::string_view id);

/// Library errors become status Error with the message as witness.
/// Throws UnknownCheck for an id outside the catalog.
CheckResult run_check(std::string_view id, const CheckOptions& options);

/// Runs the selected checks concurrently (all when ids is empty) and returns
/// the results in selection order. Throws UnknownCheck before running anything.
std::vector<CheckResult> run_checks(const std::vector<std::string>& ids, const CheckOptions& options);

/// {check_id, status, witnesses, elapsed_ms}
Json to_json(const CheckResult& r);

/// Random symmetric positive definite integral matrix with entries in [-bound, bound].
IntMatrix random_positive_block(std::mt19937_64& rng, std::size_t g, long bound);
/// Random alternating integral matrix of size n with entries in [-bound, bound].
IntMatrix random_alternating(std::mt19937_64& rng, std::size_t n, long bound);

/// Prime-power decomposition of a finite abelian group given by cyclic orders.
std::vector<Integer> primary_parts(const std::vector<Integer>& orders);

}  // namespace ppav
