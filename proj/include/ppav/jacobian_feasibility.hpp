#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ppav {

inline constexpr long kMaxScanGenus = 10;
inline constexpr long kMaxScanGroupOrder = 20;
inline constexpr std::size_t kMaxBranchPoints = 64;

/// R = 2g - 2 - |G| (2g' - 2) from Riemann-Hurwitz; infeasible when negative.
struct Residual {
  long value = 0;
  bool feasible() const noexcept { return value >= 0; }
};

/// Throws InvalidArgument for negative genera or group_order < 2.
Residual rh_residual(long g, long g_prime, long group_order);

struct CoverDatum {
  long g = 0;
  long g_prime = 0;
  long group_order = 2;
  std::vector<long> ramification;  // indices r_P >= 2 over the branch points
};

/// sum (|G| / r)(r - 1). Throws InvalidArgument unless every r >= 2 divides |G|.
long ramification_sum(long group_order, const std::vector<long>& indices);

/// True iff the ramification data realizes the Riemann-Hurwitz residual.
bool is_consistent(const CoverDatum& c);

/// A multiset of indices r | |G| realizing R with as few branch points as
/// possible (ties: larger indices first), or nullopt.
std::optional<std::vector<long>> realize_ramification(long group_order, long r,
                                                      std::size_t max_points = kMaxBranchPoints);

struct GenusBound {
  long g_max = 0;
  /// (g, g') with 2 <= g <= g_max, g' < g, each admitting some |S| >= 2.
  std::vector<std::pair<long, long>> cases;
};

/// Scan g <= kMaxScanGenus with g' = g - 1 and 2 <= |S| <= kMaxScanGroupOrder.
GenusBound pseudoreflection_genus_bound();

struct Branch {
  std::string group;
  std::string test;
  long lhs = 0;
  long rhs = 0;
  bool eliminated = false;
};

struct Case31Report {
  std::vector<Branch> branches;
  /// Geometric inputs taken on trust, not computed.
  std::vector<std::string> assumptions;

  bool all_eliminated() const;
};

Case31Report case31_contradictions();

struct CaseRow {
  long g = 0;
  long g_prime = 0;
  std::optional<long> group_order;
  std::optional<long> residual;
  bool survives = false;
  std::string reason;
};

struct JacobianReport {
  std::vector<CaseRow> cases;
  std::vector<CaseRow> survivors() const;
};

/// The five-case analysis for curves of genus >= 2.
JacobianReport jacobian_cases();

}  // namespace ppav
