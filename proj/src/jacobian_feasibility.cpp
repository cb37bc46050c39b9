#include "ppav/jacobian_feasibility.hpp"

#include <algorithm>
#include <functional>
#include <iterator>

#include "ppav/error.hpp"

namespace ppav {

namespace {

std::vector<long> divisors_above_one(long n) {
  std::vector<long> out;
  for (long r = n; r >= 2; --r)
    if (n % r == 0) out.push_back(r);
  return out;
}

bool admits_cover(long g, long g_prime) {
  for (long order = 2; order <= kMaxScanGroupOrder; ++order) {
    Residual r = rh_residual(g, g_prime, order);
    if (r.feasible() && realize_ramification(order, r.value)) return true;
  }
  return false;
}

}  // namespace

Residual rh_residual(long g, long g_prime, long group_order) {
  if (g < 0 || g_prime < 0) throw Error(ErrorKind::InvalidArgument, "genera must be >= 0");
  if (group_order < 2) throw Error(ErrorKind::InvalidArgument, "group order must be >= 2");
  return {2 * g - 2 - group_order * (2 * g_prime - 2)};
}

long ramification_sum(long group_order, const std::vector<long>& indices) {
  long sum = 0;
  for (long r : indices) {
    if (r < 2 || group_order % r != 0)
      throw Error(ErrorKind::InvalidArgument, "ramification index must be >= 2 and divide |G|");
    sum += group_order / r * (r - 1);
  }
  return sum;
}

bool is_consistent(const CoverDatum& c) {
  Residual r = rh_residual(c.g, c.g_prime, c.group_order);
  return r.feasible() && ramification_sum(c.group_order, c.ramification) == r.value;
}

std::optional<std::vector<long>> realize_ramification(long group_order, long r, std::size_t max_points) {
  if (group_order < 2) throw Error(ErrorKind::InvalidArgument, "group order must be >= 2");
  if (r < 0) return std::nullopt;
  const std::vector<long> divs = divisors_above_one(group_order);
  std::vector<long> chosen;
  std::function<bool(std::size_t, long, std::size_t)> search = [&](std::size_t from, long left,
                                                                   std::size_t points) {
    if (left == 0) return points == 0;
    if (points == 0) return false;
    for (std::size_t i = from; i < divs.size(); ++i) {
      const long c = group_order / divs[i] * (divs[i] - 1);
      if (c > left) continue;
      chosen.push_back(divs[i]);
      if (search(i, left - c, points - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (std::size_t k = 0; k <= max_points; ++k) {
    chosen.clear();
    if (search(0, r, k)) return chosen;
  }
  return std::nullopt;
}

GenusBound pseudoreflection_genus_bound() {
  GenusBound out;
  for (long g = 2; g <= kMaxScanGenus; ++g)
    if (admits_cover(g, g - 1)) out.g_max = g;
  for (long g = out.g_max; g >= 2; --g)
    for (long gp = g - 1; gp >= 0; --gp)
      if (admits_cover(g, gp)) out.cases.emplace_back(g, gp);
  return out;
}

bool Case31Report::all_eliminated() const {
  return !branches.empty() &&
         std::all_of(branches.begin(), branches.end(), [](const Branch& b) { return b.eliminated; });
}

Case31Report case31_contradictions() {
  Case31Report out;

  // (Z/2)^2: |f^*E cap X| = |G|^2 but it sits in the 2-torsion of an elliptic curve.
  const long klein = 4;
  const long two_torsion = 1L << (2 * 1);
  out.branches.push_back({"(Z/2)^2", "|G|^2 <= |E[2]|", klein * klein, two_torsion,
                          klein * klein > two_torsion});

  // S_3: C'' = C/H with |H| = 3 covers E with degree 2, so g'' >= 1; g'' = 1 is
  // excluded by minimality, leaving g'' = 2 and an order 3 cover of genus 3 over genus 2.
  const Residual below = rh_residual(0, 1, 2);
  out.branches.push_back({"S3", "g'' = 0 covers E", below.value, 0, !below.feasible()});
  const Residual h3 = rh_residual(3, 2, 3);
  out.branches.push_back({"S3", "R(3, 2, |H| = 3) >= 0", h3.value, 0, !h3.feasible()});

  out.assumptions = {
      "f: C -> E is minimal (Galois covers of elliptic curves), which excludes g'' = 1",
      "|f^*E cap X| = |G|^2 for a minimal cover of degree |G|",
      "some element of (Z/2)^2 acts as -1 on X, so f^*E cap X is 2-torsion",
  };
  return out;
}

std::vector<CaseRow> JacobianReport::survivors() const {
  std::vector<CaseRow> out;
  std::copy_if(cases.begin(), cases.end(), std::back_inserter(out),
               [](const CaseRow& c) { return c.survives; });
  return out;
}

JacobianReport jacobian_cases() {
  JacobianReport report;
  const GenusBound bound = pseudoreflection_genus_bound();
  const Case31Report c31 = case31_contradictions();

  for (const auto& [g, gp] : bound.cases) {
    if (gp == 0) {
      report.cases.push_back({g, gp, std::nullopt, std::nullopt, false,
                              "dim J_C^G = g' = 0, so the fixed part Y would be trivial"});
    } else if (g == 3 && gp == 2) {
      std::vector<long> orders;
      for (long n = 2; n <= kMaxScanGroupOrder; ++n)
        if (rh_residual(g, gp, n).feasible()) orders.push_back(n);
      CaseRow row{g, gp, std::nullopt, std::nullopt, false, ""};
      if (orders.size() == 1) {
        row.group_order = orders.front();
        row.residual = rh_residual(g, gp, orders.front()).value;
        row.survives = true;
        row.reason = "Riemann-Hurwitz forces |G| = 2 and R = 0: etale double cover";
      } else {
        row.reason = "Riemann-Hurwitz leaves more than one group order";
      }
      report.cases.push_back(row);
    } else if (g == 2 && gp == 1) {
      const Residual r = rh_residual(g, gp, 2);
      const auto points = realize_ramification(2, r.value);
      report.cases.push_back({g, gp, 2, r.value, r.feasible() && points.has_value(),
                              "|G| = 2 by Broughton's classification (assumed); R = 2: two "
                              "branch points"});
    } else if (g == 3 && gp == 1) {
      for (const auto& [name, order] : {std::pair<std::string, long>{"(Z/2)^2", 4}, {"S3", 6}}) {
        bool found = false;
        bool eliminated = true;
        std::string reason = "eliminated:";
        for (const auto& b : c31.branches) {
          if (b.group != name) continue;
          found = true;
          eliminated = eliminated && b.eliminated;
          reason += " " + b.test + " fails (" + std::to_string(b.lhs) + " vs " +
                    std::to_string(b.rhs) + ");";
        }
        eliminated = eliminated && found;
        if (!eliminated) reason = "no contradiction found";
        report.cases.push_back(
            {g, gp, order, rh_residual(g, gp, order).value, !eliminated, "G = " + name + ", " + reason});
      }
    } else {
      report.cases.push_back({g, gp, std::nullopt, std::nullopt, false, "not analysed"});
    }
  }
  return report;
}

}  // namespace ppav
