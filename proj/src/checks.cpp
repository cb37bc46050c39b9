#include "ppav/checks.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <numeric>

#include "ppav/exact_linalg.hpp"

namespace ppav {

namespace {

Integer factorial(std::size_t n) {
  Integer f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<unsigned long>(k);
  return f;
}

Json types_json(const std::vector<Integer>& t) {
  Json out = Json::array();
  for (const auto& d : t) out.push_back(integer_to_json(d));
  return out;
}

std::size_t default_ydim(const CheckOptions& o) {
  if (o.ydim) return *o.ydim;
  std::vector<Integer> ms;
  for (std::size_t g : o.factors) ms.emplace_back(static_cast<unsigned long>(g + 1));
  return elementary_divisors(ms).size();
}

CheckOutcome lemma_xi_type(const CheckOptions& o) {
  CheckOutcome out{true, Json::object()};
  Json rows = Json::array();
  for (std::size_t g = 1; g <= o.gmax; ++g) {
    const PolarizedTorus xi = xi_g(g);
    std::vector<Integer> expected(g, Integer(1));
    expected.back() = static_cast<unsigned long>(g + 1);
    const std::vector<Integer> type = polarization_type(xi);
    const FiniteSymplecticGroup k = kernel_group(xi);
    const Rational t(1, static_cast<unsigned long>(g + 1));
    RatVector u(2 * g, Rational(0)), v(2 * g, Rational(0));
    for (std::size_t i = 0; i < g; ++i) {
      u[i] = t;
      v[g + i] = t;
    }
    const Integer n = static_cast<unsigned long>(g + 1);
    const bool diagonal = k.order() == n * n && k.contains(u) && k.contains(v);
    out.passed = out.passed && type == expected && diagonal;
    rows.push_back({{"g", g}, {"type", types_json(type)}, {"kernel_order", integer_to_json(k.order())},
                    {"diagonal_torsion", diagonal}});
  }
  out.witnesses["cases"] = rows;
  return out;
}

CheckOutcome group_orders(const CheckOptions&) {
  CheckOutcome out{true, Json::object()};
  Json a = Json::array();
  for (std::size_t g = 1; g <= 3; ++g)
    for (int m : {2, 3, 4, 6}) {
      const Integer expected = factorial(g) * [&] {
        Integer p = 1;
        for (std::size_t k = 0; k < g; ++k) p *= m;
        return p;
      }();
      const std::size_t order = example_a(g, m).group.order();
      out.passed = out.passed && Integer(static_cast<unsigned long>(order)) == expected;
      a.push_back({{"g", g}, {"m", m}, {"order", order}, {"expected", integer_to_json(expected)}});
    }
  Json b = Json::array();
  for (std::size_t g = 1; g <= 4; ++g) {
    const std::size_t order = example_b(g).group.order();
    out.passed = out.passed && Integer(static_cast<unsigned long>(order)) == factorial(g + 1);
    b.push_back({{"g", g}, {"order", order}});
  }
  const std::size_t c = example_c().group.order();
  out.passed = out.passed && c == 16;
  out.witnesses = {{"example_a", a}, {"example_b", b}, {"example_c", c}};
  return out;
}

CheckOutcome example_c_order(const CheckOptions&) {
  const Torus torus(QuadOrder::gaussian(), 2);
  const MatrixGroup group = closure(torus, example_c_generators());
  const AveragedForm avg = average_pullback(group, theta_g(2, QuadOrder::gaussian()));
  const FiniteSymplecticGroup k = kernel_group(PolarizedTorus(torus, avg.primitive));
  // (1+i)/2 in one coordinate: lattice coordinates 1/2 on e_j and on i e_j
  const Rational h(1, 2);
  const RatVector x1{h, 0, h, 0};
  const RatVector x2{0, h, 0, h};
  const bool kernel_ok = k.order() == 4 && k.contains(x1) && k.contains(x2);
  Json gens = Json::array();
  for (const auto& x : k.generators()) gens.push_back(rational_vector_to_json(x));
  return {group.order() == 16 && avg.multiplier == 16 && kernel_ok,
          {{"order", group.order()},
           {"multiplier", integer_to_json(avg.multiplier)},
           {"primitive_form", matrix_to_json(avg.primitive)},
           {"kernel_order", integer_to_json(k.order())},
           {"kernel_generators", gens}}};
}

CheckOutcome reflection_generation(const CheckOptions&) {
  CheckOutcome out{true, Json::object()};
  Json rows = Json::array();
  auto record = [&](const std::string& name, const MatrixGroup& g, bool expected) {
    const ReflectionSummary s = pseudoreflection_generated(g);
    out.passed = out.passed && s.generated == expected;
    rows.push_back({{"group", name}, {"generated", s.generated}, {"pseudoreflections", s.pseudoreflections}});
  };
  for (std::size_t g = 1; g <= 3; ++g)
    for (int m : {2, 3, 4, 6})
      record("a(" + std::to_string(g) + "," + std::to_string(m) + ")", example_a(g, m).group, true);
  for (std::size_t g = 1; g <= 4; ++g) record("b(" + std::to_string(g) + ")", example_b(g).group, true);
  record("c", example_c().group, true);
  const QuadOrder z = QuadOrder::integers();
  const std::vector<OrderMatrix> minus{OrderMatrix::scalar(z, 2, OrderElem(-1, 0))};
  record("{+-I} in g=2", closure(Torus(z, 2), minus), false);
  out.witnesses["groups"] = rows;
  return out;
}

CheckOutcome ns_ranks(const CheckOptions&) {
  CheckOutcome out{true, Json::object()};
  Json rows = Json::array();
  auto record = [&](const std::string& name, const GroupWithPolarization& gp) {
    const bool inv = invariant_form(gp.group, gp.polarization);
    const NsFixed ns = ns_fixed(gp.group);
    const bool gen = ns.rank == 1 && ns.basis.front() == gp.polarization.form();
    out.passed = out.passed && inv && gen;
    rows.push_back({{"pair", name}, {"invariant", inv}, {"rank", ns.rank}, {"generator_matches", gen}});
  };
  for (std::size_t g = 2; g <= 3; ++g) {
    for (int m : {2, 3, 4, 6}) record("a(" + std::to_string(g) + "," + std::to_string(m) + ")", example_a(g, m));
    record("b(" + std::to_string(g) + ")", example_b(g));
  }
  const GroupWithPolarization c = example_c();
  const bool inv_c = invariant_form(c.group, c.polarization);
  const NsFixed ns_c = ns_fixed(c.group);
  out.passed = out.passed && inv_c && ns_c.rank == 1 && ns_c.basis.front() == c.polarization.form();
  rows.push_back({{"pair", "c"}, {"invariant", inv_c}, {"rank", ns_c.rank}});
  out.witnesses["pairs"] = rows;
  return out;
}

Json glued_summary(const std::vector<std::size_t>& factors, std::size_t ydim, bool& passed) {
  const GluedPPAV a = build_standard(factors, ydim);
  const GluedReport r = verify_glued(a);
  Json w = {{"factors", factors}, {"y_dim", ydim}, {"divisors", types_json(a.divisors)},
            {"report", to_json(r)}};
  bool ok = r.ok() && abs(r.pfaffian) == 1;
  if (r.ok()) {
    const Decomposition d = decompose_glued(a);
    std::vector<Integer> y_expected(ydim - a.divisors.size(), Integer(1));
    y_expected.insert(y_expected.end(), a.divisors.begin(), a.divisors.end());
    std::vector<Integer> x_expected;
    for (std::size_t g : factors) {
      x_expected.insert(x_expected.end(), g - 1, Integer(1));
      x_expected.emplace_back(static_cast<unsigned long>(g + 1));
    }
    // compare X up to isomorphism of kernel groups
    const bool x_ok = primary_parts(d.x_type) == primary_parts(x_expected) &&
                      std::accumulate(d.x_type.begin(), d.x_type.end(), Integer(1), std::multiplies<>()) ==
                          std::accumulate(x_expected.begin(), x_expected.end(), Integer(1), std::multiplies<>());
    ok = ok && d.y_type == y_expected && x_ok;
    w["decomposition"] = {{"x_type", types_json(d.x_type)}, {"y_type", types_json(d.y_type)},
                          {"quotient_order", integer_to_json(d.quotient_order)}};
  }
  passed = passed && ok;
  return w;
}

CheckOutcome standard_build(const CheckOptions& o) {
  CheckOutcome out{true, Json::object()};
  out.witnesses = glued_summary(o.factors, default_ydim(o), out.passed);
  return out;
}

CheckOutcome standard_grid(const CheckOptions&) {
  CheckOutcome out{true, Json::object()};
  Json rows = Json::array();
  for (const auto& f : std::vector<std::vector<std::size_t>>{{1}, {2}, {1, 1}, {2, 3}}) {
    CheckOptions o;
    o.factors = f;
    rows.push_back(glued_summary(f, default_ydim(o), out.passed));
  }
  out.witnesses["builds"] = rows;
  return out;
}

CheckOutcome lem_k_property(const CheckOptions& o) {
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::size_t> dim(1, 3);
  CheckOutcome out{true, Json::object()};
  std::size_t agree = 0;
  Json failures = Json::array();
  for (int trial = 0; trial < 50; ++trial) {
    const PolarizedTorus x = from_symmetric_block(random_positive_block(rng, dim(rng), 5));
    const PolarizedTorus y = from_symmetric_block(random_positive_block(rng, dim(rng), 5));
    const FiniteSymplecticGroup kx = kernel_group(x);
    const FiniteSymplecticGroup ky = kernel_group(y);
    const FiniteSymplecticGroup kp = kernel_group(box_product(x, y));
    std::vector<Integer> merged = kx.orders();
    merged.insert(merged.end(), ky.orders().begin(), ky.orders().end());
    const bool ok = kp.order() == kx.order() * ky.order() &&
                    primary_parts(kp.orders()) == primary_parts(merged);
    if (ok) {
      ++agree;
    } else {
      failures.push_back({{"trial", trial}, {"x", to_json(x)}, {"y", to_json(y)}});
    }
  }
  out.passed = agree == 50;
  out.witnesses = {{"seed", o.seed}, {"trials", 50}, {"agree", agree}, {"failures", failures}};
  return out;
}

CheckOutcome non_fixed_kernels(const CheckOptions&) {
  CheckOutcome out{true, Json::object()};
  Json rows = Json::array();
  auto record = [&](const std::string& name, const MatrixGroup& g, const PolarizedTorus& p) {
    const bool fixed = action_on_kernel(g, kernel_group(p));
    out.passed = out.passed && !fixed;
    rows.push_back({{"case", name}, {"kernel_order", integer_to_json(kernel_group(p).order())},
                    {"fixed_by_group", fixed}, {"expected_fixed", false}});
  };
  for (int m : {2, 3}) {
    const GroupWithPolarization a = example_a(2, m);
    record("a(2," + std::to_string(m) + ") on K(" + std::to_string(m) + " Theta_2)", a.group,
           scale(a.polarization, m));
  }
  const GroupWithPolarization c = example_c();
  record("c on K(Xi_c)", c.group, c.polarization);
  record("c on K(2 Xi_c)", c.group, scale(c.polarization, 2));
  out.witnesses["cases"] = rows;
  return out;
}

CheckOutcome not_principal(const CheckOptions&) {
  CheckOutcome out{true, Json::object()};
  Json scans = Json::array();
  for (std::size_t n : {2, 3}) {
    const Prop39Report r = prop39_scan(n, 3);
    out.passed = out.passed && !r.principal_found;
    scans.push_back({{"n", n}, {"height", r.height}, {"vectors_scanned", r.vectors_scanned},
                     {"sublattices", r.entries.size()}, {"principal_found", r.principal_found}});
  }
  const IntMatrix diagonal{{1, 0}, {1, 0}, {0, 1}, {0, 1}};
  const std::vector<Integer> t = polarization_type(restrict_to(xi_g(2), diagonal));
  out.passed = out.passed && t == std::vector<Integer>{Integer(6)};
  out.witnesses = {{"scans", scans}, {"diagonal_type", types_json(t)}};
  return out;
}

CheckOutcome jacobian_check(const CheckOptions&) {
  const Residual r212 = rh_residual(2, 1, 2);
  const Residual r322 = rh_residual(3, 2, 2);
  const Residual r323 = rh_residual(3, 2, 3);
  const GenusBound bound = pseudoreflection_genus_bound();
  const Case31Report c31 = case31_contradictions();
  const JacobianReport report = jacobian_cases();
  const std::vector<std::pair<long, long>> five{{3, 2}, {3, 1}, {3, 0}, {2, 1}, {2, 0}};
  bool klein = false, s3 = false;
  for (const auto& b : c31.branches) {
    if (b.group == "(Z/2)^2") klein = b.eliminated && b.lhs == 16 && b.rhs == 4;
    if (b.group == "S3" && b.lhs == -2 && b.eliminated) s3 = true;
  }
  std::vector<std::tuple<long, long, long>> survivors;
  for (const auto& c : report.survivors()) survivors.emplace_back(c.g, c.g_prime, c.residual.value_or(-1));
  const bool passed = r212.value == 2 && r322.value == 0 && r323.value == -2 && !r323.feasible() &&
                      bound.g_max == 3 && bound.cases == five && c31.all_eliminated() && klein && s3 &&
                      survivors == std::vector<std::tuple<long, long, long>>{{3, 2, 0}, {2, 1, 2}};
  return {passed,
          {{"rh_residual", {{"(2,1,2)", r212.value}, {"(3,2,2)", r322.value}, {"(3,2,3)", r323.value}}},
           {"bound", to_json(bound)},
           {"case31", to_json(c31)},
           {"report", to_json(report)}}};
}

CheckOutcome degrees(const CheckOptions& o) {
  CheckOutcome out{true, Json::object()};
  Json rows = Json::array();
  for (std::size_t g = 1; g <= o.gmax; ++g) {
    const Integer theta = self_intersection(theta_g(g));
    const Integer xi = self_intersection(xi_g(g));
    const Integer f = factorial(g);
    out.passed = out.passed && theta == f && xi == f * static_cast<unsigned long>(g + 1);
    rows.push_back({{"g", g}, {"theta", integer_to_json(theta)}, {"xi", integer_to_json(xi)}});
  }
  out.witnesses["degrees"] = rows;
  return out;
}

CheckOutcome pfaffian_property(const CheckOptions& o) {
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::size_t> half(1, 5);
  std::size_t agree = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix m = random_alternating(rng, 2 * half(rng), 5);
    const Integer pf = pfaffian(m);
    if (pf * pf == determinant(m)) ++agree;
  }
  return {agree == 200, {{"seed", o.seed}, {"trials", 200}, {"agree", agree}}};
}

}  // namespace

std::string_view to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Error: return "error";
  }
  return "error";
}

const std::vector<CheckSpec>& check_catalog() {
  static const std::vector<CheckSpec> catalog{
      {"lemma-xi-type", "Xi_g has type (1,...,1,g+1) and K(Xi_g) is the diagonal (g+1)-torsion", lemma_xi_type},
      {"group-orders", "orders of examples (a), (b), (c)", group_orders},
      {"example-c-order", "example (c): order 16, averaged pullback 16 Xi_c, K(Xi_c) of order 4", example_c_order},
      {"reflection-generation", "pseudoreflection generation of the examples", reflection_generation},
      {"ns-ranks", "invariant Neron-Severi rank 1 with the stated generators", ns_ranks},
      {"standard-build", "build and verify the standard construction for --factors/--ydim", standard_build},
      {"standard-grid", "standard construction over the factor sets [1], [2], [1,1], [2,3]", standard_grid},
      {"lem-k-property", "K of a product is the product of the K's (50 random pairs)", lem_k_property},
      {"non-fixed-kernels", "kernel groups not fixed by the group actions", non_fixed_kernels},
      {"not-principal", "no principal restriction of Xi_n to a sublattice E^k", not_principal},
      {"jacobian-cases", "Riemann-Hurwitz case analysis for Jacobians", jacobian_check},
      {"degrees", "self-intersections of Theta_g and Xi_g", degrees},
      {"pfaffian-property", "Pf(M)^2 = det(M) for 200 random alternating matrices", pfaffian_property},
  };
  return catalog;
}

bool is_known_check(std::string_view id) {
  const auto& c = check_catalog();
  return std::any_of(c.begin(), c.end(), [&](const CheckSpec& s) { return s.id == id; });
}

CheckResult run_check(std::string_view id, const CheckOptions& options) {
  const auto& c = check_catalog();
  auto it = std::find_if(c.begin(), c.end(), [&](const CheckSpec& s) { return s.id == id; });
  if (it == c.end()) throw Error(ErrorKind::UnknownCheck, "unknown check '" + std::string(id) + "'");
  CheckResult result;
  result.check_id = it->id;
  const auto start = std::chrono::steady_clock::now();
  try {
    CheckOutcome o = it->run(options);
    result.status = o.passed ? CheckStatus::Pass : CheckStatus::Fail;
    result.witnesses = std::move(o.witnesses);
  } catch (const std::exception& e) {
    result.status = CheckStatus::Error;
    result.witnesses = {{"error", e.what()}};
  }
  result.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<CheckResult> run_checks(const std::vector<std::string>& ids, const CheckOptions& options) {
  std::vector<std::string> selected = ids;
  if (selected.empty())
    for (const auto& s : check_catalog()) selected.push_back(s.id);
  for (const auto& id : selected)
    if (!is_known_check(id)) throw Error(ErrorKind::UnknownCheck, "unknown check '" + id + "'");
  std::vector<std::future<CheckResult>> futures;
  for (const auto& id : selected)
    futures.push_back(std::async(std::launch::async, [id, &options] { return run_check(id, options); }));
  std::vector<CheckResult> out;
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

Json to_json(const CheckResult& r) {
  return {{"check_id", r.check_id},
          {"status", std::string(to_string(r.status))},
          {"witnesses", r.witnesses},
          {"elapsed_ms", r.elapsed_ms}};
}

IntMatrix random_positive_block(std::mt19937_64& rng, std::size_t g, long bound) {
  std::uniform_int_distribution<long> entry(-bound, bound);
  for (;;) {
    IntMatrix b(g, g);
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = i; j < g; ++j) b(i, j) = b(j, i) = entry(rng);
    if (is_positive_definite(to_rational(b))) return b;
  }
}

IntMatrix random_alternating(std::mt19937_64& rng, std::size_t n, long bound) {
  std::uniform_int_distribution<long> entry(-bound, bound);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = entry(rng);
      m(j, i) = -m(i, j);
    }
  return m;
}

std::vector<Integer> primary_parts(const std::vector<Integer>& orders) {
  std::vector<Integer> parts;
  for (Integer n : orders) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "cyclic orders must be >= 1");
    for (Integer p = 2; p * p <= n; ++p) {
      Integer q = 1;
      while (n % p == 0) {
        n /= p;
        q *= p;
      }
      if (q > 1) parts.push_back(q);
    }
    if (n > 1) parts.push_back(n);
  }
  std::sort(parts.begin(), parts.end());
  return parts;
}

}  // namespace ppav
