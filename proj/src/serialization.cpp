#include "ppav/serialization.hpp"

#include <string>

namespace ppav {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t size_from_json(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    parse_error(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

Json elem_to_json(const OrderElem& x) { return Json::array({integer_to_json(x.a), integer_to_json(x.b)}); }

OrderElem elem_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) parse_error("order element must be an [a, b] pair");
  return OrderElem(integer_from_json(j[0]), integer_from_json(j[1]));
}

Json order_matrix_to_json(const OrderMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.g(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.g(); ++j) row.push_back(elem_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

OrderMatrix order_matrix_from_json(const Json& j, QuadOrder order, std::size_t g) {
  if (!j.is_array() || j.size() != g) parse_error("order matrix must have g rows");
  std::vector<OrderElem> entries;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != g) parse_error("order matrix must have g columns");
    for (const auto& x : row) entries.push_back(elem_from_json(x));
  }
  return OrderMatrix(order, g, std::move(entries));
}

Json types_to_json(const std::vector<Integer>& t) {
  Json out = Json::array();
  for (const auto& d : t) out.push_back(integer_to_json(d));
  return out;
}

template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    parse_error(e.what());
  }
}

}  // namespace

Json integer_to_json(const Integer& x) { return x.get_str(); }

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (!j.is_string()) parse_error("integer must be a decimal string");
  const std::string s = j.get<std::string>();
  Integer x;
  if (s.empty() || x.set_str(s, 10) != 0) parse_error("bad decimal integer '" + s + "'");
  return x;
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) parse_error("matrix must be a list of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : (j[0].is_array() ? j[0].size() : 0);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) parse_error("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = integer_from_json(j[i][c]);
  }
  return m;
}

Json rational_vector_to_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(q.get_str());
  return out;
}

Json to_json(const PolarizedTorus& p) {
  return {{"order", std::string(to_string(p.order().kind()))},
          {"g", p.dim()},
          {"form", matrix_to_json(p.form())}};
}

PolarizedTorus polarization_from_json(const Json& j) {
  return guarded([&] {
    QuadOrder order(order_kind_from_string(field(j, "order").get<std::string>()));
    std::size_t g = size_from_json(field(j, "g"), "g");
    return PolarizedTorus(Torus(order, g), matrix_from_json(field(j, "form")));
  });
}

Json to_json(const MatrixGroup& group) {
  Json gens = Json::array();
  for (const auto& m : group.generators()) gens.push_back(order_matrix_to_json(m));
  Json elems = Json::array();
  for (const auto& m : group.elements()) elems.push_back(order_matrix_to_json(m));
  return {{"order_kind", std::string(to_string(group.torus().order.kind()))},
          {"g", group.torus().g},
          {"generators", gens},
          {"elements", elems}};
}

MatrixGroup group_from_json(const Json& j) {
  return guarded([&] {
    QuadOrder order(order_kind_from_string(field(j, "order_kind").get<std::string>()));
    std::size_t g = size_from_json(field(j, "g"), "g");
    std::vector<OrderMatrix> gens;
    if (j.contains("generators"))
      for (const auto& m : j.at("generators")) gens.push_back(order_matrix_from_json(m, order, g));
    std::vector<OrderMatrix> elems;
    for (const auto& m : field(j, "elements")) elems.push_back(order_matrix_from_json(m, order, g));
    return MatrixGroup(Torus(order, g), std::move(gens), std::move(elems));
  });
}

Json to_json(const GluedPPAV& a) {
  auto [num, den] = overlattice_fraction(a);
  Json actions = Json::array();
  for (const auto& m : a.actions) actions.push_back(matrix_to_json(m));
  return {{"factors", a.factors},
          {"y_dim", a.y_dim},
          {"overlattice_num", matrix_to_json(num)},
          {"overlattice_den", integer_to_json(den)},
          {"form", matrix_to_json(a.form)},
          {"actions", actions}};
}

GluedPPAV glued_from_json(const Json& j) {
  return guarded([&] {
    std::vector<std::size_t> factors;
    for (const auto& f : field(j, "factors")) factors.push_back(size_from_json(f, "factor"));
    std::vector<IntMatrix> actions;
    for (const auto& m : field(j, "actions")) actions.push_back(matrix_from_json(m));
    return glued_from_parts(std::move(factors), size_from_json(field(j, "y_dim"), "y_dim"),
                            matrix_from_json(field(j, "overlattice_num")),
                            integer_from_json(field(j, "overlattice_den")),
                            matrix_from_json(field(j, "form")), std::move(actions));
  });
}

Json to_json(const GluedReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"check", std::string(to_string(c.kind))}, {"passed", c.passed}});
  return {{"ok", r.ok()},
          {"first_failure", r.first_failure ? Json(std::string(to_string(*r.first_failure))) : Json()},
          {"checks", checks},
          {"pfaffian", integer_to_json(r.pfaffian)},
          {"index", integer_to_json(r.index)},
          {"fixed_dim", r.fixed_dim}};
}

Json to_json(const Decomposition& d) {
  return {{"x_type", types_to_json(d.x_type)},
          {"y_type", types_to_json(d.y_type)},
          {"quotient_order", integer_to_json(d.quotient_order)},
          {"x_lattice", matrix_to_json(d.x_lattice)},
          {"y_lattice", matrix_to_json(d.y_lattice)}};
}

Json to_json(const SymplecticBasis& b) {
  Json pairs = Json::array();
  for (std::size_t j = 0; j < b.size(); ++j)
    pairs.push_back({{"x", rational_vector_to_json(b.x[j])},
                     {"y", rational_vector_to_json(b.y[j])},
                     {"order", integer_to_json(b.orders[j])}});
  return {{"pairs", pairs}};
}

Json to_json(const JacobianReport& r) {
  Json cases = Json::array();
  for (const auto& c : r.cases)
    cases.push_back({{"g", c.g},
                     {"g_prime", c.g_prime},
                     {"group_order", c.group_order ? Json(*c.group_order) : Json()},
                     {"R", c.residual ? Json(*c.residual) : Json()},
                     {"status", c.survives ? "survives" : "eliminated"},
                     {"reason", c.reason}});
  return {{"cases", cases}};
}

Json to_json(const GenusBound& b) {
  Json cases = Json::array();
  for (const auto& [g, gp] : b.cases) cases.push_back(Json::array({g, gp}));
  return {{"g_max", b.g_max}, {"cases", cases}};
}

Json to_json(const Case31Report& r) {
  Json branches = Json::array();
  for (const auto& b : r.branches)
    branches.push_back({{"group", b.group},
                        {"test", b.test},
                        {"lhs", b.lhs},
                        {"rhs", b.rhs},
                        {"eliminated", b.eliminated}});
  return {{"branches", branches}, {"assumptions", r.assumptions}};
}

}  // namespace ppav
