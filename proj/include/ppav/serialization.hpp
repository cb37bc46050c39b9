#pragma once

#include <json.hpp>

#include "ppav/group_actions.hpp"
#include "ppav/jacobian_feasibility.hpp"
#include "ppav/polarizations.hpp"
#include "ppav/standard_construction.hpp"

// JSON encodings. Integers are written as decimal strings so that they round
// trip exactly; parsers throw ParseError on malformed input and propagate the
// validation errors of the constructed objects.
namespace ppav {

using Json = nlohmann::json;

Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j);
Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);
Json rational_vector_to_json(const RatVector& v);

/// {order, g, form}
Json to_json(const PolarizedTorus& p);
PolarizedTorus polarization_from_json(const Json& j);

/// {order_kind, g, generators, elements}; each matrix is a list of rows of
/// [a, b] pairs standing for a + b w.
Json to_json(const MatrixGroup& group);
MatrixGroup group_from_json(const Json& j);

/// {factors, y_dim, overlattice_num, overlattice_den, form, actions}
Json to_json(const GluedPPAV& a);
GluedPPAV glued_from_json(const Json& j);

Json to_json(const GluedReport& r);
Json to_json(const Decomposition& d);
Json to_json(const SymplecticBasis& b);

/// {cases: [{g, g_prime, group_order, R, status, reason}]}
Json to_json(const JacobianReport& r);
Json to_json(const GenusBound& b);
Json to_json(const Case31Report& r);

}  // namespace ppav
