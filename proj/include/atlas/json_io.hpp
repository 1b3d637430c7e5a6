#pragma once

#include <json.hpp>

#include "atlas/kummer.hpp"
#include "atlas/matrix_factorization.hpp"

namespace atlas {

using Json = nlohmann::ordered_json;

// Big integers are emitted as JSON numbers while they fit into 64 bits and
// as decimal strings beyond that; parsers accept both.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

Json to_json(const IntPoly& f);          // coefficient array, constant term first
Json to_json(const ExtVal& v);           // integer or "TOP"
Json to_json(const YoungPolygon& p);     // part array
Json to_json(const NewtonPolygon& np);   // {"vertices": [[x, y], ...]}
Json to_json(const FFPoly& f);           // {"ell", "tower", "coeffs"}
Json to_json(const WittPoly& f);         // {"ell", "residue_poly", "precision", "coeffs"}
Json to_json(const WittMatrix& m);       // same ring header plus nested entry rows
Json to_json(const LatticeModel& m);
Json to_json(const DistinguishedScheme& s);
Json to_json(const TorsionClass& c);
Json to_json(const SurfaceCase& sc);
Json to_json(const ZetaFactored& z);
Json to_json(const BVector& b);

WittPoly witt_poly_from_json(const Json& j);
WittMatrix witt_matrix_from_json(const Json& j);

}  // namespace atlas
