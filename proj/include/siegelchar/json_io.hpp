#pragma once

#include <json.hpp>

#include "siegelchar/character.hpp"
#include "siegelchar/characteristic.hpp"
#include "siegelchar/symplectic.hpp"
#include "siegelchar/theta.hpp"

namespace siegelchar::json_io {

using Json = nlohmann::json;

// Integers that fit in a signed 64-bit value are written as JSON numbers,
// larger ones as decimal strings. Both forms are accepted on input.
Json to_json(const Integer& x);
Integer integer_from_json(const Json& j);

// {"g": g, "m": [[2g ints] x 2g]}
Json to_json(const IntMatrix& m);
Json to_json(const SymplecticMatrix& m);
/// Shape-checked raw matrix; symplectic validation is left to make_matrix.
IntMatrix int_matrix_from_json(const Json& j);
SymplecticMatrix matrix_from_json(const Json& j);

// {"g": g, "letters": [["B", 1, 1, 1], ...]}
Json to_json(const GeneratorWord& w);
GeneratorWord word_from_json(const Json& j);

// flat array of 2g integers, m' first
Json to_json(const Characteristic& m);
Characteristic characteristic_from_json(const Json& j);

// {"k": k, "value": "e(k/8)", "name": "i"}
Json to_json(EighthRoot r);

Json to_json(const AbelianExponents& e);

// {"re": x, "im": y}
Json to_json(Complex z);

// {"g": g, "re": [[...]], "im": [[...]]}
Json to_json(const SiegelPoint& tau);
SiegelPoint siegel_point_from_json(const Json& j);

Json to_json(const VerificationReport& r);

}  // namespace siegelchar::json_io
