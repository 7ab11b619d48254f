#pragma once

/// JSON encodings for reports. Residues are canonical integers in [0, p);
/// objects keep insertion order so output is byte-stable.

#include <string>

#include "json.hpp"
#include "neuberg/conics.hpp"
#include "neuberg/cubic.hpp"
#include "neuberg/desmic.hpp"
#include "neuberg/triangle.hpp"

namespace neuberg {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "neuberg-lab/1";

/// {"schema": "neuberg-lab/1", "command": command}
Json document(const std::string& command);

Json to_json(Num a);
Json to_json(const Pt& a);          // [x, y]
Json to_json(const Ln& l);          // [a, b, c]
Json to_json(const ProjPt& P);      // [X, Y, Z]
Json to_json(const ProjLine& l);    // [a, b, c]
Json to_json(const Poly2& f);       // {"x^2*y": c, ...} in graded order
Json to_json(const Circle& c);      // {"center", "quadrance"}
Json to_json(const Tri& t);         // [[x1, y1], [x2, y2], [x3, y3]]
Json to_json(const DesmicArray& d); // 3 rows of 4 points
Json to_json(const DesmicReport& r);
Json to_json(const SweepReport& r);

}  // namespace neuberg
