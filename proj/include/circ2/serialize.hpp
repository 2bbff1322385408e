#pragma once

#include <json.hpp>

#include "circ2/circulant.hpp"
#include "circ2/closedform.hpp"
#include "circ2/dense_matrix.hpp"
#include "circ2/digraph.hpp"
#include "circ2/permutation.hpp"

// JSON forms. Rationals are always strings ("p/q" or "p") so no precision is lost.
//
//   Circulant         {"n": 4, "coeffs": ["3", "1", "-1", "-3"]}
//   GenInverseResult  {"kind": "drazin_minus", "scale": "1/8", "coeffs": [...]}
//   DetResult         {"kind": "det", "value": ..., "sign_exponent": ..., "base": ..., "multiplicity": ...}
//   Permutation       [3, 0, 1, 2, 7, 4, 5, 6]
//   WeightedDigraph   {"n": 2, "arcs": [{"from": 0, "to": 0, "weight": "2", "label": "a"}, ...]}
//   DenseMatrix       [["1", "0"], ["0", "1"]]
//
// Parsers throw std::invalid_argument on malformed documents.

namespace circ2 {

using json = nlohmann::json;

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const Circulant& c);
Circulant circulant_from_json(const json& j);

json to_json(const GenInverseResult& r);
GenInverseResult gen_inverse_from_json(const json& j);

json to_json(const DetResult& d);
DetResult det_from_json(const json& j);

json to_json(const Permutation& p);
Permutation permutation_from_json(const json& j);

json to_json(const WeightedDigraph& g);
WeightedDigraph digraph_from_json(const json& j);

json to_json(const DenseMatrix& m);
DenseMatrix dense_from_json(const json& j);

}  // namespace circ2
