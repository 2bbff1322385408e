#include "circ2/serialize.hpp"

#include <stdexcept>
#include <string>

namespace circ2 {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("missing JSON field '") + key + "'");
  }
  return j.at(key);
}

std::int64_t integer_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw std::invalid_argument(std::string("field '") + key + "' is not an integer");
  return v.get<std::int64_t>();
}

std::vector<Rational> rational_array(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a JSON array of rationals");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

json rational_array_json(const std::vector<Rational>& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(to_json(x));
  return arr;
}

}  // namespace

json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("rational must be a \"p/q\" string");
}

json to_json(const Circulant& c) {
  return {{"n", c.order()}, {"coeffs", rational_array_json(c.coeffs())}};
}

Circulant circulant_from_json(const json& j) {
  const std::int64_t n = integer_field(j, "n");
  auto coeffs = rational_array(field(j, "coeffs"));
  if (static_cast<std::int64_t>(coeffs.size()) != n) throw std::invalid_argument("coeffs length differs from n");
  return Circulant(std::move(coeffs));
}

json to_json(const GenInverseResult& r) {
  return {{"kind", std::string(to_string(r.kind))},
          {"scale", to_json(r.scale)},
          {"coeffs", rational_array_json(r.circ.coeffs())}};
}

GenInverseResult gen_inverse_from_json(const json& j) {
  const json& kind = field(j, "kind");
  if (!kind.is_string()) throw std::invalid_argument("kind must be a string");
  return {gen_inverse_kind_from_string(kind.get<std::string>()), Circulant(rational_array(field(j, "coeffs"))),
          rational_from_json(field(j, "scale"))};
}

json to_json(const DetResult& d) {
  return {{"kind", "det"},
          {"value", to_json(d.value)},
          {"sign_exponent", d.sign_exponent},
          {"base", to_json(d.base)},
          {"multiplicity", d.multiplicity}};
}

DetResult det_from_json(const json& j) {
  return {rational_from_json(field(j, "value")), integer_field(j, "sign_exponent"),
          rational_from_json(field(j, "base")), integer_field(j, "multiplicity")};
}

json to_json(const Permutation& p) { return p.images(); }

Permutation permutation_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("permutation must be an image array");
  std::vector<std::int64_t> images;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw std::invalid_argument("permutation images must be integers");
    images.push_back(x.get<std::int64_t>());
  }
  return Permutation(std::move(images));
}

json to_json(const WeightedDigraph& g) {
  json arcs = json::array();
  for (const Arc& a : g.arcs) {
    arcs.push_back({{"from", a.from}, {"to", a.to}, {"weight", to_json(a.weight)}, {"label", a.label}});
  }
  return {{"n", g.n}, {"arcs", std::move(arcs)}};
}

WeightedDigraph digraph_from_json(const json& j) {
  WeightedDigraph g{integer_field(j, "n"), {}};
  const json& arcs = field(j, "arcs");
  if (!arcs.is_array()) throw std::invalid_argument("arcs must be an array");
  for (const auto& a : arcs) {
    std::string label = a.contains("label") ? a.at("label").get<std::string>() : "";
    g.arcs.push_back({integer_field(a, "from"), integer_field(a, "to"), rational_from_json(field(a, "weight")),
                      std::move(label)});
  }
  return g;
}

json to_json(const DenseMatrix& m) {
  json rows = json::array();
  for (std::int64_t i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    rows.push_back(rational_array_json(std::vector<Rational>(r.begin(), r.end())));
  }
  return rows;
}

DenseMatrix dense_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a non-empty array of rows");
  const auto rows = static_cast<std::int64_t>(j.size());
  std::vector<Rational> entries;
  std::int64_t cols = -1;
  for (const auto& row : j) {
    auto r = rational_array(row);
    if (cols >= 0 && static_cast<std::int64_t>(r.size()) != cols) throw std::invalid_argument("ragged matrix");
    cols = static_cast<std::int64_t>(r.size());
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return DenseMatrix(rows, cols, std::move(entries));
}

}  // namespace circ2
