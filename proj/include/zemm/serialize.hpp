#pragma once

#include <string>

#include <json.hpp>

#include "zemm/constraints.hpp"
#include "zemm/gram.hpp"
#include "zemm/homology.hpp"
#include "zemm/lattice.hpp"
#include "zemm/search.hpp"

// JSON views of the result types. Field order is fixed (ordered_json) and all
// emitters are deterministic, so serialized output is byte-stable.

namespace zemm {

using Json = nlohmann::ordered_json;

inline Json to_json(const CycleMatrix& m) {
  return Json{{"rows", m.rows}, {"cols", m.cols}, {"col_order", m.col_order},
              {"entries", m.entries}};
}

inline Json to_json(const GramMatrix& m) {
  return Json{{"dim", m.dim}, {"entries", m.a}};  // row-major
}

inline GramMatrix gram_from_json(const Json& j) {
  GramMatrix m;
  m.dim = j.at("dim").get<int>();
  m.a = j.at("entries").get<std::vector<long long>>();
  if (m.dim < 0 || m.a.size() != static_cast<std::size_t>(m.dim) * static_cast<std::size_t>(m.dim))
    throw std::invalid_argument("gram entries must hold dim*dim values");
  return m;
}

inline Json to_json(const LatticeClass& c) {
  Json j{{"kind", to_string(c.kind)}, {"rank", c.rank}, {"determinant", c.determinant},
         {"root_count", c.root_count}};
  return j;
}

inline Json to_json(const std::string& graph_name, const ZemmResult& r) {
  Json j;
  j["graph"] = graph_name;
  j["status"] = to_string(r.status);
  j["gram"] = r.gram ? to_json(*r.gram) : Json(nullptr);
  j["lattice"] = r.lattice ? to_json(*r.lattice) : Json(nullptr);
  j["nodes_explored"] = r.nodes_explored;
  return j;
}

// Human-readable dump of a constraint system in the shape the equations are
// usually written: 1 = <sum of squares> + sum of signed a[i,j] terms.
inline Json to_json(const ConstraintSystem& s) {
  Json eqs = Json::array();
  for (const LinearEquation& eq : s.equations) {
    Json terms = Json::array();
    std::string text = "1 = " + std::to_string(1 - eq.constant);
    for (const auto& [pair, coeff] : eq.terms) {
      terms.push_back(Json{{"i", pair.first}, {"j", pair.second}, {"coeff", coeff}});
      text += std::string(coeff > 0 ? " + " : " - ") + "a[" + std::to_string(pair.first + 1) +
              "," + std::to_string(pair.second + 1) + "]";
    }
    eqs.push_back(Json{{"source_edge", eq.source_edge}, {"constant", eq.constant},
                       {"terms", terms}, {"text", text}});
  }
  return Json{{"rank", s.rank}, {"equations", eqs}};
}

}  // namespace zemm
