#include "wimlab/json_io.hpp"

#include <algorithm>
#include <utility>

#include "wimlab/errors.hpp"

namespace wimlab {

namespace {

ValidationError bad_doc(const std::string& what) {
  return ValidationError("invalid document: " + what);
}

int require_int(const Json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer()) {
    throw bad_doc(std::string("missing integer field \"") + field + "\"");
  }
  return j[field].get<int>();
}

std::vector<int> require_int_array(const Json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array()) {
    throw bad_doc(std::string("missing array field \"") + field + "\"");
  }
  std::vector<int> out;
  for (const auto& v : j[field]) {
    if (!v.is_number_integer()) {
      throw bad_doc(std::string("field \"") + field + "\" must hold integers");
    }
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

std::string canonical_dump(const Json& j) { return j.dump(); }

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw bad_doc(e.what());
  }
}

Json matrix_to_json(const WIMatrix& M) {
  Json j;
  j["k"] = M.k;
  j["rows"] = M.rows;
  return j;
}

WIMatrix matrix_from_json(const Json& j) {
  const int k = require_int(j, "k");
  if (!j.contains("rows") || !j["rows"].is_array()) {
    throw bad_doc("missing array field \"rows\"");
  }
  std::vector<std::vector<int>> rows;
  for (const auto& row : j["rows"]) {
    if (!row.is_array()) {
      throw bad_doc("\"rows\" must be an array of arrays");
    }
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) {
        throw bad_doc("matrix entries must be integers");
      }
      r.push_back(v.get<int>());
    }
    rows.push_back(std::move(r));
  }
  return make_wim(std::move(rows), k);
}

Json chain_to_json(const PulseChain& chain) {
  Json j = Json::array();
  for (const PulsePair& p : chain.pulses) {
    j.push_back(Json::array({p.x, p.y}));
  }
  return j;
}

Json path_to_json(const LatticePath& path) {
  Json j;
  j["start"] = Json::array({path.start.x, path.start.y});
  j["moves"] = path.moves;
  return j;
}

LatticePath path_from_json(const Json& j) {
  if (!j.contains("start") || !j["start"].is_array() || j["start"].size() != 2) {
    throw bad_doc("path needs a [x, y] \"start\"");
  }
  if (!j.contains("moves") || !j["moves"].is_string()) {
    throw bad_doc("path needs a \"moves\" string");
  }
  LatticePath path;
  path.start = GridPoint{j["start"][0].get<int>(), j["start"][1].get<int>()};
  path.moves = j["moves"].get<std::string>();
  for (char c : path.moves) {
    if (c != 'R' && c != 'U') {
      throw bad_doc("moves must use only 'R' and 'U'");
    }
  }
  return path;
}

Json tuple_to_json(const PathTuple& tuple) {
  Json j;
  j["n"] = tuple.n;
  j["k"] = tuple.k;
  Json paths = Json::array();
  for (const LatticePath& p : tuple.paths) {
    paths.push_back(path_to_json(p));
  }
  j["paths"] = std::move(paths);
  return j;
}

PathTuple tuple_from_json(const Json& j) {
  PathTuple tuple;
  tuple.n = require_int(j, "n");
  tuple.k = require_int(j, "k");
  if (!j.contains("paths") || !j["paths"].is_array() || j["paths"].empty()) {
    throw bad_doc("tuple needs a nonempty \"paths\" array");
  }
  for (const auto& p : j["paths"]) {
    tuple.paths.push_back(path_from_json(p));
  }
  tuple.m = static_cast<int>(tuple.paths.size());
  return tuple;
}

namespace {

Json selected_edges_json(const KekuleStructure& structure) {
  const BenzenoidGraph& graph = *structure.graph;
  Json edges = Json::array();
  for (int id : structure.selected) {  // ids are sorted by (u, v), so this is canonical
    const BenzEdge& e = graph.edges()[static_cast<size_t>(id)];
    const PlanarCoord& a = graph.coords()[static_cast<size_t>(e.u)];
    const PlanarCoord& b = graph.coords()[static_cast<size_t>(e.v)];
    edges.push_back(Json::array(
        {Json::array({a.x2, a.y}), Json::array({b.x2, b.y})}));
  }
  return edges;
}

}  // namespace

Json kekule_to_json(const KekuleStructure& structure) {
  const VBarTuple tuple = extract_vbars(structure);
  Json j;
  j["n"] = tuple.n;
  j["r"] = tuple.r;
  j["xs"] = tuple.xs;
  j["ys"] = tuple.ys;
  j["selected"] = selected_edges_json(structure);
  return j;
}

KekuleStructure kekule_from_json(const Json& j) {
  VBarTuple tuple;
  tuple.n = require_int(j, "n");
  tuple.r = require_int(j, "r");
  tuple.xs = require_int_array(j, "xs");
  tuple.ys = require_int_array(j, "ys");
  if (!validate_vbar_tuple(tuple)) {
    throw bad_doc("v-bar tuple violates the ordering constraints");
  }
  const BenzenoidGraphPtr graph = build_benzenoid(tuple.n, 2, tuple.r);
  return reconstruct_from_vbars(graph, tuple);
}

Json kekule_generic_to_json(const KekuleStructure& structure) {
  const BenzenoidGraph& graph = *structure.graph;
  Json j;
  j["p"] = graph.p();
  j["q"] = graph.q();
  j["r"] = graph.r();
  j["selected"] = selected_edges_json(structure);
  return j;
}

}  // namespace wimlab
