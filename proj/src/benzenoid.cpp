#include "wimlab/benzenoid.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "wimlab/errors.hpp"

namespace wimlab {

namespace {

int row_width(int p, int q, int r, int t) {
  return p + std::min(std::min(t, q - 1), std::min(r - 1, q + r - 2 - t));
}

// Doubled x of the leftmost vertical edge of hexagon row t. The left
// boundary steps out along the upper-left side of the hexagon shape
// (length q) and back in along the lower-left side (length r). This
// orientation is what makes the q=2 v-bar index constraints come out as
// y_i <= x_i rather than their mirror image.
int row_left_wall_x2(int q, int t) {
  return std::max(0, t - (q - 1)) - std::min(t, q - 1);
}

}  // namespace

int BenzenoidGraph::vbar_edge(int row, int index) const {
  if (row < 0 || row >= vbar_row_count() || index < 0 || index >= vbar_row_size(row)) {
    throw ValidationError("vertical edge (" + std::to_string(row) + ", " +
                          std::to_string(index) + ") is out of range");
  }
  return vbar_index_[static_cast<size_t>(row)][static_cast<size_t>(index)];
}

BenzenoidGraphPtr build_benzenoid(int p, int q, int r) {
  if (p < 1 || q < 1 || r < 1) {
    throw ValidationError("build_benzenoid requires p, q, r >= 1");
  }
  auto graph = std::shared_ptr<BenzenoidGraph>(new BenzenoidGraph());
  graph->p_ = p;
  graph->q_ = q;
  graph->r_ = r;

  const int rows = q + r - 1;
  std::vector<int> left_wall(static_cast<size_t>(rows));
  for (int t = 0; t < rows; ++t) {
    graph->row_widths_.push_back(row_width(p, q, r, t));
    left_wall[static_cast<size_t>(t)] = row_left_wall_x2(q, t);
  }

  // Corner offsets around a hexagon center, clockwise from the top (y grows
  // downward).
  static constexpr int kCorner[6][2] = {{0, -2}, {1, -1}, {1, 1},
                                        {0, 2},  {-1, 1}, {-1, -1}};

  std::map<PlanarCoord, int> vertex_ids;  // keyed by (x2, y) <=> ordered by x2 then y
  // Two passes so that ids are assigned in (y, x2) order.
  std::vector<PlanarCoord> all_coords;
  for (int t = 0; t < rows; ++t) {
    const int width = graph->row_widths_[static_cast<size_t>(t)];
    for (int j = 0; j < width; ++j) {
      const int cx = left_wall[static_cast<size_t>(t)] + 2 * j + 1;
      const int cy = 3 * t;
      for (const auto& d : kCorner) {
        all_coords.push_back(PlanarCoord{cx + d[0], cy + d[1]});
      }
    }
  }
  std::sort(all_coords.begin(), all_coords.end(),
            [](const PlanarCoord& a, const PlanarCoord& b) {
              return std::pair(a.y, a.x2) < std::pair(b.y, b.x2);
            });
  all_coords.erase(std::unique(all_coords.begin(), all_coords.end()), all_coords.end());
  for (const PlanarCoord& c : all_coords) {
    vertex_ids.emplace(c, static_cast<int>(graph->coords_.size()));
    graph->coords_.push_back(c);
  }

  std::map<std::pair<int, int>, EdgeKind> edge_set;
  for (int t = 0; t < rows; ++t) {
    const int width = graph->row_widths_[static_cast<size_t>(t)];
    for (int j = 0; j < width; ++j) {
      const int cx = left_wall[static_cast<size_t>(t)] + 2 * j + 1;
      const int cy = 3 * t;
      Hexagon hex;
      hex.row = t;
      hex.col = j;
      for (int c = 0; c < 6; ++c) {
        hex.corners[static_cast<size_t>(c)] =
            vertex_ids.at(PlanarCoord{cx + kCorner[c][0], cy + kCorner[c][1]});
      }
      graph->hexagons_.push_back(hex);
      for (int c = 0; c < 6; ++c) {
        int u = hex.corners[static_cast<size_t>(c)];
        int v = hex.corners[static_cast<size_t>((c + 1) % 6)];
        if (u > v) {
          std::swap(u, v);
        }
        const bool vertical = graph->coords_[static_cast<size_t>(u)].x2 ==
                              graph->coords_[static_cast<size_t>(v)].x2;
        edge_set.emplace(std::pair(u, v),
                         vertical ? EdgeKind::kVertical : EdgeKind::kSlant);
      }
    }
  }

  graph->vbar_index_.assign(static_cast<size_t>(rows), {});
  for (int t = 0; t < rows; ++t) {
    graph->vbar_index_[static_cast<size_t>(t)].assign(
        static_cast<size_t>(graph->row_widths_[static_cast<size_t>(t)] + 1), -1);
  }
  graph->incident_.assign(graph->coords_.size(), {});
  for (const auto& [key, kind] : edge_set) {
    BenzEdge edge;
    edge.u = key.first;
    edge.v = key.second;
    edge.kind = kind;
    if (kind == EdgeKind::kVertical) {
      const PlanarCoord& top = graph->coords_[static_cast<size_t>(edge.u)];
      edge.row = (top.y + 1) / 3;  // top endpoint sits at y = 3t - 1
      edge.index = (top.x2 - left_wall[static_cast<size_t>(edge.row)]) / 2;
      graph->vbar_index_[static_cast<size_t>(edge.row)][static_cast<size_t>(edge.index)] =
          static_cast<int>(graph->edges_.size());
    }
    const int id = static_cast<int>(graph->edges_.size());
    graph->incident_[static_cast<size_t>(edge.u)].push_back(id);
    graph->incident_[static_cast<size_t>(edge.v)].push_back(id);
    graph->edges_.push_back(edge);
  }

  // Structural invariants of the hexagon shape.
  const int expected_hexagons = p * q + q * r + r * p - p - q - r + 1;
  if (graph->hexagon_count() != expected_hexagons) {
    throw StructureViolation("build_benzenoid: hexagon count mismatch");
  }
  if (q == 2 && graph->hexagon_count() != (p + 1) * (q + r - 1) - 2) {
    throw StructureViolation("build_benzenoid: q=2 hexagon count mismatch");
  }
  if (graph->vertex_count() % 2 != 0) {
    throw StructureViolation("build_benzenoid: odd vertex count");
  }
  for (const auto& inc : graph->incident_) {
    if (inc.size() < 2 || inc.size() > 3) {
      throw StructureViolation("build_benzenoid: vertex degree outside {2, 3}");
    }
  }
  for (const auto& row : graph->vbar_index_) {
    for (int id : row) {
      if (id < 0) {
        throw StructureViolation("build_benzenoid: missing vertical edge");
      }
    }
  }
  return graph;
}

bool KekuleStructure::has(int edge_id) const {
  return std::binary_search(selected.begin(), selected.end(), edge_id);
}

bool is_kekule(const BenzenoidGraph& graph, const std::vector<int>& edge_ids) {
  std::vector<int> cover(static_cast<size_t>(graph.vertex_count()), 0);
  std::vector<char> seen(static_cast<size_t>(graph.edge_count()), 0);
  for (int id : edge_ids) {
    if (id < 0 || id >= graph.edge_count() || seen[static_cast<size_t>(id)]) {
      return false;
    }
    seen[static_cast<size_t>(id)] = 1;
    const BenzEdge& e = graph.edges()[static_cast<size_t>(id)];
    ++cover[static_cast<size_t>(e.u)];
    ++cover[static_cast<size_t>(e.v)];
  }
  return std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
}

namespace {

// Shared backtracking core: extends a partial matching over the lowest-id
// unmatched vertex, trying incident edges in id order.
class MatchingSearch {
 public:
  MatchingSearch(const BenzenoidGraph& graph,
                 const std::function<void(const std::vector<int>&)>& emit)
      : graph_(graph),
        emit_(emit),
        matched_(static_cast<size_t>(graph.vertex_count()), 0),
        banned_(static_cast<size_t>(graph.edge_count()), 0) {}

  void ban(int edge_id) { banned_[static_cast<size_t>(edge_id)] = 1; }

  // Returns false if the edge conflicts with the current selection.
  bool preselect(int edge_id) {
    const BenzEdge& e = graph_.edges()[static_cast<size_t>(edge_id)];
    if (matched_[static_cast<size_t>(e.u)] || matched_[static_cast<size_t>(e.v)]) {
      return false;
    }
    matched_[static_cast<size_t>(e.u)] = 1;
    matched_[static_cast<size_t>(e.v)] = 1;
    chosen_.push_back(edge_id);
    return true;
  }

  void run() { extend(0); }

 private:
  void extend(int from_vertex) {
    int v = from_vertex;
    while (v < graph_.vertex_count() && matched_[static_cast<size_t>(v)]) {
      ++v;
    }
    if (v == graph_.vertex_count()) {
      std::vector<int> sorted = chosen_;
      std::sort(sorted.begin(), sorted.end());
      emit_(sorted);
      return;
    }
    for (int id : graph_.incident_edges(v)) {
      if (banned_[static_cast<size_t>(id)]) {
        continue;
      }
      const BenzEdge& e = graph_.edges()[static_cast<size_t>(id)];
      const int other = e.u == v ? e.v : e.u;
      if (matched_[static_cast<size_t>(other)]) {
        continue;
      }
      matched_[static_cast<size_t>(v)] = 1;
      matched_[static_cast<size_t>(other)] = 1;
      chosen_.push_back(id);
      extend(v + 1);
      chosen_.pop_back();
      matched_[static_cast<size_t>(v)] = 0;
      matched_[static_cast<size_t>(other)] = 0;
    }
  }

  const BenzenoidGraph& graph_;
  const std::function<void(const std::vector<int>&)>& emit_;
  std::vector<char> matched_;
  std::vector<char> banned_;
  std::vector<int> chosen_;
};

void check_edge_budget(const BenzenoidGraph& graph, std::uint64_t edge_budget) {
  if (static_cast<std::uint64_t>(graph.edge_count()) > edge_budget) {
    throw BudgetError("matching search over " + std::to_string(graph.edge_count()) +
                      " edges exceeds the budget of " + std::to_string(edge_budget));
  }
}

}  // namespace

void for_each_kekule(const BenzenoidGraphPtr& graph,
                     const std::function<void(const KekuleStructure&)>& visit,
                     std::uint64_t edge_budget) {
  if (!graph) {
    throw ValidationError("for_each_kekule: null graph");
  }
  check_edge_budget(*graph, edge_budget);
  const std::function<void(const std::vector<int>&)> emit =
      [&](const std::vector<int>& ids) { visit(KekuleStructure{graph, ids}); };
  MatchingSearch search(*graph, emit);
  search.run();
}

std::vector<KekuleStructure> enumerate_kekule(const BenzenoidGraphPtr& graph,
                                              std::uint64_t edge_budget) {
  std::vector<KekuleStructure> out;
  for_each_kekule(
      graph, [&out](const KekuleStructure& k) { out.push_back(k); }, edge_budget);
  return out;
}

BigInt count_kekule_enumerated(const BenzenoidGraphPtr& graph,
                               std::uint64_t edge_budget) {
  unsigned long long count = 0;
  for_each_kekule(
      graph, [&count](const KekuleStructure&) { ++count; }, edge_budget);
  return BigInt(count);
}

bool validate_vbar_tuple(const VBarTuple& tuple) {
  const int r = tuple.r;
  if (r < 1 || tuple.n < 1 ||
      static_cast<int>(tuple.xs.size()) != r ||
      static_cast<int>(tuple.ys.size()) != r) {
    return false;
  }
  for (int i = 0; i < r; ++i) {
    const int x = tuple.xs[static_cast<size_t>(i)];
    const int y = tuple.ys[static_cast<size_t>(i)];
    if (x < 0 || x > tuple.n || y < 0 || y > tuple.n) {
      return false;
    }
    if (y > x) {
      return false;
    }
    if (i > 0 && (x < tuple.xs[static_cast<size_t>(i - 1)] ||
                  y < tuple.ys[static_cast<size_t>(i - 1)])) {
      return false;
    }
    if (i + 1 < r && y > tuple.xs[static_cast<size_t>(i + 1)]) {
      return false;
    }
  }
  return true;
}

VBarTuple extract_vbars(const KekuleStructure& structure) {
  if (!structure.graph) {
    throw ValidationError("extract_vbars: null graph");
  }
  const BenzenoidGraph& graph = *structure.graph;
  if (graph.q() != 2) {
    throw ValidationError("extract_vbars requires a q = 2 benzenoid");
  }
  const int r = graph.r();
  const int n = graph.p();

  std::vector<std::vector<int>> bars_per_row(static_cast<size_t>(r + 1));
  for (int id : structure.selected) {
    const BenzEdge& e = graph.edges()[static_cast<size_t>(id)];
    if (e.kind == EdgeKind::kVertical) {
      bars_per_row[static_cast<size_t>(e.row)].push_back(e.index);
    }
  }

  auto fail = [&](const std::string& what) {
    throw StructureViolation("extract_vbars: " + what +
                             " (a genuine Kekule structure cannot do this)");
  };
  VBarTuple tuple;
  tuple.r = r;
  tuple.n = n;
  tuple.xs.resize(static_cast<size_t>(r));
  tuple.ys.resize(static_cast<size_t>(r));
  if (bars_per_row[0].size() != 1) {
    fail("top row must hold exactly one v-bar");
  }
  tuple.xs[0] = bars_per_row[0][0];
  for (int i = 1; i < r; ++i) {
    auto& bars = bars_per_row[static_cast<size_t>(i)];
    if (bars.size() != 2) {
      fail("middle row " + std::to_string(i) + " must hold exactly two v-bars");
    }
    std::sort(bars.begin(), bars.end());
    tuple.ys[static_cast<size_t>(i - 1)] = bars[0];
    tuple.xs[static_cast<size_t>(i)] = bars[1] - 1;
  }
  if (bars_per_row[static_cast<size_t>(r)].size() != 1) {
    fail("bottom row must hold exactly one v-bar");
  }
  tuple.ys[static_cast<size_t>(r - 1)] = bars_per_row[static_cast<size_t>(r)][0];
  if (!validate_vbar_tuple(tuple)) {
    fail("v-bar positions violate the staggered ordering constraints");
  }
  return tuple;
}

KekuleStructure reconstruct_from_vbars(const BenzenoidGraphPtr& graph,
                                       const VBarTuple& tuple) {
  if (!graph) {
    throw ValidationError("reconstruct_from_vbars: null graph");
  }
  const BenzenoidGraph& g = *graph;
  if (g.q() != 2) {
    throw ValidationError("reconstruct_from_vbars requires a q = 2 benzenoid");
  }
  if (tuple.r != g.r() || tuple.n != g.p() || !validate_vbar_tuple(tuple)) {
    throw ValidationError("reconstruct_from_vbars: tuple does not fit the graph");
  }

  const int r = tuple.r;
  std::vector<char> selected(static_cast<size_t>(g.edge_count()), 0);
  std::vector<char> matched(static_cast<size_t>(g.vertex_count()), 0);
  auto select_vbar = [&](int row, int index) {
    const int id = g.vbar_edge(row, index);
    const BenzEdge& e = g.edges()[static_cast<size_t>(id)];
    selected[static_cast<size_t>(id)] = 1;
    matched[static_cast<size_t>(e.u)] = 1;
    matched[static_cast<size_t>(e.v)] = 1;
  };
  select_vbar(0, tuple.xs[0]);
  for (int i = 1; i < r; ++i) {
    select_vbar(i, tuple.ys[static_cast<size_t>(i - 1)]);
    select_vbar(i, tuple.xs[static_cast<size_t>(i)] + 1);
  }
  select_vbar(r, tuple.ys[static_cast<size_t>(r - 1)]);

  // With every vertical edge decided, the slant edges split into disjoint
  // zigzag chains whose selection is forced by alternation from each end.
  std::vector<std::vector<int>> slants(static_cast<size_t>(g.vertex_count()));
  for (int id = 0; id < g.edge_count(); ++id) {
    const BenzEdge& e = g.edges()[static_cast<size_t>(id)];
    if (e.kind == EdgeKind::kSlant) {
      slants[static_cast<size_t>(e.u)].push_back(id);
      slants[static_cast<size_t>(e.v)].push_back(id);
    }
  }
  std::vector<char> walked(static_cast<size_t>(g.edge_count()), 0);
  auto violation = [](const std::string& what) {
    throw StructureViolation("reconstruct_from_vbars: " + what);
  };
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (slants[static_cast<size_t>(v)].size() > 1) {
      continue;  // chain walks start at chain ends only
    }
    int cur = v;
    while (true) {
      int next_edge = -1;
      for (int id : slants[static_cast<size_t>(cur)]) {
        if (!walked[static_cast<size_t>(id)]) {
          next_edge = id;
          break;
        }
      }
      if (next_edge < 0) {
        break;
      }
      walked[static_cast<size_t>(next_edge)] = 1;
      const BenzEdge& e = g.edges()[static_cast<size_t>(next_edge)];
      const int other = e.u == cur ? e.v : e.u;
      if (!matched[static_cast<size_t>(cur)]) {
        if (matched[static_cast<size_t>(other)]) {
          violation("alternating fill double-covers a vertex");
        }
        selected[static_cast<size_t>(next_edge)] = 1;
        matched[static_cast<size_t>(cur)] = 1;
        matched[static_cast<size_t>(other)] = 1;
      }
      cur = other;
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!matched[static_cast<size_t>(v)]) {
      violation("alternating fill left vertex " + std::to_string(v) + " unmatched");
    }
  }

  KekuleStructure structure;
  structure.graph = graph;
  for (int id = 0; id < g.edge_count(); ++id) {
    if (selected[static_cast<size_t>(id)]) {
      structure.selected.push_back(id);
    }
  }
  return structure;
}

std::vector<KekuleStructure> constrained_completion(
    const BenzenoidGraphPtr& graph,
    const std::vector<std::pair<int, int>>& forced_selected,
    const std::vector<std::pair<int, int>>& forced_unselected,
    std::uint64_t edge_budget) {
  if (!graph) {
    throw ValidationError("constrained_completion: null graph");
  }
  check_edge_budget(*graph, edge_budget);
  std::vector<char> constrained(static_cast<size_t>(graph->edge_count()), 0);
  std::vector<int> selected_ids;
  for (const auto& [row, index] : forced_selected) {
    const int id = graph->vbar_edge(row, index);
    if (constrained[static_cast<size_t>(id)]) {
      throw ValidationError("constrained_completion: duplicate constraint on an edge");
    }
    constrained[static_cast<size_t>(id)] = 1;
    selected_ids.push_back(id);
  }
  std::vector<int> banned_ids;
  for (const auto& [row, index] : forced_unselected) {
    const int id = graph->vbar_edge(row, index);
    if (constrained[static_cast<size_t>(id)]) {
      throw ValidationError("constrained_completion: constraint sets are not disjoint");
    }
    constrained[static_cast<size_t>(id)] = 1;
    banned_ids.push_back(id);
  }

  std::vector<KekuleStructure> out;
  const std::function<void(const std::vector<int>&)> emit =
      [&](const std::vector<int>& ids) { out.push_back(KekuleStructure{graph, ids}); };
  MatchingSearch search(*graph, emit);
  for (int id : banned_ids) {
    search.ban(id);
  }
  for (int id : selected_ids) {
    if (!search.preselect(id)) {
      return {};  // conflicting forced edges admit no completion
    }
  }
  search.run();
  return out;
}

VBarTuple chain_to_vbars(const PulseChain& chain) {
  if (chain.pulses.empty()) {
    throw ValidationError("chain_to_vbars: a k = 1 matrix has no benzenoid counterpart");
  }
  if (!valid_pulse_chain(chain)) {
    throw ValidationError("chain_to_vbars: invalid pulse chain");
  }
  VBarTuple tuple;
  tuple.r = static_cast<int>(chain.pulses.size());
  tuple.n = chain.n;
  for (const PulsePair& pulse : chain.pulses) {
    tuple.xs.push_back(pulse.x);
    tuple.ys.push_back(pulse.y);
  }
  return tuple;
}

PulseChain vbars_to_chain(const VBarTuple& tuple) {
  if (!validate_vbar_tuple(tuple)) {
    throw ValidationError("vbars_to_chain: invalid v-bar tuple");
  }
  PulseChain chain;
  chain.n = tuple.n;
  for (int i = 0; i < tuple.r; ++i) {
    chain.pulses.push_back(
        PulsePair{tuple.xs[static_cast<size_t>(i)], tuple.ys[static_cast<size_t>(i)]});
  }
  return chain;
}

KekuleStructure matrix_to_kekule(const WIMatrix& M) {
  if (M.row_count() != 2) {
    throw ValidationError("matrix_to_kekule is defined for 2-row matrices");
  }
  if (M.k < 2) {
    throw ValidationError("matrix_to_kekule requires k >= 2; O{n,2,0} is degenerate");
  }
  const PulseChain chain = pulse_decompose(M);
  const VBarTuple tuple = chain_to_vbars(chain);
  const BenzenoidGraphPtr graph = build_benzenoid(M.col_count(), 2, M.k - 1);
  return reconstruct_from_vbars(graph, tuple);
}

WIMatrix kekule_to_matrix(const KekuleStructure& structure) {
  const VBarTuple tuple = extract_vbars(structure);
  return pulse_compose(vbars_to_chain(tuple));
}

}  // namespace wimlab
