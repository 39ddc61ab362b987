#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "wimlab/wim.hpp"

namespace wimlab {

enum class EdgeKind { kVertical, kSlant };

// Planar vertex position in half-unit integer coordinates: one x2 unit is
// half a hexagon width (sqrt(3)/2 * side), one y unit is half a side. A
// hexagon of row t centered at column c occupies x2 in [c-1, c+1] and y in
// [3t-2, 3t+2], with its two vertical edges on the x2 = c-1 and x2 = c+1
// walls. Integer coordinates keep vertex identity exact and renders
// deterministic.
struct PlanarCoord {
  int x2 = 0;
  int y = 0;

  friend bool operator==(const PlanarCoord&, const PlanarCoord&) = default;
  friend auto operator<=>(const PlanarCoord&, const PlanarCoord&) = default;
};

struct BenzEdge {
  int u = 0;  // endpoint vertex ids, u < v
  int v = 0;
  EdgeKind kind = EdgeKind::kSlant;
  int row = -1;    // vertical edges only: hexagon row
  int index = -1;  // vertical edges only: count of vertical edges strictly left
};

struct Hexagon {
  int row = 0;
  int col = 0;  // 0-based position within the row
  std::array<int, 6> corners{};  // vertex ids, clockwise from the top
};

// The hexagon-shaped benzenoid O{p,q,r}: q+r-1 rows of hexagons where row t
// holds p + min(t, q-1, r-1, q+r-2-t) units. For q = 2 the rows are
// n, n+1, ..., n+1, n units wide. Vertex ids are assigned in (y, x2) order,
// edge ids in (u, v) order; both are deterministic.
class BenzenoidGraph {
 public:
  int p() const { return p_; }
  int q() const { return q_; }
  int r() const { return r_; }

  int hexagon_count() const { return static_cast<int>(hexagons_.size()); }
  const std::vector<Hexagon>& hexagons() const { return hexagons_; }
  const std::vector<int>& row_widths() const { return row_widths_; }

  int vertex_count() const { return static_cast<int>(coords_.size()); }
  const std::vector<PlanarCoord>& coords() const { return coords_; }

  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<BenzEdge>& edges() const { return edges_; }
  const std::vector<int>& incident_edges(int vertex) const {
    return incident_[static_cast<size_t>(vertex)];
  }

  // Rows of vertical edges; q+r-1 of them, row i holding row_widths[i]+1
  // edges ordered left to right.
  int vbar_row_count() const { return static_cast<int>(vbar_index_.size()); }
  int vbar_row_size(int row) const {
    return static_cast<int>(vbar_index_[static_cast<size_t>(row)].size());
  }
  // Edge id of the vertical edge at (row, index).
  int vbar_edge(int row, int index) const;

  friend std::shared_ptr<const BenzenoidGraph> build_benzenoid(int p, int q, int r);

 private:
  BenzenoidGraph() = default;

  int p_ = 0, q_ = 0, r_ = 0;
  std::vector<int> row_widths_;
  std::vector<Hexagon> hexagons_;
  std::vector<PlanarCoord> coords_;
  std::vector<BenzEdge> edges_;
  std::vector<std::vector<int>> incident_;
  std::vector<std::vector<int>> vbar_index_;
};

using BenzenoidGraphPtr = std::shared_ptr<const BenzenoidGraph>;

BenzenoidGraphPtr build_benzenoid(int p, int q, int r);

// A perfect matching of the benzenoid, stored as sorted edge ids.
struct KekuleStructure {
  BenzenoidGraphPtr graph;
  std::vector<int> selected;

  bool has(int edge_id) const;

  friend bool operator==(const KekuleStructure& a, const KekuleStructure& b) {
    return a.selected == b.selected;
  }
};

// Selected vertical-edge positions of a q=2 structure in the canonical
// (xs, ys) form: 0 <= x_1 <= ... <= x_r <= n, same for ys, y_i <= x_i, and
// y_i <= x_{i+1}.
struct VBarTuple {
  int r = 0;
  int n = 0;
  std::vector<int> xs;
  std::vector<int> ys;

  friend bool operator==(const VBarTuple&, const VBarTuple&) = default;
};

inline constexpr std::uint64_t kDefaultEdgeBudget = 200;

bool is_kekule(const BenzenoidGraph& graph, const std::vector<int>& edge_ids);

// Visits every perfect matching exactly once, backtracking on the lowest-id
// unmatched vertex and trying its incident edges in id order.
void for_each_kekule(const BenzenoidGraphPtr& graph,
                     const std::function<void(const KekuleStructure&)>& visit,
                     std::uint64_t edge_budget = kDefaultEdgeBudget);

std::vector<KekuleStructure> enumerate_kekule(
    const BenzenoidGraphPtr& graph, std::uint64_t edge_budget = kDefaultEdgeBudget);

BigInt count_kekule_enumerated(const BenzenoidGraphPtr& graph,
                               std::uint64_t edge_budget = kDefaultEdgeBudget);

bool validate_vbar_tuple(const VBarTuple& tuple);

// Reads the v-bars of a q=2 structure: exactly one in the top row (x_1), two
// in each middle row i (y_i left, x_{i+1}+1 right), one in the bottom row
// (y_r). Any other shape is a StructureViolation, since genuine Kekule
// structures always fit this pattern.
VBarTuple extract_vbars(const KekuleStructure& structure);

// Fills the unique perfect matching whose v-bars are exactly the tuple.
// After fixing every vertical edge, the slant edges form disjoint zigzag
// chains whose selection is forced by alternation from each chain end.
KekuleStructure reconstruct_from_vbars(const BenzenoidGraphPtr& graph,
                                       const VBarTuple& tuple);

// All perfect matchings consistent with forcing the given vertical-edge
// positions selected resp. unselected, by exhaustive backtracking. Serves as
// the independent uniqueness oracle for reconstruct_from_vbars.
std::vector<KekuleStructure> constrained_completion(
    const BenzenoidGraphPtr& graph,
    const std::vector<std::pair<int, int>>& forced_selected,
    const std::vector<std::pair<int, int>>& forced_unselected,
    std::uint64_t edge_budget = kDefaultEdgeBudget);

VBarTuple chain_to_vbars(const PulseChain& chain);
PulseChain vbars_to_chain(const VBarTuple& tuple);

// The composed bijection for 2-row matrices with k >= 2: pulse-decompose,
// reinterpret the chain as v-bar positions on O{n,2,k-1}, reconstruct.
KekuleStructure matrix_to_kekule(const WIMatrix& M);

// Inverse direction: extract v-bars, reinterpret as a pulse chain, compose.
WIMatrix kekule_to_matrix(const KekuleStructure& structure);

}  // namespace wimlab
