#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wimlab/exact_count.hpp"
#include "wimlab/wim.hpp"

namespace wimlab {

// An up/right lattice path. Moves are stored as a string over {'R', 'U'};
// lexicographic order on move strings ('R' < 'U') is the canonical stream
// order everywhere.
struct LatticePath {
  GridPoint start;
  std::string moves;

  GridPoint end() const;
  // All |moves|+1 visited vertices, start first.
  std::vector<GridPoint> vertices() const;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

// m paths in an (n, k) system; path i starts at (i-1, -(i-1)) and ends at
// (k-1+i-1, n-(i-1)), 0-based i shifted accordingly.
struct PathTuple {
  int m = 0;
  int n = 0;
  int k = 0;
  std::vector<LatticePath> paths;

  friend bool operator==(const PathTuple&, const PathTuple&) = default;
};

inline constexpr std::uint64_t kDefaultTupleBudget = 100'000'000;

// v_i = 1 + (number of R moves before the i-th U move). Requires exactly n
// 'U' and k-1 'R' moves.
std::vector<int> path_to_row_vector(const LatticePath& path, int n, int k);

// Inverse construction: consecutive differences of v give the R-run lengths,
// with the trailing run k - v_n forced by the fixed destination.
LatticePath row_vector_to_path(const std::vector<int>& v, int k, GridPoint start);

// True iff the two paths share at least one visited vertex.
bool paths_intersect(const LatticePath& a, const LatticePath& b);

// Row i becomes the path starting at (i-1, -(i-1)). The result is checked to
// be pairwise vertex-disjoint; a failure for m = 2 is impossible and for
// m > 2 would falsify the conjectured extension, so it is surfaced loudly as
// StructureViolation.
PathTuple matrix_to_path_tuple(const WIMatrix& M);

// Stacks the row vectors of a non-intersecting tuple. Rejects intersecting
// tuples and wrong endpoint layouts.
WIMatrix path_tuple_to_matrix(const PathTuple& tuple);

// Visits every pairwise non-intersecting m-tuple exactly once, lexicographic
// by concatenated move strings. The number of candidate tuples
// C(n+k-1, k-1)^m must not exceed the budget.
void for_each_nonintersecting_tuple(
    int m, int n, int k, const std::function<void(const PathTuple&)>& visit,
    std::uint64_t budget = kDefaultTupleBudget);

BigInt count_nonintersecting_tuples(int m, int n, int k,
                                    std::uint64_t budget = kDefaultTupleBudget);

}  // namespace wimlab
