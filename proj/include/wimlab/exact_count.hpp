#pragma once

#include <vector>

#include "wimlab/bigint.hpp"

namespace wimlab {

struct GridPoint {
  int x = 0;
  int y = 0;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

// Square matrix of exact integers, row-major.
struct CountMatrix {
  int order = 0;
  std::vector<BigInt> entries;

  static CountMatrix zero(int order);
  BigInt& at(int i, int j) { return entries[static_cast<size_t>(i) * order + j]; }
  const BigInt& at(int i, int j) const {
    return entries[static_cast<size_t>(i) * order + j];
  }
};

// Endpoint layout for an m-tuple of up/right paths: consecutive sources and
// destinations are shifted by (1,-1), so source i is (i-1, -(i-1)) and
// destination i is (k-1+i-1, n-(i-1)) with 1-based i.
struct LGVSystem {
  int m = 0;
  int n = 0;
  int k = 0;
  std::vector<GridPoint> sources;
  std::vector<GridPoint> dests;
};

// C(n, k); zero when k < 0 or k > n. Requires n >= 0.
BigInt binomial(long long n, long long k);

// C(n+k-1, k-1) * C(n+k, k-1) / k, the closed count of 2 x n weakly
// increasing matrices with entries in [1, k]. The division is exact.
BigInt count_wim_closed(int n, int k);

// prod_{i=0}^{q-1} C(p+r+i, r) / C(r+i, r). Individual factors need not be
// integers, so numerator and denominator are accumulated separately and
// divided once at the end.
BigInt count_kekule_closed(int p, int q, int r);

// Number of up/right paths from a to b: C(dx+dy, dx), zero if either
// displacement is negative.
BigInt path_count(GridPoint a, GridPoint b);

LGVSystem lgv_system(int m, int n, int k);

// Entry (i, j) = path_count(sources[i], dests[j]).
CountMatrix lgv_matrix(const LGVSystem& sys);

// Exact determinant via fraction-free (Bareiss) elimination with row
// pivoting. Accepts signed entries.
BigInt determinant_exact(CountMatrix M);

// det(lgv_matrix(lgv_system(m, n, k))); throws StructureViolation if the
// determinant comes out negative, which would indicate a broken endpoint
// layout.
BigInt count_wim_lgv(int m, int n, int k);

}  // namespace wimlab
