#pragma once

#include <functional>
#include <vector>

#include "wimlab/bigint.hpp"

namespace wimlab {

// An m x n matrix with integer entries in [1, k] that increases weakly along
// every row and down every column. k is part of the identity of the matrix:
// the same entries with a larger bound denote a different object (the
// benzenoid counterpart has r = k-1 rows).
struct WIMatrix {
  int k = 1;
  std::vector<std::vector<int>> rows;

  int row_count() const { return static_cast<int>(rows.size()); }
  int col_count() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }

  friend bool operator==(const WIMatrix&, const WIMatrix&) = default;
};

// One binary pulse: x leading zeros in the top row, y in the bottom row.
struct PulsePair {
  int x = 0;
  int y = 0;

  friend bool operator==(const PulsePair&, const PulsePair&) = default;
};

// Ordered decomposition of a 2 x n matrix into k-1 pulses. Both coordinate
// sequences are nondecreasing and y_i <= x_i throughout.
struct PulseChain {
  int n = 0;
  std::vector<PulsePair> pulses;

  friend bool operator==(const PulseChain&, const PulseChain&) = default;
};

bool validate_wim(const std::vector<std::vector<int>>& rows, int k);

WIMatrix make_wim(std::vector<std::vector<int>> rows, int k);

// Visits every m x n weakly increasing matrix with entries in [1, k] exactly
// once, in lexicographic order of the row-major entry sequence. Guarded by
// m*n <= 16.
void for_each_wim(int m, int n, int k,
                  const std::function<void(const WIMatrix&)>& visit);

std::vector<WIMatrix> enumerate_wim(int m, int n, int k);

BigInt count_wim_enumerated(int m, int n, int k);

bool valid_pulse_chain(const PulseChain& chain);

// Unique decomposition M = J + sum L_i: subtract the all-ones matrix, then
// repeatedly binarize the nonzero entries into a pulse and subtract, k-1
// times. Defined for 2-row matrices only.
PulseChain pulse_decompose(const WIMatrix& M);

// Inverse of pulse_decompose; rejects chains that violate the monotonicity
// invariants. The result has k = |pulses| + 1.
WIMatrix pulse_compose(const PulseChain& chain);

}  // namespace wimlab
