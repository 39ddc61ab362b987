#include "wimlab/wim.hpp"

#include <string>
#include <utility>

#include "wimlab/errors.hpp"

namespace wimlab {

bool validate_wim(const std::vector<std::vector<int>>& rows, int k) {
  if (k < 1 || rows.empty() || rows[0].empty()) {
    return false;
  }
  const size_t n = rows[0].size();
  for (const auto& row : rows) {
    if (row.size() != n) {
      return false;
    }
  }
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < n; ++j) {
      const int v = rows[i][j];
      if (v < 1 || v > k) {
        return false;
      }
      if (j > 0 && rows[i][j - 1] > v) {
        return false;
      }
      if (i > 0 && rows[i - 1][j] > v) {
        return false;
      }
    }
  }
  return true;
}

WIMatrix make_wim(std::vector<std::vector<int>> rows, int k) {
  if (!validate_wim(rows, k)) {
    throw ValidationError("not a weakly increasing matrix with entries in [1, k]");
  }
  return WIMatrix{k, std::move(rows)};
}

namespace {

void enumerate_cells(WIMatrix& m, int cell,
                     const std::function<void(const WIMatrix&)>& visit) {
  const int n = m.col_count();
  const int total = m.row_count() * n;
  if (cell == total) {
    visit(m);
    return;
  }
  const int i = cell / n;
  const int j = cell % n;
  int lo = 1;
  if (j > 0) {
    lo = std::max(lo, m.rows[static_cast<size_t>(i)][static_cast<size_t>(j - 1)]);
  }
  if (i > 0) {
    lo = std::max(lo, m.rows[static_cast<size_t>(i - 1)][static_cast<size_t>(j)]);
  }
  for (int v = lo; v <= m.k; ++v) {
    m.rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
    enumerate_cells(m, cell + 1, visit);
  }
}

}  // namespace

void for_each_wim(int m, int n, int k,
                  const std::function<void(const WIMatrix&)>& visit) {
  if (m < 1 || n < 1 || k < 1) {
    throw ValidationError("for_each_wim requires m, n, k >= 1");
  }
  if (m * n > 16) {
    throw BudgetError("for_each_wim: m*n = " + std::to_string(m * n) +
                      " exceeds the m*n <= 16 guard");
  }
  WIMatrix matrix{k, std::vector<std::vector<int>>(
                         static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(n), 1))};
  enumerate_cells(matrix, 0, visit);
}

std::vector<WIMatrix> enumerate_wim(int m, int n, int k) {
  std::vector<WIMatrix> out;
  for_each_wim(m, n, k, [&out](const WIMatrix& mat) { out.push_back(mat); });
  return out;
}

BigInt count_wim_enumerated(int m, int n, int k) {
  unsigned long long count = 0;
  for_each_wim(m, n, k, [&count](const WIMatrix&) { ++count; });
  return BigInt(count);
}

bool valid_pulse_chain(const PulseChain& chain) {
  if (chain.n < 1) {
    return false;
  }
  int prev_x = 0;
  int prev_y = 0;
  for (const PulsePair& p : chain.pulses) {
    if (p.y < 0 || p.y > p.x || p.x > chain.n) {
      return false;
    }
    if (p.x < prev_x || p.y < prev_y) {
      return false;
    }
    prev_x = p.x;
    prev_y = p.y;
  }
  return true;
}

PulseChain pulse_decompose(const WIMatrix& M) {
  if (M.row_count() != 2) {
    throw ValidationError("pulse_decompose is defined for 2-row matrices");
  }
  if (!validate_wim(M.rows, M.k)) {
    throw ValidationError("pulse_decompose: invalid matrix");
  }
  const int n = M.col_count();
  std::vector<std::vector<int>> residue = M.rows;
  for (auto& row : residue) {
    for (int& v : row) {
      --v;
    }
  }
  PulseChain chain;
  chain.n = n;
  chain.pulses.reserve(static_cast<size_t>(M.k - 1));
  for (int step = 1; step < M.k; ++step) {
    PulsePair pulse{n, n};
    for (int j = 0; j < n; ++j) {
      if (residue[0][static_cast<size_t>(j)] != 0) {
        pulse.x = j;
        break;
      }
    }
    for (int j = 0; j < n; ++j) {
      if (residue[1][static_cast<size_t>(j)] != 0) {
        pulse.y = j;
        break;
      }
    }
    for (int j = pulse.x; j < n; ++j) {
      --residue[0][static_cast<size_t>(j)];
    }
    for (int j = pulse.y; j < n; ++j) {
      --residue[1][static_cast<size_t>(j)];
    }
    chain.pulses.push_back(pulse);
  }
  for (const auto& row : residue) {
    for (int v : row) {
      if (v != 0) {
        throw StructureViolation("pulse_decompose left a nonzero residue");
      }
    }
  }
  return chain;
}

WIMatrix pulse_compose(const PulseChain& chain) {
  if (!valid_pulse_chain(chain)) {
    throw ValidationError("pulse_compose: chain violates the monotonicity invariants");
  }
  const int n = chain.n;
  const int k = static_cast<int>(chain.pulses.size()) + 1;
  WIMatrix m{k, std::vector<std::vector<int>>(2, std::vector<int>(static_cast<size_t>(n), 1))};
  for (const PulsePair& p : chain.pulses) {
    for (int j = p.x; j < n; ++j) {
      ++m.rows[0][static_cast<size_t>(j)];
    }
    for (int j = p.y; j < n; ++j) {
      ++m.rows[1][static_cast<size_t>(j)];
    }
  }
  if (!validate_wim(m.rows, m.k)) {
    throw StructureViolation("pulse_compose produced a non-monotone matrix");
  }
  return m;
}

}  // namespace wimlab
