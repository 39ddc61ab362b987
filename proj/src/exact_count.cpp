#include "wimlab/exact_count.hpp"

#include <string>
#include <utility>

#include "wimlab/errors.hpp"

namespace wimlab {

CountMatrix CountMatrix::zero(int order) {
  if (order < 1) {
    throw ValidationError("CountMatrix order must be positive");
  }
  CountMatrix m;
  m.order = order;
  m.entries.assign(static_cast<size_t>(order) * order, BigInt(0));
  return m;
}

BigInt binomial(long long n, long long k) {
  if (n < 0) {
    throw ValidationError("binomial: n must be nonnegative");
  }
  if (k < 0 || k > n) {
    return 0;
  }
  if (k > n - k) {
    k = n - k;
  }
  // Multiplicative form; each partial quotient is an integer because the
  // first i factors of the numerator always contain C(n-k+i, i) * i!.
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result = checked_div(result, BigInt(i));
  }
  return result;
}

BigInt count_wim_closed(int n, int k) {
  if (n < 1 || k < 1) {
    throw ValidationError("count_wim_closed requires n >= 1 and k >= 1");
  }
  BigInt product = binomial(n + k - 1, k - 1) * binomial(n + k, k - 1);
  return checked_div(product, BigInt(k));
}

BigInt count_kekule_closed(int p, int q, int r) {
  if (p < 1 || q < 1 || r < 0) {
    throw ValidationError("count_kekule_closed requires p, q >= 1 and r >= 0");
  }
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < q; ++i) {
    num *= binomial(p + r + i, r);
    den *= binomial(r + i, r);
  }
  return checked_div(num, den);
}

BigInt path_count(GridPoint a, GridPoint b) {
  const long long dx = b.x - a.x;
  const long long dy = b.y - a.y;
  if (dx < 0 || dy < 0) {
    return 0;
  }
  return binomial(dx + dy, dx);
}

LGVSystem lgv_system(int m, int n, int k) {
  if (m < 1 || n < 1 || k < 1) {
    throw ValidationError("lgv_system requires m, n, k >= 1");
  }
  LGVSystem sys;
  sys.m = m;
  sys.n = n;
  sys.k = k;
  sys.sources.reserve(static_cast<size_t>(m));
  sys.dests.reserve(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    sys.sources.push_back({i, -i});
    sys.dests.push_back({k - 1 + i, n - i});
  }
  return sys;
}

CountMatrix lgv_matrix(const LGVSystem& sys) {
  if (sys.m < 1 || static_cast<int>(sys.sources.size()) != sys.m ||
      static_cast<int>(sys.dests.size()) != sys.m) {
    throw ValidationError("lgv_matrix: malformed system");
  }
  CountMatrix m = CountMatrix::zero(sys.m);
  for (int i = 0; i < sys.m; ++i) {
    for (int j = 0; j < sys.m; ++j) {
      m.at(i, j) = path_count(sys.sources[static_cast<size_t>(i)],
                              sys.dests[static_cast<size_t>(j)]);
    }
  }
  return m;
}

BigInt determinant_exact(CountMatrix M) {
  const int n = M.order;
  if (n < 1 || M.entries.size() != static_cast<size_t>(n) * n) {
    throw ValidationError("determinant_exact: malformed matrix");
  }
  int sign = 1;
  BigInt prev_pivot = 1;
  for (int col = 0; col < n - 1; ++col) {
    if (M.at(col, col) == 0) {
      int pivot_row = -1;
      for (int i = col + 1; i < n; ++i) {
        if (M.at(i, col) != 0) {
          pivot_row = i;
          break;
        }
      }
      if (pivot_row < 0) {
        return 0;
      }
      for (int j = 0; j < n; ++j) {
        std::swap(M.at(col, j), M.at(pivot_row, j));
      }
      sign = -sign;
    }
    const BigInt pivot = M.at(col, col);
    for (int i = col + 1; i < n; ++i) {
      for (int j = col + 1; j < n; ++j) {
        // Sylvester's identity guarantees the division below is exact.
        M.at(i, j) = checked_div(M.at(i, j) * pivot - M.at(i, col) * M.at(col, j),
                                 prev_pivot);
      }
      M.at(i, col) = 0;
    }
    prev_pivot = pivot;
  }
  return sign > 0 ? M.at(n - 1, n - 1) : -M.at(n - 1, n - 1);
}

BigInt count_wim_lgv(int m, int n, int k) {
  BigInt det = determinant_exact(lgv_matrix(lgv_system(m, n, k)));
  if (det < 0) {
    throw StructureViolation("count_wim_lgv: negative determinant for m=" +
                             std::to_string(m) + " n=" + std::to_string(n) +
                             " k=" + std::to_string(k));
  }
  return det;
}

}  // namespace wimlab
