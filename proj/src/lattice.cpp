#include "wimlab/lattice.hpp"

#include <algorithm>
#include <string>

#include "wimlab/errors.hpp"

namespace wimlab {

GridPoint LatticePath::end() const {
  GridPoint p = start;
  for (char c : moves) {
    if (c == 'R') {
      ++p.x;
    } else {
      ++p.y;
    }
  }
  return p;
}

std::vector<GridPoint> LatticePath::vertices() const {
  std::vector<GridPoint> out;
  out.reserve(moves.size() + 1);
  GridPoint p = start;
  out.push_back(p);
  for (char c : moves) {
    if (c == 'R') {
      ++p.x;
    } else if (c == 'U') {
      ++p.y;
    } else {
      throw ValidationError("lattice path move must be 'R' or 'U'");
    }
    out.push_back(p);
  }
  return out;
}

std::vector<int> path_to_row_vector(const LatticePath& path, int n, int k) {
  if (n < 1 || k < 1) {
    throw ValidationError("path_to_row_vector requires n, k >= 1");
  }
  int rights = 0;
  int ups = 0;
  for (char c : path.moves) {
    if (c == 'R') {
      ++rights;
    } else if (c == 'U') {
      ++ups;
    } else {
      throw ValidationError("lattice path move must be 'R' or 'U'");
    }
  }
  if (ups != n || rights != k - 1) {
    throw ValidationError("path has " + std::to_string(ups) + " up and " +
                          std::to_string(rights) + " right moves; an (n=" +
                          std::to_string(n) + ", k=" + std::to_string(k) +
                          ") system needs n up and k-1 right moves");
  }
  std::vector<int> v;
  v.reserve(static_cast<size_t>(n));
  int seen_rights = 0;
  for (char c : path.moves) {
    if (c == 'R') {
      ++seen_rights;
    } else {
      v.push_back(1 + seen_rights);
    }
  }
  return v;
}

LatticePath row_vector_to_path(const std::vector<int>& v, int k, GridPoint start) {
  if (v.empty() || k < 1) {
    throw ValidationError("row_vector_to_path requires a nonempty vector and k >= 1");
  }
  int prev = 1;
  for (int value : v) {
    if (value < prev || value > k) {
      throw ValidationError("row vector must be weakly increasing with entries in [1, k]");
    }
    prev = value;
  }
  LatticePath path;
  path.start = start;
  path.moves.reserve(v.size() + static_cast<size_t>(k - 1));
  prev = 1;
  for (int value : v) {
    path.moves.append(static_cast<size_t>(value - prev), 'R');
    path.moves.push_back('U');
    prev = value;
  }
  path.moves.append(static_cast<size_t>(k - v.back()), 'R');
  return path;
}

bool paths_intersect(const LatticePath& a, const LatticePath& b) {
  std::vector<GridPoint> va = a.vertices();
  std::vector<GridPoint> vb = b.vertices();
  std::sort(va.begin(), va.end());
  std::sort(vb.begin(), vb.end());
  auto ia = va.begin();
  auto ib = vb.begin();
  while (ia != va.end() && ib != vb.end()) {
    if (*ia == *ib) {
      return true;
    }
    if (*ia < *ib) {
      ++ia;
    } else {
      ++ib;
    }
  }
  return false;
}

namespace {

void check_pairwise_disjoint(const std::vector<LatticePath>& paths,
                             const char* context) {
  for (size_t i = 0; i < paths.size(); ++i) {
    for (size_t j = i + 1; j < paths.size(); ++j) {
      if (paths_intersect(paths[i], paths[j])) {
        throw StructureViolation(std::string(context) + ": paths " +
                                 std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                 " intersect");
      }
    }
  }
}

}  // namespace

PathTuple matrix_to_path_tuple(const WIMatrix& M) {
  if (!validate_wim(M.rows, M.k)) {
    throw ValidationError("matrix_to_path_tuple: invalid matrix");
  }
  PathTuple tuple;
  tuple.m = M.row_count();
  tuple.n = M.col_count();
  tuple.k = M.k;
  tuple.paths.reserve(M.rows.size());
  for (int i = 0; i < tuple.m; ++i) {
    tuple.paths.push_back(
        row_vector_to_path(M.rows[static_cast<size_t>(i)], M.k, GridPoint{i, -i}));
  }
  // Guaranteed disjoint for m = 2; for m > 2 an intersection would falsify
  // the conjectured extension, so it must surface loudly either way.
  check_pairwise_disjoint(tuple.paths, "matrix_to_path_tuple");
  return tuple;
}

WIMatrix path_tuple_to_matrix(const PathTuple& tuple) {
  if (tuple.m < 1 || static_cast<int>(tuple.paths.size()) != tuple.m) {
    throw ValidationError("path_tuple_to_matrix: malformed tuple");
  }
  for (int i = 0; i < tuple.m; ++i) {
    const LatticePath& path = tuple.paths[static_cast<size_t>(i)];
    if (!(path.start == GridPoint{i, -i})) {
      throw ValidationError("path " + std::to_string(i + 1) +
                            " does not start at the required source");
    }
  }
  for (size_t i = 0; i < tuple.paths.size(); ++i) {
    for (size_t j = i + 1; j < tuple.paths.size(); ++j) {
      if (paths_intersect(tuple.paths[i], tuple.paths[j])) {
        throw ValidationError("path_tuple_to_matrix: intersecting tuple has no image");
      }
    }
  }
  WIMatrix m;
  m.k = tuple.k;
  m.rows.reserve(tuple.paths.size());
  for (const LatticePath& path : tuple.paths) {
    m.rows.push_back(path_to_row_vector(path, tuple.n, tuple.k));
  }
  if (!validate_wim(m.rows, m.k)) {
    throw StructureViolation("path_tuple_to_matrix: non-intersecting tuple mapped to a "
                             "non-monotone matrix");
  }
  return m;
}

namespace {

// All move strings with the given number of 'R' and 'U', ascending
// lexicographic ('R' < 'U').
std::vector<std::string> all_move_strings(int rights, int ups) {
  std::string moves(static_cast<size_t>(rights), 'R');
  moves.append(static_cast<size_t>(ups), 'U');
  std::vector<std::string> out;
  do {
    out.push_back(moves);
  } while (std::next_permutation(moves.begin(), moves.end()));
  return out;
}

}  // namespace

void for_each_nonintersecting_tuple(
    int m, int n, int k, const std::function<void(const PathTuple&)>& visit,
    std::uint64_t budget) {
  if (m < 1 || n < 1 || k < 1) {
    throw ValidationError("for_each_nonintersecting_tuple requires m, n, k >= 1");
  }
  const BigInt single = binomial(n + k - 1, k - 1);
  BigInt candidates = 1;
  for (int i = 0; i < m; ++i) {
    candidates *= single;
  }
  if (candidates > budget) {
    throw BudgetError("for_each_nonintersecting_tuple: " + candidates.str() +
                      " candidate tuples exceed the budget of " + std::to_string(budget));
  }

  const std::vector<std::string> moves = all_move_strings(k - 1, n);
  // Vertex lists are sorted once per candidate path; the pairwise scan below
  // is a linear merge.
  std::vector<std::vector<std::vector<GridPoint>>> sorted_vertices(
      static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    auto& per_start = sorted_vertices[static_cast<size_t>(i)];
    per_start.reserve(moves.size());
    for (const std::string& mv : moves) {
      LatticePath path{GridPoint{i, -i}, mv};
      std::vector<GridPoint> verts = path.vertices();
      std::sort(verts.begin(), verts.end());
      per_start.push_back(std::move(verts));
    }
  }

  auto disjoint = [](const std::vector<GridPoint>& a, const std::vector<GridPoint>& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
      if (*ia == *ib) {
        return false;
      }
      if (*ia < *ib) {
        ++ia;
      } else {
        ++ib;
      }
    }
    return true;
  };

  PathTuple tuple;
  tuple.m = m;
  tuple.n = n;
  tuple.k = k;
  tuple.paths.assign(static_cast<size_t>(m), LatticePath{});
  std::vector<size_t> choice(static_cast<size_t>(m), 0);

  auto recurse = [&](auto&& self, int depth) -> void {
    if (depth == m) {
      for (int i = 0; i < m; ++i) {
        tuple.paths[static_cast<size_t>(i)] =
            LatticePath{GridPoint{i, -i}, moves[choice[static_cast<size_t>(i)]]};
      }
      visit(tuple);
      return;
    }
    for (size_t c = 0; c < moves.size(); ++c) {
      bool ok = true;
      for (int prev = 0; prev < depth && ok; ++prev) {
        ok = disjoint(sorted_vertices[static_cast<size_t>(prev)][choice[static_cast<size_t>(prev)]],
                      sorted_vertices[static_cast<size_t>(depth)][c]);
      }
      if (!ok) {
        continue;
      }
      choice[static_cast<size_t>(depth)] = c;
      self(self, depth + 1);
    }
  };
  recurse(recurse, 0);
}

BigInt count_nonintersecting_tuples(int m, int n, int k, std::uint64_t budget) {
  unsigned long long count = 0;
  for_each_nonintersecting_tuple(m, n, k, [&count](const PathTuple&) { ++count; },
                                 budget);
  return BigInt(count);
}

}  // namespace wimlab
