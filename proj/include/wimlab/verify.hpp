#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wimlab/bigint.hpp"
#include "wimlab/lattice.hpp"

namespace wimlab {

struct VerifyOptions {
  int max_n = 4;
  int max_k = 4;
  bool include_matchings = false;
  int max_pqr = 3;
  std::uint64_t tuple_budget = kDefaultTupleBudget;
  std::uint64_t edge_budget = 200;
};

// One (n, k) grid cell: counts from every route that ran, plus round-trip
// results. A route skipped for budget reasons stays unset and does not count
// against agreement.
struct VerifyCell {
  int n = 0;
  int k = 0;
  std::optional<BigInt> closed;
  std::optional<BigInt> lgv;
  std::optional<BigInt> enumerated;
  std::optional<BigInt> paths;
  std::optional<BigInt> kekule;
  bool round_trips_ok = true;
  bool agree = true;
  double elapsed_ms = 0.0;
};

// One (p, q, r) matching cell comparing the closed product formula against
// direct enumeration.
struct MatchingCell {
  int p = 0;
  int q = 0;
  int r = 0;
  BigInt closed;
  std::optional<BigInt> enumerated;
  bool agree = true;
  double elapsed_ms = 0.0;
};

struct VerifyReport {
  std::vector<VerifyCell> cells;
  std::vector<MatchingCell> matching_cells;
  bool all_agree = true;
};

VerifyReport run_verify(const VerifyOptions& options);

void print_report(std::ostream& out, const VerifyReport& report);

}  // namespace wimlab
