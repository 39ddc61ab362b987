#include "wimlab/verify.hpp"

#include <chrono>
#include <ostream>

#include "wimlab/benzenoid.hpp"
#include "wimlab/errors.hpp"
#include "wimlab/exact_count.hpp"
#include "wimlab/wim.hpp"

namespace wimlab {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Round trips are exhaustive per cell but capped so oversized grids stay
// responsive; cells above the cap simply skip them.
constexpr unsigned long long kRoundTripCap = 100000;

bool run_round_trips(int n, int k, bool include_kekule) {
  BenzenoidGraphPtr graph;
  if (include_kekule && k >= 2) {
    graph = build_benzenoid(n, 2, k - 1);
  }
  bool ok = true;
  for_each_wim(2, n, k, [&](const WIMatrix& m) {
    if (!ok) {
      return;
    }
    if (!(path_tuple_to_matrix(matrix_to_path_tuple(m)) == m)) {
      ok = false;
      return;
    }
    if (graph) {
      const KekuleStructure s =
          reconstruct_from_vbars(graph, chain_to_vbars(pulse_decompose(m)));
      if (!(kekule_to_matrix(s) == m)) {
        ok = false;
      }
    }
  });
  return ok;
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.max_n < 1 || options.max_k < 1) {
    throw ValidationError("verify requires max_n >= 1 and max_k >= 1");
  }
  VerifyReport report;
  for (int n = 1; n <= options.max_n; ++n) {
    for (int k = 1; k <= options.max_k; ++k) {
      const auto start = Clock::now();
      VerifyCell cell;
      cell.n = n;
      cell.k = k;
      cell.closed = count_wim_closed(n, k);
      cell.lgv = count_wim_lgv(2, n, k);
      bool enumeration_ran = false;
      try {
        cell.enumerated = count_wim_enumerated(2, n, k);
        enumeration_ran = true;
      } catch (const BudgetError&) {
      }
      try {
        cell.paths = count_nonintersecting_tuples(2, n, k, options.tuple_budget);
      } catch (const BudgetError&) {
      }
      if (options.include_matchings && k >= 2) {
        try {
          cell.kekule =
              count_kekule_enumerated(build_benzenoid(n, 2, k - 1), options.edge_budget);
        } catch (const BudgetError&) {
        }
      }
      if (enumeration_ran && *cell.enumerated <= kRoundTripCap) {
        cell.round_trips_ok = run_round_trips(n, k, options.include_matchings);
      }
      cell.agree = cell.round_trips_ok;
      for (const auto* count : {&cell.lgv, &cell.enumerated, &cell.paths, &cell.kekule}) {
        if (count->has_value() && **count != *cell.closed) {
          cell.agree = false;
        }
      }
      cell.elapsed_ms = ms_since(start);
      report.all_agree = report.all_agree && cell.agree;
      report.cells.push_back(std::move(cell));
    }
  }

  if (options.include_matchings) {
    for (int p = 1; p <= options.max_pqr; ++p) {
      for (int q = 1; q <= options.max_pqr; ++q) {
        for (int r = 1; r <= options.max_pqr; ++r) {
          const auto start = Clock::now();
          MatchingCell cell;
          cell.p = p;
          cell.q = q;
          cell.r = r;
          cell.closed = count_kekule_closed(p, q, r);
          try {
            cell.enumerated =
                count_kekule_enumerated(build_benzenoid(p, q, r), options.edge_budget);
          } catch (const BudgetError&) {
          }
          cell.agree = !cell.enumerated.has_value() || *cell.enumerated == cell.closed;
          cell.elapsed_ms = ms_since(start);
          report.all_agree = report.all_agree && cell.agree;
          report.matching_cells.push_back(std::move(cell));
        }
      }
    }
  }
  return report;
}

namespace {

void print_count(std::ostream& out, const char* name,
                 const std::optional<BigInt>& count) {
  out << ' ' << name << '=';
  if (count.has_value()) {
    out << count->str();
  } else {
    out << '-';
  }
}

}  // namespace

void print_report(std::ostream& out, const VerifyReport& report) {
  for (const VerifyCell& cell : report.cells) {
    out << "n=" << cell.n << " k=" << cell.k << " |";
    print_count(out, "closed", cell.closed);
    print_count(out, "lgv", cell.lgv);
    print_count(out, "enumerate", cell.enumerated);
    print_count(out, "paths", cell.paths);
    print_count(out, "kekule", cell.kekule);
    out << " | round-trips " << (cell.round_trips_ok ? "ok" : "FAILED");
    out << " | " << (cell.agree ? "agree" : "DISAGREE");
    out << " | " << cell.elapsed_ms << " ms\n";
  }
  for (const MatchingCell& cell : report.matching_cells) {
    out << "p=" << cell.p << " q=" << cell.q << " r=" << cell.r << " |";
    out << " closed=" << cell.closed.str();
    print_count(out, "enumerate", cell.enumerated);
    out << " | " << (cell.agree ? "agree" : "DISAGREE");
    out << " | " << cell.elapsed_ms << " ms\n";
  }
  const size_t total = report.cells.size() + report.matching_cells.size();
  out << (report.all_agree ? "verify: all " : "verify: DISAGREEMENT among ") << total
      << " cells" << (report.all_agree ? " agree" : "") << "\n";
}

}  // namespace wimlab
