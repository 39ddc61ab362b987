// wimlab: exact counting and cross-validated bijections for 2 x n weakly
// increasing matrices, their Kekule structures, and non-intersecting lattice
// path pairs.
//
// Exit codes: 0 success, 1 usage error, 2 validation failure, 3 budget
// exceeded, 4 verification disagreement.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include <CLI11.hpp>

#include "wimlab/benzenoid.hpp"
#include "wimlab/errors.hpp"
#include "wimlab/exact_count.hpp"
#include "wimlab/json_io.hpp"
#include "wimlab/lattice.hpp"
#include "wimlab/svg_render.hpp"
#include "wimlab/verify.hpp"
#include "wimlab/wim.hpp"

namespace {

using wimlab::Json;

std::uint64_t budget_or(std::uint64_t fallback) {
  const char* env = std::getenv("WIMLAB_BUDGET");
  if (env == nullptr || *env == '\0') {
    return fallback;
  }
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (end == nullptr || *end != '\0' || value == 0) {
    throw wimlab::ValidationError("WIMLAB_BUDGET must be a positive integer");
  }
  return value;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) {
    throw wimlab::ValidationError("cannot read input file: " + path);
  }
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

Json read_input_json(const std::string& path) {
  return wimlab::parse_json_text(read_input(path));
}

int run_count(int n, int k, int m, const std::string& method) {
  wimlab::BigInt count;
  if (method == "closed") {
    if (m != 2) {
      throw wimlab::ValidationError("the closed formula counts 2-row matrices only");
    }
    count = wimlab::count_wim_closed(n, k);
  } else if (method == "lgv") {
    count = wimlab::count_wim_lgv(m, n, k);
  } else if (method == "enumerate") {
    count = wimlab::count_wim_enumerated(m, n, k);
  } else if (method == "paths") {
    count = wimlab::count_nonintersecting_tuples(m, n, k,
                                                 budget_or(wimlab::kDefaultTupleBudget));
  } else {
    if (m != 2 || k < 2) {
      throw wimlab::ValidationError("the kekule method requires m = 2 and k >= 2");
    }
    count = wimlab::count_kekule_enumerated(wimlab::build_benzenoid(n, 2, k - 1),
                                            budget_or(wimlab::kDefaultEdgeBudget));
  }
  std::cout << wimlab::to_decimal(count) << "\n";
  return 0;
}

int run_enumerate(const std::string& what, int n, int k, int m, int p, int q, int r) {
  Json out = Json::array();
  if (what == "wim") {
    wimlab::for_each_wim(
        m, n, k, [&out](const wimlab::WIMatrix& mat) { out.push_back(matrix_to_json(mat)); });
  } else if (what == "paths") {
    wimlab::for_each_nonintersecting_tuple(
        m, n, k,
        [&out](const wimlab::PathTuple& tuple) { out.push_back(tuple_to_json(tuple)); },
        budget_or(wimlab::kDefaultTupleBudget));
  } else {
    wimlab::for_each_kekule(
        wimlab::build_benzenoid(p, q, r),
        [&out](const wimlab::KekuleStructure& s) {
          out.push_back(kekule_generic_to_json(s));
        },
        budget_or(wimlab::kDefaultEdgeBudget));
  }
  std::cout << wimlab::canonical_dump(out) << "\n";
  return 0;
}

int run_decompose(const std::string& input) {
  const wimlab::WIMatrix m = wimlab::matrix_from_json(read_input_json(input));
  std::cout << wimlab::canonical_dump(wimlab::chain_to_json(wimlab::pulse_decompose(m)))
            << "\n";
  return 0;
}

int run_map(const std::string& to, const std::string& from, const std::string& input) {
  const Json doc = read_input_json(input);
  Json out;
  if (!to.empty()) {
    const wimlab::WIMatrix m = wimlab::matrix_from_json(doc);
    if (to == "kekule") {
      out = wimlab::kekule_to_json(wimlab::matrix_to_kekule(m));
    } else {
      out = wimlab::tuple_to_json(wimlab::matrix_to_path_tuple(m));
    }
  } else {
    if (from == "kekule") {
      out = wimlab::matrix_to_json(wimlab::kekule_to_matrix(wimlab::kekule_from_json(doc)));
    } else {
      out = wimlab::matrix_to_json(wimlab::path_tuple_to_matrix(wimlab::tuple_from_json(doc)));
    }
  }
  std::cout << wimlab::canonical_dump(out) << "\n";
  return 0;
}

int run_render(const std::string& what, const std::string& input,
               const std::string& output) {
  std::string svg;
  if (what == "kekule") {
    svg = wimlab::render_kekule_svg(wimlab::kekule_from_json(read_input_json(input)));
  } else {
    svg = wimlab::render_paths_svg(wimlab::tuple_from_json(read_input_json(input)));
  }
  std::ofstream out(output);
  if (!out) {
    throw wimlab::ValidationError("cannot write output file: " + output);
  }
  out << svg;
  if (!out.good()) {
    throw wimlab::ValidationError("failed writing output file: " + output);
  }
  return 0;
}

int run_verify(int max_n, int max_k, bool include_matchings, int max_pqr) {
  wimlab::VerifyOptions options;
  options.max_n = max_n;
  options.max_k = max_k;
  options.include_matchings = include_matchings;
  options.max_pqr = max_pqr;
  options.tuple_budget = budget_or(wimlab::kDefaultTupleBudget);
  options.edge_budget = budget_or(wimlab::kDefaultEdgeBudget);
  const wimlab::VerifyReport report = wimlab::run_verify(options);
  wimlab::print_report(std::cout, report);
  return report.all_agree ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact counting and bijections for 2 x n weakly increasing matrices"};
  app.require_subcommand(1);

  int n = 1, k = 1, m = 2;
  int p = 1, q = 2, r = 1;
  std::string method;
  std::string what = "wim";
  std::string input = "-";
  std::string output;
  std::string map_to;
  std::string map_from;
  int max_n = 4, max_k = 4, max_pqr = 3;
  bool include_matchings = false;

  CLI::App* count = app.add_subcommand("count", "count matrices by one of the routes");
  count->add_option("--n", n, "column count")->required()->check(CLI::PositiveNumber);
  count->add_option("--k", k, "entry bound")->required()->check(CLI::PositiveNumber);
  count->add_option("--m", m, "row count (default 2)")->check(CLI::PositiveNumber);
  count->add_option("--method", method, "closed|lgv|enumerate|paths|kekule")
      ->required()
      ->check(CLI::IsMember({"closed", "lgv", "enumerate", "paths", "kekule"}));

  CLI::App* enumerate = app.add_subcommand("enumerate", "list objects as a JSON array");
  enumerate->add_option("--what", what, "wim|kekule|paths (default wim)")
      ->check(CLI::IsMember({"wim", "kekule", "paths"}));
  enumerate->add_option("--n", n, "column count")->check(CLI::PositiveNumber);
  enumerate->add_option("--k", k, "entry bound")->check(CLI::PositiveNumber);
  enumerate->add_option("--m", m, "row count (default 2)")->check(CLI::PositiveNumber);
  enumerate->add_option("--p", p, "benzenoid p")->check(CLI::PositiveNumber);
  enumerate->add_option("--q", q, "benzenoid q")->check(CLI::PositiveNumber);
  enumerate->add_option("--r", r, "benzenoid r")->check(CLI::PositiveNumber);

  CLI::App* decompose =
      app.add_subcommand("decompose", "pulse-decompose a 2-row matrix document");
  decompose->add_option("--input", input, "matrix JSON file, or - for stdin");

  CLI::App* map_cmd = app.add_subcommand("map", "apply a bijection to a document");
  map_cmd->add_option("--to", map_to, "map a matrix to kekule|paths")
      ->check(CLI::IsMember({"kekule", "paths"}));
  map_cmd->add_option("--from", map_from, "map kekule|paths back to a matrix")
      ->check(CLI::IsMember({"kekule", "paths"}));
  map_cmd->add_option("--input", input, "input JSON file, or - for stdin");

  CLI::App* render = app.add_subcommand("render", "render a document as SVG");
  render->add_option("--what", what, "kekule|paths")
      ->required()
      ->check(CLI::IsMember({"kekule", "paths"}));
  render->add_option("--input", input, "input JSON file, or - for stdin");
  render->add_option("--output", output, "output SVG path")->required();

  CLI::App* verify = app.add_subcommand("verify", "cross-validate all counting routes");
  verify->add_option("--max-n", max_n, "largest n (default 4)")->check(CLI::PositiveNumber);
  verify->add_option("--max-k", max_k, "largest k (default 4)")->check(CLI::PositiveNumber);
  verify->add_flag("--include-matchings", include_matchings,
                   "also enumerate Kekule structures and sweep the p,q,r grid");
  verify->add_option("--max-pqr", max_pqr, "largest p, q, r (default 3)")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (app.got_subcommand(count)) {
      return run_count(n, k, m, method);
    }
    if (app.got_subcommand(enumerate)) {
      return run_enumerate(what, n, k, m, p, q, r);
    }
    if (app.got_subcommand(decompose)) {
      return run_decompose(input);
    }
    if (app.got_subcommand(map_cmd)) {
      if (map_to.empty() == map_from.empty()) {
        std::cerr << "map: exactly one of --to and --from is required\n";
        return 1;
      }
      return run_map(map_to, map_from, input);
    }
    if (app.got_subcommand(render)) {
      return run_render(what, input, output);
    }
    return run_verify(max_n, max_k, include_matchings, max_pqr);
  } catch (const wimlab::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const wimlab::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const wimlab::StructureViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 2;
  }
}
