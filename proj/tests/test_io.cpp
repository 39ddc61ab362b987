#include <random>
#include <string>

#include <doctest.h>

#include "wimlab/errors.hpp"
#include "wimlab/json_io.hpp"
#include "wimlab/svg_render.hpp"
#include "wimlab/verify.hpp"

using namespace wimlab;

namespace {

const WIMatrix kW = make_wim({{1, 1, 2, 3, 6, 6}, {1, 1, 2, 4, 6, 7}}, 7);
const VBarTuple kFig1Tuple{6, 6, {2, 3, 4, 4, 4, 6}, {2, 3, 3, 4, 4, 5}};

size_t count_occurrences(const std::string& haystack, const std::string& needle) {
  size_t count = 0;
  for (size_t pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("matrix documents") {
  const std::string canonical =
      "{\"k\":7,\"rows\":[[1,1,2,3,6,6],[1,1,2,4,6,7]]}";
  CHECK(canonical_dump(matrix_to_json(kW)) == canonical);
  CHECK(matrix_from_json(parse_json_text(canonical)) == kW);

  CHECK_THROWS_AS(parse_json_text("{not json"), ValidationError);
  CHECK_THROWS_AS(matrix_from_json(parse_json_text("{\"rows\":[[1]]}")),
                  ValidationError);
  CHECK_THROWS_AS(matrix_from_json(parse_json_text("{\"k\":2,\"rows\":[[2,1]]}")),
                  ValidationError);
  CHECK_THROWS_AS(matrix_from_json(parse_json_text("{\"k\":2,\"rows\":[[1,1.5]]}")),
                  ValidationError);
}

TEST_CASE("pulse chain document") {
  CHECK(canonical_dump(chain_to_json(pulse_decompose(kW))) ==
        "[[2,2],[3,3],[4,3],[4,4],[4,4],[6,5]]");
  CHECK(canonical_dump(chain_to_json(PulseChain{2, {}})) == "[]");
}

TEST_CASE("path and tuple documents") {
  const PathTuple tuple = matrix_to_path_tuple(kW);
  const Json doc = tuple_to_json(tuple);
  CHECK(canonical_dump(doc) ==
        "{\"n\":6,\"k\":7,\"paths\":[{\"start\":[0,0],\"moves\":\"UURURURRRUUR\"},"
        "{\"start\":[1,-1],\"moves\":\"UURURRURRURU\"}]}");
  CHECK(tuple_from_json(doc) == tuple);
  CHECK(canonical_dump(tuple_to_json(tuple_from_json(doc))) == canonical_dump(doc));

  CHECK_THROWS_AS(path_from_json(parse_json_text("{\"start\":[0,0],\"moves\":\"RX\"}")),
                  ValidationError);
  CHECK_THROWS_AS(tuple_from_json(parse_json_text("{\"n\":1,\"k\":1,\"paths\":[]}")),
                  ValidationError);
}

TEST_CASE("random tuple documents round-trip bit-identically") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> n_dist(1, 5);
  std::uniform_int_distribution<int> k_dist(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = n_dist(rng);
    const int k = k_dist(rng);
    std::uniform_int_distribution<int> entry(1, k);
    std::vector<std::vector<int>> rows(2, std::vector<int>(static_cast<size_t>(n)));
    // random valid matrix: sort rows, then max with the row above
    for (auto& row : rows) {
      for (int& v : row) {
        v = entry(rng);
      }
      std::sort(row.begin(), row.end());
    }
    for (int j = 0; j < n; ++j) {
      rows[1][static_cast<size_t>(j)] =
          std::max(rows[1][static_cast<size_t>(j)], rows[0][static_cast<size_t>(j)]);
    }
    for (int j = 1; j < n; ++j) {
      rows[1][static_cast<size_t>(j)] =
          std::max(rows[1][static_cast<size_t>(j)], rows[1][static_cast<size_t>(j - 1)]);
    }
    const WIMatrix m = make_wim(rows, k);
    const std::string matrix_text = canonical_dump(matrix_to_json(m));
    CHECK(canonical_dump(matrix_to_json(matrix_from_json(parse_json_text(matrix_text)))) ==
          matrix_text);
    const std::string tuple_text = canonical_dump(tuple_to_json(matrix_to_path_tuple(m)));
    CHECK(canonical_dump(tuple_to_json(tuple_from_json(parse_json_text(tuple_text)))) ==
          tuple_text);
  }
}

TEST_CASE("structure documents") {
  const KekuleStructure fig1 =
      reconstruct_from_vbars(build_benzenoid(6, 2, 6), kFig1Tuple);
  const Json doc = kekule_to_json(fig1);
  CHECK(doc["n"] == 6);
  CHECK(doc["r"] == 6);
  CHECK(doc["xs"].get<std::vector<int>>() == kFig1Tuple.xs);
  CHECK(doc["ys"].get<std::vector<int>>() == kFig1Tuple.ys);
  CHECK(doc["selected"].size() == static_cast<size_t>(fig1.graph->vertex_count() / 2));

  const KekuleStructure parsed = kekule_from_json(doc);
  CHECK(parsed.selected == fig1.selected);
  CHECK(canonical_dump(kekule_to_json(parsed)) == canonical_dump(doc));

  CHECK_THROWS_AS(
      kekule_from_json(parse_json_text("{\"n\":3,\"r\":1,\"xs\":[1],\"ys\":[2]}")),
      ValidationError);
}

TEST_CASE("structure SVG element counts") {
  const BenzenoidGraphPtr hexagon = build_benzenoid(1, 1, 1);
  const KekuleStructure s = enumerate_kekule(hexagon)[0];
  const std::string svg = render_kekule_svg(s);
  CHECK(count_occurrences(svg, "<polygon") == 1);
  CHECK(count_occurrences(svg, "<line class=\"edge\"") == 6);
  CHECK(count_occurrences(svg, "<line class=\"bond\"") == 9);  // 3 selected, tripled
  CHECK(svg.find("<svg xmlns=") == 0);
  CHECK(svg.rfind("</svg>\n") == svg.size() - 7);

  const KekuleStructure fig1 =
      reconstruct_from_vbars(build_benzenoid(6, 2, 6), kFig1Tuple);
  const std::string big = render_kekule_svg(fig1);
  CHECK(count_occurrences(big, "<polygon") == 47);
  CHECK(count_occurrences(big, "<line class=\"bond\"") ==
        3 * fig1.selected.size());
  CHECK(count_occurrences(big, "<text class=\"vbar-label\"") == 12);  // 2r v-bars
  CHECK(big.find("(0,2)") != std::string::npos);
  CHECK(big.find("(6,5)") != std::string::npos);
}

TEST_CASE("path SVG") {
  const PathTuple tuple = matrix_to_path_tuple(kW);
  const std::string svg = render_paths_svg(tuple);
  CHECK(count_occurrences(svg, "<polyline") == 2);
  // 12 moves per path: 13 points each
  const size_t first = svg.find("<polyline");
  const size_t second = svg.find("<polyline", first + 1);
  for (size_t pos : {first, second}) {
    const size_t points = svg.find("points=\"", pos) + 8;
    const size_t end = svg.find('"', points);
    CHECK(count_occurrences(svg.substr(points, end - points), ",") == 13);
  }
  for (const char* label : {">a1<", ">a2<", ">b1<", ">b2<"}) {
    CHECK(svg.find(label) != std::string::npos);
  }
  CHECK(count_occurrences(svg, "<line class=\"grid\"") > 0);
}

TEST_CASE("verify harness flags nothing on the default grid") {
  VerifyOptions options;
  options.max_n = 3;
  options.max_k = 3;
  options.include_matchings = true;
  options.max_pqr = 2;
  const VerifyReport report = run_verify(options);
  CHECK(report.all_agree);
  CHECK(report.cells.size() == 9);
  CHECK(report.matching_cells.size() == 8);
  for (const VerifyCell& cell : report.cells) {
    CHECK(cell.agree);
    CHECK(cell.round_trips_ok);
    CHECK(cell.closed.has_value());
    CHECK(cell.lgv.has_value());
    if (cell.k >= 2) {
      CHECK(cell.kekule.has_value());
    }
  }
}

TEST_CASE("single-cell verify run") {
  VerifyOptions options;
  options.max_n = 1;
  options.max_k = 1;
  const VerifyReport report = run_verify(options);
  REQUIRE(report.cells.size() == 1);
  CHECK(report.cells[0].closed == BigInt(1));
  CHECK(report.cells[0].lgv == BigInt(1));
  CHECK(report.cells[0].enumerated == BigInt(1));
  CHECK(report.cells[0].paths == BigInt(1));
  CHECK(report.all_agree);
}
