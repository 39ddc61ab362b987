#include <random>
#include <set>

#include <doctest.h>

#include "wimlab/errors.hpp"
#include "wimlab/exact_count.hpp"
#include "wimlab/wim.hpp"

using namespace wimlab;

namespace {

const WIMatrix kW = make_wim({{1, 1, 2, 3, 6, 6}, {1, 1, 2, 4, 6, 7}}, 7);

const PulseChain kWChain{6, {{2, 2}, {3, 3}, {4, 3}, {4, 4}, {4, 4}, {6, 5}}};

WIMatrix constant_matrix(int m, int n, int value, int k) {
  return make_wim(std::vector<std::vector<int>>(
                      static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(n), value)),
                  k);
}

}  // namespace

TEST_CASE("validate_wim") {
  CHECK(validate_wim({{1, 1, 2, 3, 6, 6}, {1, 1, 2, 4, 6, 7}}, 7));
  CHECK_FALSE(validate_wim({{1, 2}, {2, 1}}, 2));
  CHECK(validate_wim({{1}, {1}}, 1));
  CHECK_FALSE(validate_wim({{2, 1}}, 2));          // row decreases
  CHECK_FALSE(validate_wim({{1, 3}}, 2));          // entry above bound
  CHECK_FALSE(validate_wim({{0, 1}}, 2));          // entry below 1
  CHECK_FALSE(validate_wim({{1, 2}, {1}}, 2));     // ragged
  CHECK_FALSE(validate_wim({}, 2));
  CHECK_FALSE(validate_wim({{1}}, 0));
}

TEST_CASE("enumeration lists the six 2x2 bound-2 matrices in order") {
  const std::vector<WIMatrix> ms = enumerate_wim(2, 2, 2);
  const std::vector<std::vector<std::vector<int>>> expected = {
      {{1, 1}, {1, 1}}, {{1, 1}, {1, 2}}, {{1, 1}, {2, 2}},
      {{1, 2}, {1, 2}}, {{1, 2}, {2, 2}}, {{2, 2}, {2, 2}},
  };
  REQUIRE(ms.size() == expected.size());
  for (size_t i = 0; i < ms.size(); ++i) {
    CHECK(ms[i].rows == expected[i]);
    CHECK(ms[i].k == 2);
  }
}

TEST_CASE("enumeration edge cases") {
  const std::vector<WIMatrix> single = enumerate_wim(2, 1, 1);
  REQUIRE(single.size() == 1);
  CHECK(single[0].rows == std::vector<std::vector<int>>{{1}, {1}});

  CHECK(enumerate_wim(3, 1, 2).size() == 4);

  CHECK_THROWS_AS(for_each_wim(3, 6, 2, [](const WIMatrix&) {}), BudgetError);
  CHECK_THROWS_AS(for_each_wim(0, 1, 1, [](const WIMatrix&) {}), ValidationError);
}

TEST_CASE("stream is row-major lexicographic and every element validates") {
  std::vector<int> prev;
  for_each_wim(2, 3, 3, [&prev](const WIMatrix& m) {
    CHECK(validate_wim(m.rows, m.k));
    std::vector<int> flat;
    for (const auto& row : m.rows) {
      flat.insert(flat.end(), row.begin(), row.end());
    }
    CHECK(prev < flat);
    prev = flat;
  });
}

TEST_CASE("stream cardinality matches the closed formula") {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= 5; ++k) {
      CHECK(count_wim_enumerated(2, n, k) == count_wim_closed(n, k));
    }
  }
}

TEST_CASE("pulse decomposition of the worked example") {
  CHECK(pulse_decompose(kW) == kWChain);
}

TEST_CASE("pulse decomposition of constant matrices") {
  // all-ones: zero residue after subtracting J, so every pulse is (n, n)
  CHECK(pulse_decompose(constant_matrix(2, 4, 1, 5)) ==
        PulseChain{4, {{4, 4}, {4, 4}, {4, 4}, {4, 4}}});
  // all-k: every pulse is the all-ones pulse (0, 0)
  CHECK(pulse_decompose(constant_matrix(2, 3, 4, 4)) ==
        PulseChain{3, {{0, 0}, {0, 0}, {0, 0}}});
}

TEST_CASE("pulse decomposition rejects bad input") {
  CHECK_THROWS_AS(pulse_decompose(constant_matrix(3, 2, 1, 2)), ValidationError);
  CHECK_THROWS_AS(pulse_decompose(WIMatrix{2, {{1, 2}, {2, 1}}}), ValidationError);
}

TEST_CASE("pulse composition") {
  CHECK(pulse_compose(kWChain) == kW);
  CHECK(pulse_compose(PulseChain{3, {}}) == constant_matrix(2, 3, 1, 1));
  CHECK(pulse_compose(PulseChain{2, {{0, 0}}}) == constant_matrix(2, 2, 2, 2));

  CHECK_THROWS_AS(pulse_compose(PulseChain{2, {{1, 2}}}), ValidationError);   // y > x
  CHECK_THROWS_AS(pulse_compose(PulseChain{2, {{2, 1}, {1, 1}}}), ValidationError);
  CHECK_THROWS_AS(pulse_compose(PulseChain{2, {{0, 0}, {2, 3}}}), ValidationError);
  CHECK_THROWS_AS(pulse_compose(PulseChain{2, {{3, 1}}}), ValidationError);   // x > n
}

TEST_CASE("decompose and compose are mutually inverse") {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= 5; ++k) {
      for_each_wim(2, n, k, [](const WIMatrix& m) {
        const PulseChain chain = pulse_decompose(m);
        CHECK(valid_pulse_chain(chain));
        CHECK(static_cast<int>(chain.pulses.size()) == m.k - 1);
        CHECK(pulse_compose(chain) == m);
      });
    }
  }
}

TEST_CASE("valid chains compose to distinct matrices and count them all") {
  for (int n = 1; n <= 3; ++n) {
    for (int k = 1; k <= 3; ++k) {
      // every (k-1)-tuple of pulse pairs over [0, n]^2
      const int pair_count = (n + 1) * (n + 1);
      int combos = 1;
      for (int i = 1; i < k; ++i) {
        combos *= pair_count;
      }
      std::set<std::vector<std::vector<int>>> images;
      long long valid = 0;
      for (int code = 0; code < combos; ++code) {
        PulseChain chain;
        chain.n = n;
        int rest = code;
        for (int i = 1; i < k; ++i) {
          const int pair = rest % pair_count;
          rest /= pair_count;
          chain.pulses.push_back(PulsePair{pair / (n + 1), pair % (n + 1)});
        }
        if (!valid_pulse_chain(chain)) {
          continue;
        }
        ++valid;
        images.insert(pulse_compose(chain).rows);
      }
      CHECK(BigInt(valid) == count_wim_closed(n, k));
      CHECK(BigInt(images.size()) == count_wim_closed(n, k));
    }
  }
}

TEST_CASE("compose then decompose returns the chain unchanged") {
  std::mt19937 rng(311);
  std::uniform_int_distribution<int> n_dist(1, 6);
  std::uniform_int_distribution<int> len_dist(0, 5);
  for (int trial = 0; trial < 300; ++trial) {
    PulseChain chain;
    chain.n = n_dist(rng);
    const int len = len_dist(rng);
    std::uniform_int_distribution<int> coord(0, chain.n);
    int x = 0;
    int y = 0;
    for (int i = 0; i < len; ++i) {
      // grow monotonically so the chain is valid by construction
      x = std::max(x, coord(rng));
      y = std::max(y, std::min(x, coord(rng)));
      chain.pulses.push_back(PulsePair{x, y});
    }
    CHECK(pulse_decompose(pulse_compose(chain)) == chain);
  }
}

TEST_CASE("composition accepts a chain exactly when it is monotone") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> n_dist(1, 5);
  std::uniform_int_distribution<int> len_dist(0, 4);
  for (int trial = 0; trial < 500; ++trial) {
    PulseChain chain;
    chain.n = n_dist(rng);
    std::uniform_int_distribution<int> coord(0, chain.n);
    const int len = len_dist(rng);
    for (int i = 0; i < len; ++i) {
      chain.pulses.push_back(PulsePair{coord(rng), coord(rng)});
    }
    if (valid_pulse_chain(chain)) {
      CHECK_NOTHROW(pulse_compose(chain));
    } else {
      CHECK_THROWS_AS(pulse_compose(chain), ValidationError);
    }
  }
}
