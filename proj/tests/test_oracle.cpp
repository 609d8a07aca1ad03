#include <doctest.h>

#include "sawtm/oracle.hpp"

using namespace sawtm;

TEST_CASE("first walk counts") {
  const SeriesTable t = count_walks(6);
  CHECK(t.values == std::vector<BigInt>{1, 4, 12, 36, 100, 284, 780});
  CHECK(count_walks(8, 4) == count_walks(8));
  for (std::size_t n = 2; n <= 6; ++n) {
    CHECK(t.values[n] > t.values[n - 1]);
    CHECK(t.values[n] <= 4 * boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(n - 1)));
  }
}

TEST_CASE("boxes add up to the walk count") {
  const std::size_t n_max = 9;
  const SeriesTable all = count_walks(n_max);
  std::vector<BigInt> sum(n_max + 1, 0);
  sum[0] = 1;
  for (std::size_t w = 0; w <= n_max; ++w) {
    for (std::size_t l = w; w + l <= n_max; ++l) {
      if (w + l == 0) continue;
      const auto counts = box_spanning_counts(w, l, n_max);
      for (std::size_t n = 0; n <= n_max; ++n) {
        // A box and its transpose hold the same number of walks.
        sum[n] += (w == l ? 1 : 2) * counts[n];
        if (n < w + l) CHECK(counts[n] == 0);
      }
    }
  }
  CHECK(sum == all.values);
}

TEST_CASE("straight boxes") {
  const auto counts = box_spanning_counts(0, 4, 7);
  for (std::size_t n = 0; n <= 7; ++n) CHECK(counts[n] == (n == 4 ? 2 : 0));
}

TEST_CASE("histogram agrees with direct box counts") {
  const BoxHistogram h = box_histogram(8);
  for (auto [wl, counts] : h) {
    const auto [w, l] = wl;
    if (w > l) continue;
    CHECK(counts == box_spanning_counts(w, l, 8));
  }
}

TEST_CASE("metric sums") {
  const MetricSeries m = metric_sums(8);
  CHECK(m.count.values == count_walks(8).values);
  CHECK(m.r2e.values[1] == 4);
  CHECK(m.r2g.values[1] == 4);
  // <R_e^2> at n = 2 is 8/3: four straight walks at 4 and eight bent ones at 2.
  CHECK(m.r2e.values[2] == 32);
  CHECK(3 * m.r2e.values[2] == 8 * m.count.values[2]);
  // <R_g^2> at n = 1 is 1/4.
  CHECK(4 * m.r2g.values[1] == (1 + 1) * (1 + 1) * m.count.values[1]);
  // Two-vertex walk: both vertices sit at distance 1 from one end.
  CHECK(m.r2m.values[1] == 4);
  CHECK(metric_sums(8, 4).r2m == m.r2m);
}
