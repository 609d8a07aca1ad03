#pragma once

// Brute-force depth-first enumeration of square-lattice self-avoiding walks.
// Walks are directed vertex sequences counted up to translation. Meant for
// checking the transfer matrix at small lengths (n up to about 20).

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "sawtm/series_file.hpp"

namespace sawtm {

// c_0..c_{n_max}, exact.
SeriesTable count_walks(std::size_t n_max, std::size_t threads = 1);

// Walk counts keyed by exact bounding box (height W, length L) in cells;
// each vector is indexed by walk length 0..n_max.
using BoxHistogram = std::map<std::pair<std::size_t, std::size_t>, std::vector<BigInt>>;
BoxHistogram box_histogram(std::size_t n_max, std::size_t threads = 1);

// Counts by length of walks whose bounding box is exactly W cells high and
// L cells long.
std::vector<BigInt> box_spanning_counts(std::size_t width, std::size_t length, std::size_t n_max);

// Integer coefficient series of the three size generating functions:
//   r2e: sum over walks of |w_n - w_0|^2
//   r2g: sum over walks of sum_{i<j} |w_i - w_j|^2        ((n+1)^2 <R_g^2> c_n)
//   r2m: sum over walks of (1/2) sum_j |w_j - w_0|^2 + |w_j - w_n|^2   ((n+1) <R_m^2> c_n)
struct MetricSeries {
  SeriesTable count;
  SeriesTable r2e;
  SeriesTable r2g;
  SeriesTable r2m;
};
MetricSeries metric_sums(std::size_t n_max, std::size_t threads = 1);

}  // namespace sawtm
