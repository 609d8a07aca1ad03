#pragma once

// Finite-lattice assembly of the walk series from per-width sweeps.

#include <cstddef>
#include <functional>
#include <vector>

#include "sawtm/modseries.hpp"
#include "sawtm/series_file.hpp"
#include "sawtm/tm_engine.hpp"

namespace sawtm {

struct RunPlan {
  std::size_t wmax = 0;
  std::vector<Modulus> moduli = default_moduli();
  std::size_t workers = 1;
  bool prune = true;
  // Called after each width finishes.
  std::function<void(std::size_t width, const SweepStats&)> on_width;

  std::size_t n_max() const { return 2 * wmax + 1; }
};

// c_0..c_{2 wmax + 1} in residue form. Every walk has a bounding box W x L
// with W + L <= n; boxes with L > W stand in for their rotations too, and
// each undirected shape is counted in both directions.
SeriesTable enumerate(const RunPlan& plan);

// Directed walks whose bounding box is exactly W x L cells (W <= L), by
// length up to plan.n_max(). The sweep runs with pruning disabled.
TruncatedPolynomial box_counts(const RunPlan& plan, std::size_t width, std::size_t length);

}  // namespace sawtm
