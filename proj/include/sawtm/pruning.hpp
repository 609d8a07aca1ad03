#pragma once

// Lower bounds on the number of steps a partial walk still needs before it
// can be completed as a walk spanning its rectangle. A state is discarded
// when its minimum degree plus this bound exceeds the target order.

#include <cstddef>
#include <span>

#include "sawtm/signature.hpp"

namespace sawtm {

struct PruneContext {
  std::size_t width = 0;   // W, cells
  std::size_t column = 0;  // column the walk is already known to reach
  std::size_t n_max = 0;   // target order N
};

// Steps needed to realise every arc, for a straight cut line. An arc (i, j)
// needs j - i vertical steps and, when other occupied edges are nested inside
// it, two horizontal steps per level of nesting depth below it.
std::size_t connection_cost(const ArcList& arcs);

// Vertical steps still needed to reach the bottom and/or top boundary rows.
std::size_t border_cost(const Signature& sig, const PruneContext& ctx);

// Horizontal steps still needed so the walk extends at least W columns.
std::size_t extension_cost(const PruneContext& ctx);

bool should_prune(std::size_t n_cur, std::size_t n_add, const PruneContext& ctx);

// Position of the cut line while a column is being built: edges below and at
// `next_row` still enter column `column`, edges above it already leave it.
// Sequences have width+2 slots with the kink edge at index next_row+1.
// next_row == -1 describes the cut after the column's last vertex.
struct CutFrontier {
  int width = 0;
  int column = 0;
  int next_row = 0;
};

// Combined admissible bound on a staircase cut. When `visits` is non-null it
// is incremented once per signature entry or arc touched.
std::size_t min_additional_steps(std::span<const EdgeState> seq, bool bottom_touched,
                                 bool top_touched, const CutFrontier& frontier,
                                 std::size_t* visits = nullptr);

// The same bound for a straight cut (W+1 edges) at the start of `ctx.column`.
std::size_t additional_steps(const Signature& sig, const PruneContext& ctx);

}  // namespace sawtm
