#pragma once

// Transfer-matrix sweep over a rectangle W cells high. The cut line moves one
// vertex at a time, top row to bottom row within a column, and each cut
// signature prescribes how its occupied edges must connect to the right of
// the cut. Completed walks are tallied per column of their rightmost vertex.
//
// State keys use a W+2 slot layout: the W+1 horizontal edges and the vertical
// kink edge in bottom-to-top order. With the next vertex at row r, slots
// 0..r hold edges entering the current column, slot r+1 is the kink edge
// above that vertex, and slots r+2..W+1 hold edges leaving the column.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "sawtm/modseries.hpp"
#include "sawtm/signature.hpp"

namespace sawtm {

inline constexpr std::size_t kMaxWidth = kMaxSignatureSlots - 2;

struct SweepGeometry {
  std::size_t width = 0;
  std::size_t max_columns = 0;
  std::size_t column = 0;
  std::size_t row = 0;  // row of the vertex processed next
};

using StateMap = std::map<SignatureKey, TruncatedPolynomial>;

struct CompletionLedger {
  std::vector<TruncatedPolynomial> per_column;  // index = column of the rightmost vertex
};

// Raised when a forbidden kink state shows up; indicates an update-rule bug.
class KinkStateFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class SweepObserver {
 public:
  virtual ~SweepObserver() = default;
  // Every state kept after a vertex step (before the end-of-column shift).
  virtual void on_state(const SweepGeometry& /*processed*/, std::span<const EdgeState> /*seq*/,
                        bool /*bottom*/, bool /*top*/, std::size_t /*min_degree*/) {}
  // Every source -> target transition that survives pruning.
  virtual void on_transition(const SweepGeometry& /*processed*/, std::span<const EdgeState> /*from*/,
                             std::span<const EdgeState> /*to*/, std::size_t /*shift*/) {}
  // One call per bound evaluation with the number of entries it touched.
  virtual void on_bound(std::size_t /*width*/, std::size_t /*visits*/) {}
};

struct SweepOptions {
  std::size_t width = 0;
  std::size_t max_columns = 0;
  std::size_t n_max = 0;
  std::vector<Modulus> moduli = default_moduli();
  bool prune = true;
  std::size_t workers = 1;
  SweepObserver* observer = nullptr;  // requires workers == 1
};

struct SweepStats {
  std::size_t max_states = 0;
  std::size_t max_terms = 0;  // coefficient slots per modulus
  std::size_t pruned = 0;
  std::size_t transitions = 0;
};

SignatureKey pack_state(std::span<const EdgeState> seq, bool bottom, bool top);
Signature unpack_state(SignatureKey key, std::size_t width);

StateMap seed(std::size_t width, std::size_t n_max, std::size_t num_moduli);

// Processes the vertex at (geom.column, geom.row). Completions land in
// ledger.per_column[geom.column].
StateMap kink_update(const StateMap& states, const SweepGeometry& geom, std::size_t n_max,
                     std::span<const Modulus> moduli, CompletionLedger& ledger, bool prune = true);

// Moves the cut from after row 0 of geom.column to the start of the next
// column. After column 0 the unstarted (all-empty) state is dropped.
StateMap finish_column(const StateMap& states, const SweepGeometry& geom);

// Columns 0..max_columns. Ledger entries below column W are exact only with
// pruning disabled, since pruning assumes the walk spans at least W columns.
CompletionLedger sweep(const SweepOptions& options, SweepStats* stats = nullptr);

}  // namespace sawtm
