#include <doctest.h>

#include <string>

#include "sawtm/tm_engine.hpp"
#include "walk_trace.hpp"

using namespace sawtm;
using namespace sawtm::testing;

namespace {

std::string seq_str(const std::vector<EdgeState>& s) {
  std::string out;
  for (EdgeState e : s) out += to_char(e);
  return out;
}

// Follows every walk of a box through an unpruned sweep and checks that the
// state it implies is present after each vertex step.
void trace_box(int width, int length, int n_max) {
  const auto walks = walks_in_box(width, length, n_max);
  const auto moduli = default_moduli();
  StateMap states = seed(static_cast<std::size_t>(width), static_cast<std::size_t>(n_max), moduli.size());
  CompletionLedger ledger;
  for (int c = 0; c <= length; ++c) {
    for (int r = width; r >= 0; --r) {
      SweepGeometry g{static_cast<std::size_t>(width), static_cast<std::size_t>(length),
                      static_cast<std::size_t>(c), static_cast<std::size_t>(r)};
      states = kink_update(states, g, static_cast<std::size_t>(n_max), moduli, ledger, false);
      for (const Walk& w : walks) {
        const CutState st = cut_state(w, width, c, r);
        if (!st.started || st.finished) continue;
        const SignatureKey key = pack_state(st.seq, st.bottom, st.top);
        if (!states.count(key)) {
          std::string path;
          for (auto [x, y] : w) path += "(" + std::to_string(x) + "," + std::to_string(y) + ")";
          const CutState before = r < width ? cut_state(w, width, c, r + 1) : CutState{};
          FAIL_CHECK("missing state " << seq_str(st.seq) << " b" << st.bottom << " t" << st.top
                                      << " after (" << c << "," << r << ") for walk " << path
                                      << " previous " << seq_str(before.seq));
          return;
        }
      }
    }
    SweepGeometry g{static_cast<std::size_t>(width), static_cast<std::size_t>(length),
                    static_cast<std::size_t>(c), 0};
    states = finish_column(states, g);
  }
}

}  // namespace

TEST_CASE("every walk in small boxes is carried by the sweep") {
  for (int w = 1; w <= 3; ++w) {
    for (int l = w; l <= 4; ++l) {
      CAPTURE(w);
      CAPTURE(l);
      trace_box(w, l, 11);
    }
  }
}
