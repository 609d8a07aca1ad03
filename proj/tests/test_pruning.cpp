#include <doctest.h>

#include <algorithm>
#include <set>
#include <utility>

#include "sawtm/pruning.hpp"
#include "walk_trace.hpp"

using namespace sawtm;
using namespace sawtm::testing;

TEST_CASE("connection cost") {
  CHECK(connection_cost({{0, 1, 0}}) == 1);
  CHECK(connection_cost({{0, 3, 0}, {1, 2, 1}}) == 6);
  CHECK(connection_cost({}) == 0);
  // Siblings under one arc only push it out by one level.
  CHECK(connection_cost({{1, 6, 0}, {2, 3, 1}, {4, 5, 1}}) == 9);
}

TEST_CASE("border cost") {
  PruneContext ctx{5, 0, 11};
  CHECK(border_cost(Signature::parse("001200", true, true), ctx) == 0);
  CHECK(border_cost(Signature::parse("001002", false, true), ctx) == 2);
  CHECK(border_cost(Signature::parse("000000"), ctx) >= 5);
}

TEST_CASE("extension cost") {
  CHECK(extension_cost({10, 3, 21}) == 7);
  CHECK(extension_cost({10, 12, 21}) == 0);
  CHECK(extension_cost({0, 4, 21}) == 0);
}

TEST_CASE("prune test") {
  const PruneContext ctx{20, 0, 41};
  CHECK(should_prune(30, 12, ctx));
  CHECK_FALSE(should_prune(30, 11, ctx));
}

TEST_CASE("nested strands are charged for going around") {
  // Two sibling arcs inside an outer one on a straight cut: the outer strand
  // has to clear the inner ones, nothing more.
  // Slot 0 is the (empty) kink below row 0 once the column is done.
  const std::vector<EdgeState> seq = Signature::parse("0112122").edges;
  const std::size_t bound = min_additional_steps(seq, true, true, CutFrontier{5, 6, -1});
  CHECK(bound == 9);
}

namespace {

bool past(const Point& p, int column, int row) {
  return p.first < column || (p.first == column && p.second >= row);
}

}  // namespace

// The bound is checked against the steps each real walk still takes after
// every vertex of the sweep. Only walks spanning at least W columns matter.
TEST_CASE("bound never exceeds the remaining steps") {
  std::size_t checked = 0;
  std::size_t tight = 0;
  for (int w = 0; w <= 4; ++w) {
    for (int l = std::max(w, 1); l <= w + 3; ++l) {
      for (const Walk& walk : walks_in_box(w, l, w + l + 4)) {
        for (int c = 0; c <= l; ++c) {
          for (int r = w; r >= 0; --r) {
            const CutState st = cut_state(walk, w, c, r);
            if (!st.started || st.finished) continue;
            std::size_t remaining = 0;
            for (std::size_t i = 1; i < walk.size(); ++i) {
              if (!past(walk[i - 1], c, r) && !past(walk[i], c, r)) ++remaining;
            }
            const std::size_t bound = min_additional_steps(st.seq, st.bottom, st.top, CutFrontier{w, c, r - 1});
            ++checked;
            if (bound == remaining) ++tight;
            if (bound > remaining) {
              CAPTURE(w);
              CAPTURE(l);
              CAPTURE(c);
              CAPTURE(r);
              FAIL_CHECK("bound " << bound << " over " << remaining);
            }
          }
        }
      }
    }
  }
  CHECK(checked > 10000);
  MESSAGE(tight << " of " << checked << " cut states have a tight bound");
}
