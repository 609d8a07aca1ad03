#include "sawtm/pruning.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <vector>

namespace sawtm {

std::size_t connection_cost(const ArcList& arcs) {
  // Heights are found with a sweep over arc ends: an arc's height is one more
  // than the tallest arc directly inside it.
  struct Event {
    std::size_t pos;
    bool opens;
  };
  std::vector<Event> events;
  events.reserve(2 * arcs.size());
  for (const Arc& a : arcs) {
    events.push_back({a.lower, true});
    events.push_back({a.upper, false});
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) { return a.pos < b.pos; });

  std::size_t cost = 0;
  std::vector<std::pair<std::size_t, int>> stack;  // (lower position, tallest child height)
  for (const Event& e : events) {
    if (e.opens) {
      stack.emplace_back(e.pos, -1);
      continue;
    }
    const auto [lower, child] = stack.back();
    stack.pop_back();
    const int height = child + 1;
    cost += (e.pos - lower) + 2 * static_cast<std::size_t>(height);
    if (!stack.empty()) stack.back().second = std::max(stack.back().second, height);
  }
  return cost;
}

std::size_t border_cost(const Signature& sig, const PruneContext& ctx) {
  if (sig.bottom_touched && sig.top_touched) return 0;
  std::size_t lowest = sig.edges.size();
  std::size_t highest = 0;
  bool any = false;
  for (std::size_t i = 0; i < sig.edges.size(); ++i) {
    if (sig.edges[i] == EdgeState::Empty) continue;
    lowest = std::min(lowest, i);
    highest = std::max(highest, i);
    any = true;
  }
  if (!any) return ctx.width;
  std::size_t cost = 0;
  if (!sig.bottom_touched) cost += lowest;
  if (!sig.top_touched) cost += ctx.width > highest ? ctx.width - highest : 0;
  return cost;
}

std::size_t extension_cost(const PruneContext& ctx) {
  return ctx.width > ctx.column ? ctx.width - ctx.column : 0;
}

bool should_prune(std::size_t n_cur, std::size_t n_add, const PruneContext& ctx) {
  return n_cur + n_add > ctx.n_max;
}

std::size_t min_additional_steps(std::span<const EdgeState> seq, bool bottom_touched,
                                 bool top_touched, const CutFrontier& f, std::size_t* visits) {
  // Every occupied edge leads to a vertex right of the cut. Entries at or
  // below next_row reach column `column`; the kink entry reaches the vertex at
  // next_row; the rest reach column+1. A strand enclosing other strands must
  // pass to the right of all of them, which costs horizontal steps.
  //
  // On top of the steps each strand needs by itself, the walk still has to
  // reach the bottom row, the top row and column W if it has not done so.
  // Each of those is charged to the single strand that can do it cheapest:
  // a free strand goes there and ends, an arc has to go there and come back.
  struct Open {
    int row;
    int col;
    int inner;  // farthest column reached by anything nested inside
  };
  std::array<Open, kMaxSignatureSlots> stack;
  std::size_t depth = 0;

  const int n = static_cast<int>(seq.size());
  const int w = f.width;
  constexpr int kFar = 1 << 20;
  int to_bottom = kFar;
  int to_top = kFar;
  int to_width = kFar;
  bool placed = false;
  std::size_t cost = 0;
  std::size_t touched = 0;

  for (int p = 0; p < n; ++p) {
    ++touched;
    const EdgeState s = seq[static_cast<std::size_t>(p)];
    if (s == EdgeState::Empty) continue;
    placed = true;
    int row;
    int col;
    if (p <= f.next_row) {
      row = p;
      col = f.column;
    } else if (p == f.next_row + 1) {
      row = f.next_row;
      col = f.column;
    } else {
      row = p - 1;
      col = f.column + 1;
    }
    if (s == EdgeState::Lower) {
      stack[depth++] = Open{row, col, -1};
    } else if (s == EdgeState::Upper) {
      ++touched;
      const Open open = stack[--depth];
      const int far = std::max({open.col, col, open.inner + 1});
      cost += static_cast<std::size_t>(std::abs(row - open.row) + 2 * far - open.col - col);
      if (depth > 0) stack[depth - 1].inner = std::max(stack[depth - 1].inner, far);
      const int lo = std::min(row, open.row);
      const int hi = std::max(row, open.row);
      to_bottom = std::min(to_bottom, 2 * lo);
      to_top = std::min(to_top, 2 * (w - hi));
      to_width = std::min(to_width, 2 * std::max(0, w - far));
    } else {
      if (depth > 0) stack[depth - 1].inner = std::max(stack[depth - 1].inner, col);
      to_bottom = std::min(to_bottom, row);
      to_top = std::min(to_top, w - row);
      to_width = std::min(to_width, std::max(0, w - col));
    }
  }
  if (visits) *visits += touched;

  if (!placed) {
    // Nothing placed yet: the walk must still span all rows and W columns.
    return static_cast<std::size_t>(2 * w);
  }
  if (!bottom_touched) cost += static_cast<std::size_t>(to_bottom);
  if (!top_touched) cost += static_cast<std::size_t>(to_top);
  if (f.column < w) cost += static_cast<std::size_t>(to_width);
  return cost;
}

std::size_t additional_steps(const Signature& sig, const PruneContext& ctx) {
  std::vector<EdgeState> seq(sig.edges);
  seq.resize(ctx.width + 2, EdgeState::Empty);
  return min_additional_steps(seq, sig.bottom_touched, sig.top_touched,
                              CutFrontier{static_cast<int>(ctx.width), static_cast<int>(ctx.column),
                                          static_cast<int>(ctx.width)});
}

}  // namespace sawtm
