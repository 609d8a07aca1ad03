#include "walk_trace.hpp"

#include <algorithm>
#include <set>

namespace sawtm::testing {

namespace {

void extend(Walk& w, std::set<Point>& seen, int width, int length, int n_max, std::vector<Walk>& out) {
  if (w.size() >= 2) {
    int xmin = 1 << 20, xmax = -(1 << 20), ymin = 1 << 20, ymax = -(1 << 20);
    for (auto [x, y] : w) {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
    if (xmin == 0 && ymin == 0 && xmax == length && ymax == width) {
      Walk rev(w.rbegin(), w.rend());
      if (w < rev) out.push_back(w);
    }
  }
  if (static_cast<int>(w.size()) > n_max) return;
  static const int dx[] = {1, 0, -1, 0};
  static const int dy[] = {0, 1, 0, -1};
  const Point last = w.back();
  for (int d = 0; d < 4; ++d) {
    const Point p{last.first + dx[d], last.second + dy[d]};
    if (p.first < 0 || p.first > length || p.second < 0 || p.second > width) continue;
    if (seen.count(p)) continue;
    seen.insert(p);
    w.push_back(p);
    extend(w, seen, width, length, n_max, out);
    w.pop_back();
    seen.erase(p);
  }
}

}  // namespace

std::vector<Walk> walks_in_box(int width, int length, int n_max) {
  std::vector<Walk> out;
  for (int x = 0; x <= length; ++x) {
    for (int y = 0; y <= width; ++y) {
      Walk w{{x, y}};
      std::set<Point> seen{{x, y}};
      extend(w, seen, width, length, n_max, out);
    }
  }
  return out;
}

CutState cut_state(const Walk& walk, int width, int column, int row) {
  auto past = [&](const Point& p) {
    return p.first < column || (p.first == column && p.second >= row);
  };
  // Slot of the cut edge between a past vertex a and a future vertex b.
  auto slot_of = [&](const Point& a, const Point& b) {
    if (a.first == b.first) return row;  // vertical edge below the last processed vertex
    if (b.first == column) return a.second;  // enters the current column below the kink
    return a.second + 1;                      // leaves the current column above the kink
  };
  CutState st;
  st.seq.assign(static_cast<std::size_t>(width + 2), EdgeState::Empty);
  bool any_past = false;
  bool any_future = false;
  for (const Point& p : walk) {
    if (past(p)) {
      any_past = true;
      if (p.second == 0) st.bottom = true;
      if (p.second == width) st.top = true;
    } else {
      any_future = true;
    }
  }
  st.started = any_past;
  st.finished = !any_future;
  if (!any_past || !any_future) return st;

  // Maximal runs of future vertices along the walk.
  const std::size_t n = walk.size();
  std::size_t i = 0;
  while (i < n) {
    if (past(walk[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < n && !past(walk[j + 1])) ++j;
    int ends[2];
    int count = 0;
    if (i > 0) ends[count++] = slot_of(walk[i - 1], walk[i]);
    if (j + 1 < n) ends[count++] = slot_of(walk[j + 1], walk[j]);
    if (count == 1) {
      st.seq[static_cast<std::size_t>(ends[0])] = EdgeState::Free;
    } else if (count == 2) {
      st.seq[static_cast<std::size_t>(std::min(ends[0], ends[1]))] = EdgeState::Lower;
      st.seq[static_cast<std::size_t>(std::max(ends[0], ends[1]))] = EdgeState::Upper;
    }
    i = j + 1;
  }
  // The sweep keeps the vertical edge on the slot below when that is empty.
  const auto r = static_cast<std::size_t>(row);
  if (r > 0 && st.seq[r] != EdgeState::Empty && st.seq[r - 1] == EdgeState::Empty) {
    std::swap(st.seq[r], st.seq[r - 1]);
  }
  return st;
}

}  // namespace sawtm::testing
