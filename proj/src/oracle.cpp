#include "sawtm/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>

namespace sawtm {

namespace {

constexpr std::array<int, 4> kDx = {1, 0, -1, 0};
constexpr std::array<int, 4> kDy = {0, 1, 0, -1};

struct Tally {
  std::vector<std::uint64_t> count;
  std::vector<std::uint64_t> r2e;
  std::vector<std::uint64_t> r2g;
  std::vector<std::uint64_t> r2m2;  // twice the r2m contribution
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::uint64_t>> boxes;
};

// Walks on a (2n+1)^2 grid with the origin in the middle.
class Walker {
 public:
  Walker(std::size_t n_max, bool metrics, bool boxes, Tally& tally)
      : n_max_(static_cast<int>(n_max)),
        side_(2 * static_cast<int>(n_max) + 3),
        metrics_(metrics),
        boxes_(boxes),
        occupied_(static_cast<std::size_t>(side_ * side_), 0),
        tally_(tally) {
    tally_.count.assign(n_max + 1, 0);
    tally_.r2e.assign(n_max + 1, 0);
    tally_.r2g.assign(n_max + 1, 0);
    tally_.r2m2.assign(n_max + 1, 0);
  }

  void run(int first_direction) {
    occupied_[static_cast<std::size_t>(index(0, 0))] = 1;
    if (n_max_ >= 1) step(0, 0, 0, first_direction, Box{0, 0, 0, 0}, Sums{});
  }

 private:
  struct Box {
    int xmin, xmax, ymin, ymax;
  };
  struct Sums {
    std::int64_t sx = 0, sy = 0, s2 = 0, pair = 0;  // over vertices placed so far
  };

  int index(int x, int y) const { return (y + n_max_ + 1) * side_ + (x + n_max_ + 1); }

  void step(int len, int x, int y, int dir, Box box, Sums sums) {
    const int nx = x + kDx[static_cast<std::size_t>(dir)];
    const int ny = y + kDy[static_cast<std::size_t>(dir)];
    const int idx = index(nx, ny);
    if (occupied_[static_cast<std::size_t>(idx)]) return;
    const int n = len + 1;
    occupied_[static_cast<std::size_t>(idx)] = 1;
    ++tally_.count[static_cast<std::size_t>(n)];

    box.xmin = std::min(box.xmin, nx);
    box.xmax = std::max(box.xmax, nx);
    box.ymin = std::min(box.ymin, ny);
    box.ymax = std::max(box.ymax, ny);
    if (boxes_) {
      auto& v = tally_.boxes[{static_cast<std::size_t>(box.ymax - box.ymin),
                              static_cast<std::size_t>(box.xmax - box.xmin)}];
      if (v.empty()) v.assign(static_cast<std::size_t>(n_max_) + 1, 0);
      ++v[static_cast<std::size_t>(n)];
    }
    if (metrics_) {
      // Root at the origin, so |w_j - w_0|^2 = x_j^2 + y_j^2.
      const std::int64_t r2 = std::int64_t{nx} * nx + std::int64_t{ny} * ny;
      const std::int64_t dot = std::int64_t{nx} * sums.sx + std::int64_t{ny} * sums.sy;
      // sum over earlier vertices i of |w_i - w_n|^2; vertex count so far is n
      const std::int64_t to_new = n * r2 - 2 * dot + sums.s2;
      sums.pair += to_new;
      sums.sx += nx;
      sums.sy += ny;
      sums.s2 += r2;
      tally_.r2e[static_cast<std::size_t>(n)] += static_cast<std::uint64_t>(r2);
      tally_.r2g[static_cast<std::size_t>(n)] += static_cast<std::uint64_t>(sums.pair);
      // |w_n - w_n|^2 = 0, so to_new covers every j for the far end.
      tally_.r2m2[static_cast<std::size_t>(n)] += static_cast<std::uint64_t>(sums.s2 + to_new);
    }
    if (n < n_max_) {
      for (int d = 0; d < 4; ++d) {
        if (d == (dir + 2) % 4) continue;
        step(n, nx, ny, d, box, sums);
      }
    }
    occupied_[static_cast<std::size_t>(idx)] = 0;
  }

  int n_max_;
  int side_;
  bool metrics_;
  bool boxes_;
  std::vector<std::uint8_t> occupied_;
  Tally& tally_;
};

Tally run_all(std::size_t n_max, bool metrics, bool boxes, std::size_t threads) {
  std::array<Tally, 4> parts;
  auto work = [&](int dir) {
    Walker w(n_max, metrics, boxes, parts[static_cast<std::size_t>(dir)]);
    w.run(dir);
  };
  if (threads <= 1) {
    for (int d = 0; d < 4; ++d) work(d);
  } else {
    std::vector<std::thread> pool;
    for (int d = 0; d < 4; ++d) pool.emplace_back(work, d);
    for (auto& t : pool) t.join();
  }
  Tally total;
  total.count.assign(n_max + 1, 0);
  total.r2e.assign(n_max + 1, 0);
  total.r2g.assign(n_max + 1, 0);
  total.r2m2.assign(n_max + 1, 0);
  for (const Tally& p : parts) {
    for (std::size_t n = 1; n <= n_max; ++n) {
      total.count[n] += p.count[n];
      total.r2e[n] += p.r2e[n];
      total.r2g[n] += p.r2g[n];
      total.r2m2[n] += p.r2m2[n];
    }
    for (const auto& [key, v] : p.boxes) {
      auto& dst = total.boxes[key];
      if (dst.empty()) dst.assign(n_max + 1, 0);
      for (std::size_t n = 0; n <= n_max; ++n) dst[n] += v[n];
    }
  }
  total.count[0] = 1;
  total.boxes[{0, 0}].resize(n_max + 1, 0);
  total.boxes[{0, 0}][0] = 1;
  return total;
}

SeriesTable make_table(const std::string& quantity, std::size_t n_max,
                       const std::vector<BigInt>& values) {
  SeriesTable t;
  t.header["lattice"] = "square";
  t.header["quantity"] = quantity;
  t.header["nmax"] = std::to_string(n_max);
  t.header["algorithm"] = "oracle-dfs";
  t.header["version"] = kAlgorithmVersion;
  t.values = values;
  return t;
}

std::vector<BigInt> to_big(const std::vector<std::uint64_t>& v) {
  return std::vector<BigInt>(v.begin(), v.end());
}

}  // namespace

SeriesTable count_walks(std::size_t n_max, std::size_t threads) {
  const Tally t = run_all(n_max, false, false, threads);
  return make_table("count", n_max, to_big(t.count));
}

BoxHistogram box_histogram(std::size_t n_max, std::size_t threads) {
  const Tally t = run_all(n_max, false, true, threads);
  BoxHistogram out;
  for (const auto& [key, v] : t.boxes) out[key] = to_big(v);
  return out;
}

std::vector<BigInt> box_spanning_counts(std::size_t width, std::size_t length, std::size_t n_max) {
  const BoxHistogram h = box_histogram(n_max);
  auto it = h.find({width, length});
  if (it == h.end()) return std::vector<BigInt>(n_max + 1, 0);
  return it->second;
}

MetricSeries metric_sums(std::size_t n_max, std::size_t threads) {
  const Tally t = run_all(n_max, true, false, threads);
  std::vector<BigInt> r2m;
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (t.r2m2[n] % 2 != 0) {
      throw std::logic_error("non-integer monomer distance sum at n = " + std::to_string(n));
    }
    r2m.emplace_back(t.r2m2[n] / 2);
  }
  MetricSeries out;
  out.count = make_table("count", n_max, to_big(t.count));
  out.r2e = make_table("r2e", n_max, to_big(t.r2e));
  out.r2g = make_table("r2g", n_max, to_big(t.r2g));
  out.r2m = make_table("r2m", n_max, r2m);
  return out;
}

}  // namespace sawtm
