#include "sawtm/tm_engine.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <thread>

#include "sawtm/pruning.hpp"

namespace sawtm {

namespace {

using Seq = std::array<EdgeState, kMaxSignatureSlots + 1>;

constexpr std::uint8_t kBottom = 1;
constexpr std::uint8_t kTop = 2;

std::uint64_t pack(const Seq& s, int slots, std::uint8_t flags) {
  std::uint64_t k = 0;
  for (int i = slots - 1; i >= 0; --i) k = (k << 2) | static_cast<std::uint64_t>(s[i]);
  return k | (static_cast<std::uint64_t>(flags) << (2 * slots));
}

void unpack(std::uint64_t key, int slots, Seq& s, std::uint8_t& flags) {
  for (int i = 0; i < slots; ++i) {
    s[i] = static_cast<EdgeState>(key & 3);
    key >>= 2;
  }
  flags = static_cast<std::uint8_t>(key & 3);
}

std::string seq_string(const Seq& s, int slots) {
  std::string out;
  for (int i = 0; i < slots; ++i) out += to_char(s[i]);
  return out;
}

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// States with their polynomials. Coefficients for degrees lo..hi are stored
// contiguously in `pool`, one residue per modulus.
struct Store {
  std::vector<std::uint64_t> keys;
  std::vector<std::uint64_t> offset;
  std::vector<std::uint8_t> lo;
  std::vector<std::uint8_t> hi;
  std::vector<std::uint64_t> pool;

  std::size_t size() const { return keys.size(); }
  void clear() {
    keys.clear();
    offset.clear();
    lo.clear();
    hi.clear();
    pool.clear();
  }
  void append(std::uint64_t key, std::uint8_t l, std::uint8_t h, const std::uint64_t* coeffs,
              std::size_t k) {
    keys.push_back(key);
    offset.push_back(pool.size());
    lo.push_back(l);
    hi.push_back(h);
    pool.insert(pool.end(), coeffs, coeffs + (h - l + 1) * k);
  }
};

struct StepContext {
  int width = 0;
  int column = 0;
  int row = 0;
  int n_max = 0;
  bool prune = true;
  bool last_column = false;
  std::span<const Modulus> moduli;
};

// Applies the update rules for the vertex at ctx.row to one source state.
// emit(target, flags, shift) receives every surviving target signature;
// complete(shift) fires for finished walks that touched both borders.
template <class Emit, class Complete>
void apply_rules(const Seq& s, std::uint8_t flags, const StepContext& ctx, bool unstarted,
                 Emit&& emit, Complete&& complete) {
  const int r = ctx.row;
  const int slots = ctx.width + 2;
  const EdgeState a = s[r];
  const EdgeState b = s[r + 1];
  std::uint8_t tf = flags;
  if (r == 0) tf |= kBottom;
  if (r == ctx.width) tf |= kTop;
  const bool right_ok = !ctx.last_column;

  // Moves a new vertical edge at slot r onto slot r-1 when the edge below is
  // empty; the only occupied pair left in place is a partner pair '12'.
  auto push_down = [r](Seq& t) {
    const EdgeState v = t[r];
    if (v == EdgeState::Empty) return true;
    if (t[r - 1] == EdgeState::Empty) {
      t[r - 1] = v;
      t[r] = EdgeState::Empty;
      return true;
    }
    return t[r - 1] == EdgeState::Lower && v == EdgeState::Upper;
  };
  auto finish = [&](const Seq& t, std::size_t shift) {
    for (int i = 0; i < slots; ++i) {
      if (t[i] != EdgeState::Empty) {
        emit(t, tf, shift);
        return;
      }
    }
    if (tf == (kBottom | kTop)) complete(shift);
  };

  if (b == EdgeState::Empty && a != EdgeState::Empty) {
    Seq t = s;
    if (right_ok) {
      t[r] = EdgeState::Empty;
      t[r + 1] = a;
      emit(t, tf, 1);
    }
    if (r > 0) {
      t = s;
      if (push_down(t)) emit(t, tf, 1);
    }
    if (a == EdgeState::Free) {
      t = s;
      t[r] = EdgeState::Empty;
      finish(t, 0);
    }
    return;
  }
  if (a == EdgeState::Lower && b == EdgeState::Upper) {
    Seq t = s;
    t[r] = EdgeState::Empty;
    t[r + 1] = EdgeState::Empty;
    finish(t, 0);
    return;
  }
  if (a != EdgeState::Empty || b != EdgeState::Empty) {
    throw KinkStateFault("forbidden kink state '" + std::string{to_char(a), to_char(b)} + "' in " +
                         seq_string(s, slots) + " at column " + std::to_string(ctx.column) +
                         ", row " + std::to_string(r));
  }

  // Kink '00': the vertex may stay empty.
  emit(s, flags, 0);

  if (unstarted) {
    // First vertex of the walk; only reachable in column 0.
    Seq t = s;
    if (right_ok) {
      t[r + 1] = EdgeState::Free;
      emit(t, tf, 1);
    }
    if (r > 0) {
      t = s;
      t[r - 1] = EdgeState::Free;
      emit(t, tf, 1);
      if (right_ok) {
        t[r + 1] = EdgeState::Free;
        emit(t, tf, 2);
      }
    }
    return;
  }

  for_each_accessible(std::span<const EdgeState>(s.data(), static_cast<std::size_t>(slots)),
                      static_cast<std::size_t>(r), [&](const AccessTarget& target) {
    if (target.kind == AccessTarget::Kind::Free) {
      const int f = static_cast<int>(target.lower);
      const bool below = f < r;
      // New end point at the vertex, joined to the free strand.
      if (right_ok) {
        Seq t = s;
        t[f] = below ? EdgeState::Lower : EdgeState::Upper;
        t[r + 1] = below ? EdgeState::Upper : EdgeState::Lower;
        emit(t, tf, 1);
      }
      if (r == 0) return;
      {
        Seq t = s;
        t[f] = below ? EdgeState::Lower : EdgeState::Upper;
        t[r] = below ? EdgeState::Upper : EdgeState::Lower;
        if (push_down(t)) emit(t, tf, 1);
      }
      if (!right_ok) return;
      // Vertex in the middle: one new edge pairs with the free strand, the
      // other becomes free.
      for (int which = 0; which < 2; ++which) {
        Seq t = s;
        t[f] = below ? EdgeState::Lower : EdgeState::Upper;
        const EdgeState paired = below ? EdgeState::Upper : EdgeState::Lower;
        t[r] = which == 0 ? paired : EdgeState::Free;
        t[r + 1] = which == 0 ? EdgeState::Free : paired;
        if (push_down(t)) emit(t, tf, 2);
      }
      return;
    }
    if (r == 0 || !right_ok) return;
    const int p = static_cast<int>(target.lower);
    const int q = static_cast<int>(target.upper);
    Seq t = s;
    if (q < r) {
      t[q] = EdgeState::Lower;
      t[r] = EdgeState::Upper;
      t[r + 1] = EdgeState::Upper;
    } else if (p > r + 1) {
      t[r] = EdgeState::Lower;
      t[r + 1] = EdgeState::Lower;
      t[p] = EdgeState::Upper;
    } else {
      t[r] = EdgeState::Upper;
      t[r + 1] = EdgeState::Lower;
    }
    if (push_down(t)) emit(t, tf, 2);
  });
}

struct StepCounters {
  std::size_t pruned = 0;
  std::size_t transitions = 0;
};

// One vertex step over a store. The rules run once per source; surviving
// transitions are recorded and replayed to accumulate coefficients after
// every target's degree range is known.
class Stepper {
 public:
  void step(const Store& in, Store& out, const StepContext& ctx, std::uint64_t* ledger,
            StepCounters& counters, SweepObserver* observer) {
    const std::size_t k = ctx.moduli.size();
    const int slots = ctx.width + 2;
    out.clear();
    caps_.clear();
    moves_.clear();
    completions_.clear();
    reset_table(in.size() * 2 + 16);
    const CutFrontier frontier{ctx.width, ctx.column, ctx.row - 1};
    const SweepGeometry geom{static_cast<std::size_t>(ctx.width), 0,
                             static_cast<std::size_t>(ctx.column),
                             static_cast<std::size_t>(ctx.row)};

    Seq s;
    std::uint8_t flags = 0;
    for (std::size_t i = 0; i < in.size(); ++i) {
      const int lo = in.lo[i];
      if (lo == kDead) continue;
      const int hi = in.hi[i];
      unpack(in.keys[i], slots, s, flags);
      apply_rules(
          s, flags, ctx, in.keys[i] == 0,
          [&](const Seq& t, std::uint8_t tf, std::size_t shift) {
            const std::uint64_t key = pack(t, slots, tf);
            std::uint32_t rec = find(out, key);
            if (rec == kNone) {
              int cap = ctx.n_max;
              if (ctx.prune) {
                std::size_t visits = 0;
                const std::size_t add = min_additional_steps(
                    std::span<const EdgeState>(t.data(), static_cast<std::size_t>(slots)),
                    (tf & kBottom) != 0, (tf & kTop) != 0, frontier, observer ? &visits : nullptr);
                if (observer) observer->on_bound(static_cast<std::size_t>(ctx.width), visits);
                cap = static_cast<int>(add) > ctx.n_max ? -1 : ctx.n_max - static_cast<int>(add);
              }
              rec = insert(out, key);
              out.lo.push_back(kDead);
              out.hi.push_back(0);
              caps_.push_back(cap);
            }
            const int sh = static_cast<int>(shift);
            const int top = std::min(hi, caps_[rec] - sh);
            if (lo > top) {
              ++counters.pruned;
              return;
            }
            out.lo[rec] = static_cast<std::uint8_t>(std::min<int>(out.lo[rec], lo + sh));
            out.hi[rec] = static_cast<std::uint8_t>(std::max<int>(out.hi[rec], top + sh));
            moves_.push_back(Move{static_cast<std::uint32_t>(i), rec, static_cast<std::uint8_t>(sh),
                                  static_cast<std::uint8_t>(top)});
            if (observer) {
              Seq from;
              std::uint8_t ff = 0;
              unpack(in.keys[i], slots, from, ff);
              observer->on_transition(geom, std::span<const EdgeState>(from.data(), slots),
                                      std::span<const EdgeState>(t.data(), slots), shift);
            }
          },
          [&](std::size_t shift) {
            const int sh = static_cast<int>(shift);
            const int top = std::min(hi, ctx.n_max - sh);
            if (lo <= top) {
              completions_.push_back(Move{static_cast<std::uint32_t>(i), 0, static_cast<std::uint8_t>(sh),
                                          static_cast<std::uint8_t>(top)});
            }
          });
    }
    counters.transitions += moves_.size();

    std::size_t total = 0;
    out.offset.resize(out.keys.size());
    for (std::size_t j = 0; j < out.keys.size(); ++j) {
      out.offset[j] = total;
      if (out.lo[j] != kDead) total += static_cast<std::size_t>(out.hi[j] - out.lo[j] + 1) * k;
    }
    out.pool.assign(total, 0);

    for (const Move& mv : moves_) {
      const int lo = in.lo[mv.source];
      const std::uint64_t* src = in.pool.data() + in.offset[mv.source];
      std::uint64_t* dst = out.pool.data() + out.offset[mv.target] +
                           static_cast<std::size_t>(lo + mv.shift - out.lo[mv.target]) * k;
      const std::size_t count = static_cast<std::size_t>(mv.top - lo + 1) * k;
      for (std::size_t j = 0; j < count; j += k) {
        for (std::size_t m = 0; m < k; ++m) dst[j + m] = ctx.moduli[m].add(dst[j + m], src[j + m]);
      }
    }
    for (const Move& mv : completions_) {
      const int lo = in.lo[mv.source];
      const std::uint64_t* src = in.pool.data() + in.offset[mv.source];
      std::uint64_t* dst = ledger + static_cast<std::size_t>(lo + mv.shift) * k;
      const std::size_t count = static_cast<std::size_t>(mv.top - lo + 1) * k;
      for (std::size_t j = 0; j < count; j += k) {
        for (std::size_t m = 0; m < k; ++m) dst[j + m] = ctx.moduli[m].add(dst[j + m], src[j + m]);
      }
    }

    // Targets that only ever received pruned transitions are dropped here;
    // their pool space is empty so only the index arrays move.
    std::size_t kept = 0;
    for (std::size_t j = 0; j < out.keys.size(); ++j) {
      if (out.lo[j] == kDead) continue;
      out.keys[kept] = out.keys[j];
      out.lo[kept] = out.lo[j];
      out.hi[kept] = out.hi[j];
      out.offset[kept] = out.offset[j];
      ++kept;
    }
    out.keys.resize(kept);
    out.lo.resize(kept);
    out.hi.resize(kept);
    out.offset.resize(kept);

    if (observer) {
      for (std::size_t j = 0; j < out.size(); ++j) {
        unpack(out.keys[j], slots, s, flags);
        observer->on_state(geom, std::span<const EdgeState>(s.data(), slots), (flags & kBottom) != 0,
                           (flags & kTop) != 0, out.lo[j]);
      }
    }
  }

 private:
  static constexpr std::uint32_t kNone = ~std::uint32_t{0};
  static constexpr std::uint8_t kDead = 255;

  struct Move {
    std::uint32_t source;
    std::uint32_t target;
    std::uint8_t shift;
    std::uint8_t top;  // highest source degree carried over
  };

  void reset_table(std::size_t want) {
    std::size_t cap = 64;
    while (cap < want) cap <<= 1;
    table_.assign(cap, kNone);
  }
  std::uint32_t find(const Store& out, std::uint64_t key) const {
    const std::size_t mask = table_.size() - 1;
    for (std::size_t slot = mix(key) & mask;; slot = (slot + 1) & mask) {
      const std::uint32_t rec = table_[slot];
      if (rec == kNone || out.keys[rec] == key) return rec;
    }
  }
  std::uint32_t insert(Store& out, std::uint64_t key) {
    if (2 * (out.keys.size() + 1) > table_.size()) grow(out);
    const std::size_t mask = table_.size() - 1;
    std::size_t slot = mix(key) & mask;
    while (table_[slot] != kNone) slot = (slot + 1) & mask;
    const auto rec = static_cast<std::uint32_t>(out.keys.size());
    table_[slot] = rec;
    out.keys.push_back(key);
    return rec;
  }
  void grow(const Store& out) {
    table_.assign(table_.size() * 2, kNone);
    const std::size_t mask = table_.size() - 1;
    for (std::size_t rec = 0; rec < out.keys.size(); ++rec) {
      std::size_t slot = mix(out.keys[rec]) & mask;
      while (table_[slot] != kNone) slot = (slot + 1) & mask;
      table_[slot] = static_cast<std::uint32_t>(rec);
    }
  }

  std::vector<std::uint32_t> table_;
  std::vector<int> caps_;
  std::vector<Move> moves_;
  std::vector<Move> completions_;
};

void shift_column(Store& store, int width, bool drop_unstarted) {
  const int slots = width + 2;
  const std::uint64_t edge_mask = slots * 2 >= 64 ? ~0ULL : (std::uint64_t{1} << (2 * slots)) - 1;
  std::size_t kept = 0;
  std::vector<std::uint64_t> pool;
  pool.reserve(store.pool.size());
  for (std::size_t i = 0; i < store.size(); ++i) {
    const std::uint64_t key = store.keys[i];
    if (drop_unstarted && key == 0) continue;
    if ((key & 3) != 0) throw KinkStateFault("occupied edge below the bottom row");
    const std::uint64_t edges = (key & edge_mask) >> 2;
    const std::uint64_t flags = key >> (2 * slots);
    const std::size_t len = store.size() == i + 1 ? store.pool.size() - store.offset[i]
                                                  : store.offset[i + 1] - store.offset[i];
    const std::size_t off = pool.size();
    pool.insert(pool.end(), store.pool.begin() + static_cast<std::ptrdiff_t>(store.offset[i]),
                store.pool.begin() + static_cast<std::ptrdiff_t>(store.offset[i] + len));
    store.keys[kept] = edges | (flags << (2 * slots));
    store.offset[kept] = off;
    store.lo[kept] = store.lo[i];
    store.hi[kept] = store.hi[i];
    ++kept;
  }
  store.keys.resize(kept);
  store.offset.resize(kept);
  store.lo.resize(kept);
  store.hi.resize(kept);
  store.pool = std::move(pool);
}

Store to_store(const StateMap& states, std::size_t k) {
  Store out;
  for (const auto& [key, poly] : states) {
    const auto lo = poly.min_degree();
    if (!lo) continue;
    std::size_t hi = poly.max_degree();
    while (hi > *lo) {
      bool zero = true;
      for (std::size_t m = 0; m < k; ++m) zero = zero && poly.coeff(hi, m) == 0;
      if (!zero) break;
      --hi;
    }
    out.append(key.bits, static_cast<std::uint8_t>(*lo), static_cast<std::uint8_t>(hi),
               poly.raw().data() + *lo * k, k);
  }
  return out;
}

StateMap to_map(const Store& store, std::size_t n_max, std::size_t k) {
  StateMap out;
  for (std::size_t i = 0; i < store.size(); ++i) {
    TruncatedPolynomial poly(n_max, k);
    const std::uint64_t* c = store.pool.data() + store.offset[i];
    for (std::size_t d = store.lo[i]; d <= store.hi[i]; ++d) {
      for (std::size_t m = 0; m < k; ++m) poly.raw()[d * k + m] = *c++;
    }
    poly.refresh_min_degree();
    if (!poly.is_zero()) out.emplace(SignatureKey{store.keys[i]}, std::move(poly));
  }
  return out;
}

void check_width(std::size_t width, std::size_t n_max) {
  if (width > kMaxWidth) {
    throw ConfigError("width " + std::to_string(width) + " exceeds the key layout limit of " +
                      std::to_string(kMaxWidth));
  }
  if (n_max > 254) throw ConfigError("n_max above 254 is not supported");
}

// Occupancy pattern of slots [from, to], used to pick a shard.
std::uint64_t occupancy(std::uint64_t key, int from, int to) {
  std::uint64_t occ = 0;
  for (int i = from; i <= to; ++i) occ = (occ << 1) | (((key >> (2 * i)) & 3) != 0 ? 1 : 0);
  return occ;
}

class Engine {
 public:
  explicit Engine(const SweepOptions& o) : o_(o) {
    check_width(o.width, o.n_max);
    require_coprime(o.moduli);
    if (o.workers == 0) throw ConfigError("worker count must be at least 1");
    if (o.observer && o.workers != 1) throw ConfigError("an observer requires a single worker");
    k_ = o.moduli.size();
    shards_.resize(o.workers);
    scratch_.resize(o.workers);
    steppers_.resize(o.workers);
    counters_.resize(o.workers);
    ledgers_.assign(o.workers, std::vector<std::uint64_t>((o.max_columns + 1) * (o.n_max + 1) * k_, 0));
    std::vector<std::uint64_t> one(k_, 1);
    shards_[0].append(0, 0, 0, one.data(), k_);
  }

  CompletionLedger run(SweepStats* stats) {
    const int w = static_cast<int>(o_.width);
    const int h = (w + 1) / 2;
    for (std::size_t c = 0; c <= o_.max_columns; ++c) {
      if (w >= 1) {
        redistribute(0, h - 2);
        run_rows(c, w, h);
        redistribute(h + 1, w + 1);
        run_rows(c, h - 1, 0);
      } else {
        run_rows(c, 0, 0);
      }
      for (Store& s : shards_) shift_column(s, w, c == 0);
    }

    CompletionLedger out;
    const std::size_t stride = (o_.n_max + 1) * k_;
    for (std::size_t c = 0; c <= o_.max_columns; ++c) {
      TruncatedPolynomial poly(o_.n_max, k_);
      for (const auto& ledger : ledgers_) {
        for (std::size_t j = 0; j < stride; ++j) {
          poly.raw()[j] = o_.moduli[j % k_].add(poly.raw()[j], ledger[c * stride + j]);
        }
      }
      poly.refresh_min_degree();
      out.per_column.push_back(std::move(poly));
    }
    if (stats) {
      stats->max_states = max_states_;
      stats->max_terms = max_terms_;
      for (const auto& cnt : counters_) {
        stats->pruned += cnt.pruned;
        stats->transitions += cnt.transitions;
      }
    }
    return out;
  }

 private:
  void run_rows(std::size_t column, int from_row, int to_row) {
    auto work = [&, column, from_row, to_row](std::size_t wid) {
      for (int r = from_row; r >= to_row; --r) {
        StepContext ctx;
        ctx.width = static_cast<int>(o_.width);
        ctx.column = static_cast<int>(column);
        ctx.row = r;
        ctx.n_max = static_cast<int>(o_.n_max);
        ctx.prune = o_.prune;
        ctx.last_column = column == o_.max_columns;
        ctx.moduli = o_.moduli;
        std::uint64_t* ledger = ledgers_[wid].data() + column * (o_.n_max + 1) * k_;
        steppers_[wid].step(shards_[wid], scratch_[wid], ctx, ledger, counters_[wid], o_.observer);
        std::swap(shards_[wid], scratch_[wid]);
      }
    };
    if (o_.workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (std::size_t wid = 0; wid < o_.workers; ++wid) threads.emplace_back(work, wid);
      for (auto& t : threads) t.join();
    }
    std::size_t states = 0;
    std::size_t terms = 0;
    for (const Store& s : shards_) {
      states += s.size();
      terms += s.pool.size() / std::max<std::size_t>(k_, 1);
    }
    max_states_ = std::max(max_states_, states);
    max_terms_ = std::max(max_terms_, terms);
  }

  // Regroups states so each shard owns every state sharing an occupancy
  // pattern on slots [from, to]; those slots do not change in the next phase.
  void redistribute(int from, int to) {
    if (o_.workers == 1) return;
    std::vector<Store> next(o_.workers);
    for (const Store& s : shards_) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        const std::size_t dest =
            from > to ? 0 : mix(occupancy(s.keys[i], from, to)) % o_.workers;
        next[dest].append(s.keys[i], s.lo[i], s.hi[i], s.pool.data() + s.offset[i], k_);
      }
    }
    shards_ = std::move(next);
  }

  const SweepOptions& o_;
  std::size_t k_ = 0;
  std::vector<Store> shards_;
  std::vector<Store> scratch_;
  std::vector<Stepper> steppers_;
  std::vector<StepCounters> counters_;
  std::vector<std::vector<std::uint64_t>> ledgers_;
  std::size_t max_states_ = 0;
  std::size_t max_terms_ = 0;
};

}  // namespace

SignatureKey pack_state(std::span<const EdgeState> seq, bool bottom, bool top) {
  Signature sig;
  sig.edges.assign(seq.begin(), seq.end());
  sig.bottom_touched = bottom;
  sig.top_touched = top;
  return encode(sig);
}

Signature unpack_state(SignatureKey key, std::size_t width) { return decode_slots(key, width + 2); }

StateMap seed(std::size_t width, std::size_t n_max, std::size_t num_moduli) {
  check_width(width, n_max);
  StateMap out;
  out.emplace(SignatureKey{0}, TruncatedPolynomial::monomial(0, n_max, num_moduli));
  return out;
}

StateMap kink_update(const StateMap& states, const SweepGeometry& geom, std::size_t n_max,
                     std::span<const Modulus> moduli, CompletionLedger& ledger, bool prune) {
  check_width(geom.width, n_max);
  if (geom.row > geom.width) throw ConfigError("row outside the rectangle");
  const std::size_t k = moduli.size();
  const Store in = to_store(states, k);
  Store out;
  StepContext ctx;
  ctx.width = static_cast<int>(geom.width);
  ctx.column = static_cast<int>(geom.column);
  ctx.row = static_cast<int>(geom.row);
  ctx.n_max = static_cast<int>(n_max);
  ctx.prune = prune;
  ctx.last_column = geom.max_columns != 0 && geom.column >= geom.max_columns;
  ctx.moduli = moduli;
  if (ledger.per_column.size() <= geom.column) {
    ledger.per_column.resize(geom.column + 1, TruncatedPolynomial(n_max, k));
  }
  std::vector<std::uint64_t> acc((n_max + 1) * k, 0);
  StepCounters counters;
  Stepper stepper;
  stepper.step(in, out, ctx, acc.data(), counters, nullptr);
  TruncatedPolynomial& target = ledger.per_column[geom.column];
  for (std::size_t j = 0; j < acc.size(); ++j) {
    target.raw()[j] = moduli[j % k].add(target.raw()[j], acc[j]);
  }
  target.refresh_min_degree();
  return to_map(out, n_max, k);
}

StateMap finish_column(const StateMap& states, const SweepGeometry& geom) {
  if (states.empty()) return {};
  const std::size_t k = states.begin()->second.num_moduli();
  const std::size_t n_max = states.begin()->second.max_degree();
  Store store = to_store(states, k);
  shift_column(store, static_cast<int>(geom.width), geom.column == 0);
  return to_map(store, n_max, k);
}

CompletionLedger sweep(const SweepOptions& options, SweepStats* stats) {
  Engine engine(options);
  return engine.run(stats);
}

}  // namespace sawtm
