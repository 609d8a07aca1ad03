#pragma once

// Cut-line signatures: the per-edge future-connectivity labels carried by
// the transfer matrix, together with the two border-touch flags.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sawtm {

enum class EdgeState : std::uint8_t { Empty = 0, Lower = 1, Upper = 2, Free = 3 };

char to_char(EdgeState s);
EdgeState edge_state_from_char(char c);

class SignatureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Edges are listed bottom to top. A rectangle W cells high has W+1 horizontal
// cut edges; while a column is under construction the sequence also holds the
// vertical kink edge at its position in the bottom-to-top order.
struct Signature {
  std::vector<EdgeState> edges;
  bool bottom_touched = false;
  bool top_touched = false;

  static Signature parse(std::string_view digits, bool bottom = false, bool top = false);
  std::string str() const;

  friend bool operator==(const Signature&, const Signature&) = default;
};

// Packed form: entry i occupies bits [2i, 2i+2); the bottom and top flags
// follow the last entry.
struct SignatureKey {
  std::uint64_t bits = 0;
  friend auto operator<=>(const SignatureKey&, const SignatureKey&) = default;
};

inline constexpr std::size_t kMaxSignatureSlots = 31;

SignatureKey encode(const Signature& sig);
// `width` is the cell count; the decoded signature has width+1 edges.
Signature decode(SignatureKey key, std::size_t width);
Signature decode_slots(SignatureKey key, std::size_t slots);

struct Arc {
  std::size_t lower;
  std::size_t upper;
  std::size_t nesting;  // arcs strictly enclosing this one
  friend bool operator==(const Arc&, const Arc&) = default;
};
using ArcList = std::vector<Arc>;

ArcList match_arcs(const Signature& sig);

// Something a new edge inserted at a gap can connect to without crossing.
struct AccessTarget {
  enum class Kind : std::uint8_t { Arc, Free };
  Kind kind;
  std::size_t lower;  // for Free, lower == upper == position
  std::size_t upper;
  friend bool operator==(const AccessTarget&, const AccessTarget&) = default;
};

// Gap g sits between entries g-1 and g. Reports the innermost arc enclosing
// the gap, plus every arc and free edge on the same nesting level as the gap.
// Order: below the gap (nearest first), above the gap (nearest first), then
// the enclosing arc.
template <class Fn>
void for_each_accessible(std::span<const EdgeState> seq, std::size_t gap, Fn&& fn) {
  std::size_t depth = 0;
  std::size_t pending = 0;
  std::optional<std::size_t> enclosing_lower;
  for (std::size_t i = gap; i-- > 0;) {
    const EdgeState s = seq[i];
    if (s == EdgeState::Upper) {
      if (depth == 0) pending = i;
      ++depth;
    } else if (s == EdgeState::Lower) {
      if (depth == 0) {
        enclosing_lower = i;
        break;
      }
      if (--depth == 0) fn(AccessTarget{AccessTarget::Kind::Arc, i, pending});
    } else if (s == EdgeState::Free && depth == 0) {
      fn(AccessTarget{AccessTarget::Kind::Free, i, i});
    }
  }
  depth = 0;
  for (std::size_t i = gap; i < seq.size(); ++i) {
    const EdgeState s = seq[i];
    if (s == EdgeState::Lower) {
      if (depth == 0) pending = i;
      ++depth;
    } else if (s == EdgeState::Upper) {
      if (depth == 0) {
        if (enclosing_lower) fn(AccessTarget{AccessTarget::Kind::Arc, *enclosing_lower, i});
        break;
      }
      if (--depth == 0) fn(AccessTarget{AccessTarget::Kind::Arc, pending, i});
    } else if (s == EdgeState::Free && depth == 0) {
      fn(AccessTarget{AccessTarget::Kind::Free, i, i});
    }
  }
}

std::vector<AccessTarget> accessible_targets(const Signature& sig, std::size_t gap);

// Returns the first violated invariant, or nullopt when the signature is valid.
std::optional<std::string> validate(std::span<const EdgeState> edges);
std::optional<std::string> validate(const Signature& sig);

}  // namespace sawtm
