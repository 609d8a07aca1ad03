#include "sawtm/signature.hpp"

#include <algorithm>

namespace sawtm {

char to_char(EdgeState s) { return static_cast<char>('0' + static_cast<int>(s)); }

EdgeState edge_state_from_char(char c) {
  if (c < '0' || c > '3') throw SignatureError(std::string("invalid edge state '") + c + "'");
  return static_cast<EdgeState>(c - '0');
}

Signature Signature::parse(std::string_view digits, bool bottom, bool top) {
  Signature sig;
  sig.edges.reserve(digits.size());
  for (char c : digits) {
    if (c == ' ') continue;
    sig.edges.push_back(edge_state_from_char(c));
  }
  sig.bottom_touched = bottom;
  sig.top_touched = top;
  return sig;
}

std::string Signature::str() const {
  std::string out;
  out.reserve(edges.size());
  for (EdgeState s : edges) out.push_back(to_char(s));
  return out;
}

SignatureKey encode(const Signature& sig) {
  if (sig.edges.size() > kMaxSignatureSlots) {
    throw SignatureError("signature with " + std::to_string(sig.edges.size()) +
                         " slots exceeds the 64-bit key layout");
  }
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < sig.edges.size(); ++i) {
    const auto code = static_cast<std::uint64_t>(sig.edges[i]);
    if (code > 3) throw SignatureError("undefined edge state code " + std::to_string(code));
    bits |= code << (2 * i);
  }
  const std::size_t flag_shift = 2 * sig.edges.size();
  if (sig.bottom_touched) bits |= std::uint64_t{1} << flag_shift;
  if (sig.top_touched) bits |= std::uint64_t{1} << (flag_shift + 1);
  return SignatureKey{bits};
}

Signature decode_slots(SignatureKey key, std::size_t slots) {
  if (slots > kMaxSignatureSlots) throw SignatureError("too many slots for the key layout");
  const std::size_t used_bits = 2 * slots + 2;
  if (used_bits < 64 && (key.bits >> used_bits) != 0) {
    throw SignatureError("key has bits beyond a " + std::to_string(slots) + "-slot layout");
  }
  Signature sig;
  sig.edges.resize(slots);
  for (std::size_t i = 0; i < slots; ++i) {
    sig.edges[i] = static_cast<EdgeState>((key.bits >> (2 * i)) & 3u);
  }
  sig.bottom_touched = ((key.bits >> (2 * slots)) & 1u) != 0;
  sig.top_touched = ((key.bits >> (2 * slots + 1)) & 1u) != 0;
  return sig;
}

Signature decode(SignatureKey key, std::size_t width) { return decode_slots(key, width + 1); }

ArcList match_arcs(const Signature& sig) {
  ArcList arcs;
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < sig.edges.size(); ++i) {
    if (sig.edges[i] == EdgeState::Lower) {
      open.push_back(i);
    } else if (sig.edges[i] == EdgeState::Upper) {
      if (open.empty()) {
        throw SignatureError("unbalanced signature " + sig.str() + ": upper edge at " +
                             std::to_string(i) + " has no partner");
      }
      arcs.push_back(Arc{open.back(), i, open.size() - 1});
      open.pop_back();
    }
  }
  if (!open.empty()) {
    throw SignatureError("unbalanced signature " + sig.str() + ": lower edge at " +
                         std::to_string(open.back()) + " has no partner");
  }
  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) { return a.lower < b.lower; });
  return arcs;
}

std::vector<AccessTarget> accessible_targets(const Signature& sig, std::size_t gap) {
  if (gap > sig.edges.size()) throw SignatureError("gap index out of range");
  std::vector<AccessTarget> out;
  for_each_accessible(sig.edges, gap, [&](const AccessTarget& t) { out.push_back(t); });
  return out;
}

std::optional<std::string> validate(std::span<const EdgeState> edges) {
  std::size_t open = 0;
  std::size_t free_count = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    switch (edges[i]) {
      case EdgeState::Empty:
        break;
      case EdgeState::Lower:
        ++open;
        break;
      case EdgeState::Upper:
        if (open == 0) return "upper edge at " + std::to_string(i) + " precedes its lower partner";
        --open;
        break;
      case EdgeState::Free:
        if (++free_count > 2) return "more than two free edges (third at " + std::to_string(i) + ")";
        break;
      default:
        return "undefined edge state code at " + std::to_string(i);
    }
  }
  if (open != 0) return std::to_string(open) + " lower edge(s) without an upper partner";
  return std::nullopt;
}

std::optional<std::string> validate(const Signature& sig) { return validate(sig.edges); }

}  // namespace sawtm
