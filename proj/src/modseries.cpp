#include "sawtm/modseries.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <boost/multiprecision/miller_rabin.hpp>

namespace sawtm {

namespace {

Modulus::Kind classify(std::uint64_t v) {
  if ((v & (v - 1)) == 0) return Modulus::Kind::PowerOfTwo;
  if (boost::multiprecision::miller_rabin_test(v, 25)) return Modulus::Kind::Prime;
  return Modulus::Kind::General;
}

}  // namespace

Modulus::Modulus(std::uint64_t value) : value_(value), kind_(Kind::General) {
  if (value < 2) throw ConfigError("modulus must be at least 2");
  if (value > (std::uint64_t{1} << 63)) throw ConfigError("modulus must not exceed 2^63");
  kind_ = classify(value);
}

std::uint64_t Modulus::reduce(const BigInt& v) const {
  BigInt r = v % BigInt(value_);
  if (r < 0) r += value_;
  return r.convert_to<std::uint64_t>();
}

std::vector<Modulus> default_moduli() { return {Modulus(kTwoPow62), Modulus(kTwoPow62 - 1)}; }

void require_coprime(std::span<const Modulus> moduli) {
  if (moduli.empty()) throw ConfigError("at least one modulus is required");
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    for (std::size_t j = i + 1; j < moduli.size(); ++j) {
      if (std::gcd(moduli[i].value(), moduli[j].value()) != 1) {
        throw ConfigError("moduli " + std::to_string(moduli[i].value()) + " and " +
                          std::to_string(moduli[j].value()) + " are not coprime");
      }
    }
  }
}

void require_product_safe(std::span<const Modulus> moduli) {
  for (const Modulus& m : moduli) {
    if (m.value() >= (std::uint64_t{1} << 30)) {
      throw ConfigError("modulus " + std::to_string(m.value()) +
                        " is too large for product arithmetic (must be < 2^30)");
    }
  }
}

std::vector<Modulus> parse_moduli(const std::string& csv) {
  std::vector<Modulus> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      throw ConfigError("malformed modulus '" + item + "'");
    }
    if (used != item.size()) throw ConfigError("malformed modulus '" + item + "'");
    out.emplace_back(v);
  }
  require_coprime(out);
  return out;
}

TruncatedPolynomial::TruncatedPolynomial(std::size_t max_degree, std::size_t num_moduli)
    : max_degree_(max_degree),
      num_moduli_(num_moduli),
      min_degree_(max_degree + 1),
      coeffs_((max_degree + 1) * num_moduli, 0) {}

TruncatedPolynomial TruncatedPolynomial::monomial(std::size_t degree, std::size_t max_degree,
                                                  std::size_t num_moduli) {
  TruncatedPolynomial p(max_degree, num_moduli);
  if (degree <= max_degree) {
    for (std::size_t m = 0; m < num_moduli; ++m) p.set(degree, m, 1);
  }
  return p;
}

void TruncatedPolynomial::set(std::size_t degree, std::size_t modulus_index, std::uint64_t value) {
  coeffs_[degree * num_moduli_ + modulus_index] = value;
  if (value != 0) {
    min_degree_ = std::min(min_degree_, degree);
  } else if (degree == min_degree_) {
    refresh_min_degree();
  }
}

void TruncatedPolynomial::refresh_min_degree() {
  min_degree_ = max_degree_ + 1;
  for (std::size_t d = 0; d <= max_degree_; ++d) {
    for (std::size_t m = 0; m < num_moduli_; ++m) {
      if (coeffs_[d * num_moduli_ + m] != 0) {
        min_degree_ = d;
        return;
      }
    }
  }
}

std::optional<std::size_t> TruncatedPolynomial::min_degree() const {
  if (min_degree_ > max_degree_) return std::nullopt;
  return min_degree_;
}

void add_shifted(TruncatedPolynomial& target, const TruncatedPolynomial& source, std::size_t shift,
                 std::span<const Modulus> moduli) {
  const std::size_t k = target.num_moduli();
  if (source.num_moduli() != k || moduli.size() != k) {
    throw ConfigError("add_shifted: modulus count mismatch");
  }
  const auto lo = source.min_degree();
  if (!lo) return;
  auto dst = target.raw();
  auto src = source.raw();
  for (std::size_t d = *lo; d <= source.max_degree() && d + shift <= target.max_degree(); ++d) {
    for (std::size_t m = 0; m < k; ++m) {
      std::uint64_t& slot = dst[(d + shift) * k + m];
      slot = moduli[m].add(slot, src[d * k + m]);
    }
  }
  target.refresh_min_degree();
}

BigInt product(std::span<const Modulus> moduli) {
  BigInt p = 1;
  for (const Modulus& m : moduli) p *= m.value();
  return p;
}

BigInt crt_reconstruct(std::span<const std::uint64_t> residues, std::span<const Modulus> moduli) {
  if (residues.size() != moduli.size()) throw ConfigError("residue/modulus count mismatch");
  require_coprime(moduli);
  // Garner-free form: x = sum r_i * M_i * (M_i^{-1} mod m_i) mod M.
  const BigInt total = product(moduli);
  BigInt x = 0;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    const BigInt mi = moduli[i].value();
    const BigInt rest = total / mi;
    BigInt inv;
    // rest is invertible mod mi since the moduli are pairwise coprime
    mpz_invert(inv.backend().data(), BigInt(rest % mi).backend().data(), mi.backend().data());
    x += BigInt(residues[i] % moduli[i].value()) * rest * inv;
  }
  x %= total;
  return x;
}

}  // namespace sawtm
