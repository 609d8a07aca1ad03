#pragma once

// Residue arithmetic for the generating-function coefficients: machine-word
// moduli, truncated polynomials over a set of moduli, and CRT reconstruction.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace sawtm {

using BigInt = boost::multiprecision::mpz_int;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Modulus {
 public:
  enum class Kind : std::uint8_t { PowerOfTwo, Prime, General };

  // Values must lie in [2, 2^63] so that a sum of two residues fits a word.
  explicit Modulus(std::uint64_t value);

  std::uint64_t value() const { return value_; }
  Kind kind() const { return kind_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    if (kind_ == Kind::PowerOfTwo) return (a + b) & (value_ - 1);
    const std::uint64_t s = a + b;
    return s >= value_ ? s - value_ : s;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % value_);
  }
  std::uint64_t reduce(const BigInt& v) const;

  friend bool operator==(const Modulus& a, const Modulus& b) { return a.value_ == b.value_; }

 private:
  std::uint64_t value_;
  Kind kind_;
};

inline constexpr std::uint64_t kTwoPow62 = std::uint64_t{1} << 62;

// Moduli used for the walk counts: 2^62 and 2^62 - 1.
std::vector<Modulus> default_moduli();

// Throws ConfigError if any pair shares a factor.
void require_coprime(std::span<const Modulus> moduli);

// Moduli for runs whose coefficients are multiplied must stay below 2^30.
void require_product_safe(std::span<const Modulus> moduli);

std::vector<Modulus> parse_moduli(const std::string& csv);

class TruncatedPolynomial {
 public:
  TruncatedPolynomial() = default;
  TruncatedPolynomial(std::size_t max_degree, std::size_t num_moduli);

  static TruncatedPolynomial monomial(std::size_t degree, std::size_t max_degree,
                                      std::size_t num_moduli);

  std::size_t max_degree() const { return max_degree_; }
  std::size_t num_moduli() const { return num_moduli_; }

  std::uint64_t coeff(std::size_t degree, std::size_t modulus_index) const {
    return coeffs_[degree * num_moduli_ + modulus_index];
  }
  std::span<const std::uint64_t> residues(std::size_t degree) const {
    return {coeffs_.data() + degree * num_moduli_, num_moduli_};
  }
  void set(std::size_t degree, std::size_t modulus_index, std::uint64_t value);

  // Lowest degree with a nonzero residue for any modulus.
  std::optional<std::size_t> min_degree() const;
  bool is_zero() const { return !min_degree().has_value(); }

  std::span<const std::uint64_t> raw() const { return coeffs_; }
  std::span<std::uint64_t> raw() { return coeffs_; }
  void refresh_min_degree();

  friend bool operator==(const TruncatedPolynomial&, const TruncatedPolynomial&) = default;

 private:
  std::size_t max_degree_ = 0;
  std::size_t num_moduli_ = 0;
  std::size_t min_degree_ = 1;  // == max_degree_ + 1 when the polynomial is zero
  std::vector<std::uint64_t> coeffs_;
};

// target += x^shift * source, truncated at target.max_degree().
void add_shifted(TruncatedPolynomial& target, const TruncatedPolynomial& source, std::size_t shift,
                 std::span<const Modulus> moduli);

// Unique representative in [0, prod m_i).
BigInt crt_reconstruct(std::span<const std::uint64_t> residues, std::span<const Modulus> moduli);

BigInt product(std::span<const Modulus> moduli);

}  // namespace sawtm
