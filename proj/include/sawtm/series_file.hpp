#pragma once

// Series tables and their text file format:
//
//   # lattice: square
//   # quantity: count
//   # wmax: 4
//   # moduli: exact
//   0	1
//   1	4
//   ...
//
// Header lines start with '#' and hold `key: value` pairs. Body lines are
// `n<TAB>value` with exact decimal integers, or `n<TAB>r_0<TAB>r_1...` when
// the file keeps one residue per modulus (then `moduli:` lists them).

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sawtm/modseries.hpp"

namespace sawtm {

class SeriesParseError : public std::runtime_error {
 public:
  SeriesParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

inline constexpr const char* kAlgorithmVersion = "1.0.0";

struct SeriesTable {
  // Known header keys are written first in this order; anything else after.
  std::map<std::string, std::string> header;
  std::size_t first_n = 0;
  std::vector<BigInt> values;                       // exact form
  std::vector<std::vector<std::uint64_t>> residues;  // residue form, one row per n
  std::vector<Modulus> moduli;                      // residue form only

  bool is_exact() const { return moduli.empty(); }
  std::size_t size() const { return is_exact() ? values.size() : residues.size(); }
  std::size_t last_n() const { return first_n + size() - 1; }
  bool contains(std::size_t n) const { return n >= first_n && n < first_n + size(); }
  const BigInt& at(std::size_t n) const { return values.at(n - first_n); }

  std::string get(const std::string& key, const std::string& fallback = "") const;

  // CRT-reconstructs a residue table into exact form.
  SeriesTable to_exact() const;

  friend bool operator==(const SeriesTable&, const SeriesTable&) = default;
};

void write_series(const SeriesTable& table, std::ostream& out);
void write_series(const SeriesTable& table, const std::filesystem::path& path);
std::string series_to_string(const SeriesTable& table);

SeriesTable read_series(std::istream& in);
SeriesTable read_series(const std::filesystem::path& path);

struct SeriesMismatch {
  std::size_t n;
  std::string left;
  std::string right;
};

// Exact comparison over the overlapping range; nullopt when they agree.
// Throws if the two tables do not overlap at all.
std::optional<SeriesMismatch> first_mismatch(const SeriesTable& a, const SeriesTable& b);

}  // namespace sawtm
