#include "sawtm/series_file.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>
#include <string_view>

namespace sawtm {

namespace {

constexpr std::array<const char*, 8> kKeyOrder = {"lattice", "quantity", "wmax",      "nmax",
                                                  "moduli",  "crt-moduli", "algorithm", "version"};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == '\t' || line[i] == ' ')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != '\t' && line[j] != ' ') ++j;
    out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string moduli_csv(std::span<const Modulus> moduli) {
  std::string out;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(moduli[i].value());
  }
  return out;
}

}  // namespace

std::string SeriesTable::get(const std::string& key, const std::string& fallback) const {
  auto it = header.find(key);
  return it == header.end() ? fallback : it->second;
}

SeriesTable SeriesTable::to_exact() const {
  if (is_exact()) return *this;
  SeriesTable out;
  out.header = header;
  out.header["moduli"] = "exact";
  out.header["crt-moduli"] = moduli_csv(moduli);
  out.first_n = first_n;
  out.values.reserve(residues.size());
  for (const auto& row : residues) out.values.push_back(crt_reconstruct(row, moduli));
  return out;
}

void write_series(const SeriesTable& table, std::ostream& out) {
  auto header = table.header;
  header["moduli"] = table.is_exact() ? std::string("exact") : moduli_csv(table.moduli);
  for (const char* key : kKeyOrder) {
    auto it = header.find(key);
    if (it != header.end()) {
      out << "# " << it->first << ": " << it->second << '\n';
      header.erase(it);
    }
  }
  for (const auto& [k, v] : header) out << "# " << k << ": " << v << '\n';
  for (std::size_t i = 0; i < table.size(); ++i) {
    out << table.first_n + i;
    if (table.is_exact()) {
      out << '\t' << table.values[i].str();
    } else {
      for (std::uint64_t r : table.residues[i]) out << '\t' << r;
    }
    out << '\n';
  }
}

void write_series(const SeriesTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_series(table, out);
  if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

std::string series_to_string(const SeriesTable& table) {
  std::ostringstream ss;
  write_series(table, ss);
  return ss.str();
}

SeriesTable read_series(std::istream& in) {
  SeriesTable table;
  std::string raw;
  std::size_t line_no = 0;
  bool have_body = false;
  std::size_t expected_n = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (have_body) throw SeriesParseError(line_no, "header line after body");
      line.remove_prefix(1);
      const auto colon = line.find(':');
      if (colon == std::string_view::npos) throw SeriesParseError(line_no, "header line without ':'");
      const std::string key(trim(line.substr(0, colon)));
      const std::string value(trim(line.substr(colon + 1)));
      if (key.empty()) throw SeriesParseError(line_no, "empty header key");
      if (key == "moduli" && value != "exact") {
        try {
          table.moduli = parse_moduli(value);
        } catch (const ConfigError& e) {
          throw SeriesParseError(line_no, e.what());
        }
      }
      table.header[key] = value;
      continue;
    }
    const auto fields = split_fields(line);
    const std::size_t want = 1 + (table.is_exact() ? 1 : table.moduli.size());
    if (fields.size() != want) {
      throw SeriesParseError(line_no, "expected " + std::to_string(want) + " fields, found " +
                                          std::to_string(fields.size()));
    }
    if (!all_digits(fields[0])) throw SeriesParseError(line_no, "malformed index");
    const std::size_t n = std::stoull(std::string(fields[0]));
    if (!have_body) {
      table.first_n = n;
      expected_n = n;
      have_body = true;
    }
    if (n != expected_n) {
      if (n + 1 == expected_n) throw SeriesParseError(line_no, "duplicate n = " + std::to_string(n));
      if (n < expected_n) throw SeriesParseError(line_no, "n decreases to " + std::to_string(n));
      throw SeriesParseError(line_no, "gap before n = " + std::to_string(n));
    }
    ++expected_n;
    if (table.is_exact()) {
      if (!all_digits(fields[1])) throw SeriesParseError(line_no, "malformed integer value");
      table.values.emplace_back(std::string(fields[1]));
    } else {
      std::vector<std::uint64_t> row;
      for (std::size_t i = 1; i < fields.size(); ++i) {
        if (!all_digits(fields[i]) || fields[i].size() > 20) {
          throw SeriesParseError(line_no, "malformed residue");
        }
        const BigInt v(std::string(fields[i]));
        if (v >= table.moduli[i - 1].value()) throw SeriesParseError(line_no, "residue exceeds modulus");
        row.push_back(v.convert_to<std::uint64_t>());
      }
      table.residues.push_back(std::move(row));
    }
  }
  if (!have_body) throw SeriesParseError(line_no, "series has no coefficients");
  return table;
}

SeriesTable read_series(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_series(in);
}

std::optional<SeriesMismatch> first_mismatch(const SeriesTable& a_in, const SeriesTable& b_in) {
  const SeriesTable a = a_in.to_exact();
  const SeriesTable b = b_in.to_exact();
  const std::size_t lo = std::max(a.first_n, b.first_n);
  const std::size_t hi = std::min(a.last_n(), b.last_n());
  if (a.size() == 0 || b.size() == 0 || lo > hi) throw std::runtime_error("series do not overlap");
  for (std::size_t n = lo; n <= hi; ++n) {
    if (a.at(n) != b.at(n)) return SeriesMismatch{n, a.at(n).str(), b.at(n).str()};
  }
  return std::nullopt;
}

}  // namespace sawtm
