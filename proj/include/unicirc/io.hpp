#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "unicirc/spectrum.hpp"

namespace unicirc {

/// 17 significant digits: round-trip exact, so regression diffs are exact.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline bool looks_numeric(const std::string& field) {
  for (char c : field)
    if ((c >= '0' && c <= '9') || c == '-' || c == '+' || c == '.' ) return true;
  return false;
}

inline std::vector<std::array<double, 3>> parse_csv_rows(const std::string& text,
                                                         const std::string& path) {
  std::vector<std::array<double, 3>> rows;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::array<std::string, 3> fields;
    for (int i = 0; i < 3; ++i) std::getline(ls, fields[static_cast<std::size_t>(i)], ',');
    if (lineno == 1 && !looks_numeric(fields[0])) continue;  // header
    std::array<double, 3> row{};
    for (int i = 0; i < 3; ++i) {
      try {
        row[static_cast<std::size_t>(i)] = std::stod(fields[static_cast<std::size_t>(i)]);
      } catch (const std::exception&) {
        fail(path + ":" + std::to_string(lineno) + ": cannot parse field '" +
             fields[static_cast<std::size_t>(i)] + "'");
      }
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace detail

/// Coefficient file: CSV with header n,re,im, or a JSON array of
/// {n, re, im}. Indices need not be contiguous; absent indices are zero.
inline FourierCoeffs read_coeffs(const std::string& path) {
  std::vector<std::pair<int, cplx>> entries;
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(detail::read_file(path));
    } catch (const nlohmann::json::exception& e) {
      fail(path + ": " + e.what());
    }
    require(doc.is_array(), path + ": expected a JSON array of {n, re, im}");
    for (const auto& item : doc)
      entries.emplace_back(item.at("n").get<int>(),
                           cplx(item.at("re").get<double>(), item.at("im").get<double>()));
  } else {
    for (const auto& row : detail::parse_csv_rows(detail::read_file(path), path))
      entries.emplace_back(static_cast<int>(std::llround(row[0])), cplx(row[1], row[2]));
  }
  require(!entries.empty(), path + ": no coefficient rows");
  int m = 0;
  for (const auto& [n, v] : entries) m = std::max(m, std::abs(n));
  FourierCoeffs out(m);
  for (const auto& [n, v] : entries) out.at(n) = v;
  return out;
}

inline void write_coeffs_csv(const std::string& path, const FourierCoeffs& c) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), "cannot write " + path);
  out << "n,re,im\n";
  for (int n = -c.bandwidth; n <= c.bandwidth; ++n)
    out << n << ',' << format_double(c.coef(n).real()) << ',' << format_double(c.coef(n).imag())
        << '\n';
}

/// Sample file: CSV j,re,im; the row count is the grid size.
inline CircleSamples read_samples_csv(const std::string& path) {
  const auto rows = detail::parse_csv_rows(detail::read_file(path), path);
  require(!rows.empty(), path + ": no sample rows");
  std::vector<cplx> v(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) v[i] = cplx(rows[i][1], rows[i][2]);
  return CircleSamples(std::move(v));
}

inline void write_samples_csv(const std::string& path, const CircleSamples& s) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), "cannot write " + path);
  out << "j,re,im\n";
  for (int j = 0; j < s.size(); ++j)
    out << j << ',' << format_double(s.values[static_cast<std::size_t>(j)].real()) << ','
        << format_double(s.values[static_cast<std::size_t>(j)].imag()) << '\n';
}

/// Minimal deterministic JSON emitter: insertion-ordered keys, 17-digit
/// numbers, no locale dependence. Used for every report this tool writes.
class JsonWriter {
 public:
  JsonWriter& begin_object() {
    comma();
    buf_ += '{';
    fresh_ = true;
    return *this;
  }
  JsonWriter& end_object() {
    buf_ += '}';
    fresh_ = false;
    return *this;
  }
  JsonWriter& begin_array() {
    comma();
    buf_ += '[';
    fresh_ = true;
    return *this;
  }
  JsonWriter& end_array() {
    buf_ += ']';
    fresh_ = false;
    return *this;
  }
  JsonWriter& key(const std::string& k) {
    comma();
    append_string(k);
    buf_ += ':';
    fresh_ = true;
    return *this;
  }
  JsonWriter& value(double v) {
    comma();
    buf_ += format_double(v);
    fresh_ = false;
    return *this;
  }
  JsonWriter& value(int v) {
    comma();
    buf_ += std::to_string(v);
    fresh_ = false;
    return *this;
  }
  JsonWriter& value(std::uint64_t v) {
    comma();
    buf_ += std::to_string(v);
    fresh_ = false;
    return *this;
  }
  JsonWriter& value(bool v) {
    comma();
    buf_ += v ? "true" : "false";
    fresh_ = false;
    return *this;
  }
  JsonWriter& value(const std::string& v) {
    comma();
    append_string(v);
    fresh_ = false;
    return *this;
  }
  const std::string& str() const { return buf_; }

 private:
  void comma() {
    if (!fresh_ && !buf_.empty() && buf_.back() != '{' && buf_.back() != '[' && buf_.back() != ':')
      buf_ += ',';
    fresh_ = false;
  }
  void append_string(const std::string& s) {
    buf_ += '"';
    for (char c : s) {
      switch (c) {
        case '"': buf_ += "\\\""; break;
        case '\\': buf_ += "\\\\"; break;
        case '\n': buf_ += "\\n"; break;
        case '\t': buf_ += "\\t"; break;
        default: buf_ += c;
      }
    }
    buf_ += '"';
  }
  std::string buf_;
  bool fresh_ = true;
};

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), "cannot write " + path);
  out << text;
}

}  // namespace unicirc
