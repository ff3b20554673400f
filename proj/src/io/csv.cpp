#include "coarsemap/io/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

#include "coarsemap/error.hpp"

namespace coarsemap::io {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

[[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& what) {
  throw Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

}  // namespace

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

DecayMatrix read_decay_matrix(std::istream& in, bool symmetrize) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> ids;
  std::vector<double> raw;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto fields = split(line);
    if (ids.empty()) {
      if (fields[0] != "site") fail(lineno, 1, "header must start with 'site'");
      if (fields.size() < 2) fail(lineno, 2, "header lists no sites");
      for (std::size_t k = 1; k < fields.size(); ++k) {
        if (fields[k].empty()) fail(lineno, k + 1, "empty site label");
        if (std::find(ids.begin(), ids.end(), fields[k]) != ids.end()) {
          fail(lineno, k + 1, "duplicate site label '" + std::string(fields[k]) + "'");
        }
        ids.emplace_back(fields[k]);
      }
      continue;
    }
    const std::size_t n = ids.size();
    if (row >= n) fail(lineno, 1, "more rows than header sites (" + std::to_string(n) + ")");
    if (fields.size() != n + 1) {
      fail(lineno, fields.size() < n + 1 ? fields.size() + 1 : n + 2,
           "row '" + std::string(fields[0]) + "' has " + std::to_string(fields.size()) + " fields, expected " +
               std::to_string(n + 1));
    }
    if (fields[0] != ids[row]) {
      fail(lineno, 1, "row label '" + std::string(fields[0]) + "' does not match header label '" + ids[row] + "'");
    }
    for (std::size_t k = 1; k <= n; ++k) {
      const auto f = fields[k];
      double v = 0.0;
      const auto res = std::from_chars(f.data(), f.data() + f.size(), v);
      if (f.empty() || res.ec != std::errc() || res.ptr != f.data() + f.size()) {
        fail(lineno, k + 1, "not a number: '" + std::string(f) + "'");
      }
      raw.push_back(v);
    }
    ++row;
  }
  if (ids.empty()) throw Error(ErrorCode::ParseError, "line 1, column 1: missing header");
  if (row != ids.size()) {
    fail(lineno + 1, 1, "expected " + std::to_string(ids.size()) + " rows, found " + std::to_string(row));
  }
  return build_decay_matrix(raw, SiteSet(std::move(ids)), symmetrize);
}

DecayMatrix read_decay_matrix(const std::filesystem::path& path, bool symmetrize) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path.string());
  try {
    return read_decay_matrix(in, symmetrize);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ParseError) throw;
    throw Error(ErrorCode::ParseError, path.string() + ": " + std::string(e.what()).substr(12));
  }
}

void write_decay_matrix(std::ostream& out, const DecayMatrix& f) {
  const std::size_t n = f.size();
  out << "site";
  for (const auto& id : f.sites().ids()) out << ',' << id;
  out << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    out << f.sites().id(i);
    for (std::size_t j = 0; j < n; ++j) out << ',' << format_value(f(i, j));
    out << '\n';
  }
}

void write_decay_matrix(const std::filesystem::path& path, const DecayMatrix& f) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  write_decay_matrix(out, f);
}

}  // namespace coarsemap::io
