#include "mhs/tables.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mhs {

namespace {

// Frozen at the time the shipped table was reviewed.  load_tables() refuses
// to serve an embedded table whose bytes hash differently.
constexpr std::uint64_t kEmbeddedTablesChecksum = 0x67da33ee7893fbf6ULL;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what, line_no);
}

std::uint64_t parse_small_uint(std::string_view s, std::size_t line_no,
                               const char* what) {
  if (s.empty()) fail(line_no, std::string("missing ") + what);
  std::uint64_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9')
      fail(line_no, std::string("invalid ") + what + " '" + std::string(s) + "'");
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
    if (v > 1000000) fail(line_no, std::string(what) + " out of range");
  }
  return v;
}

}  // namespace

std::int64_t TableRow::s1_cap() const {
  if (kind != RowKind::exclusion)
    throw std::logic_error("s1_cap: not an exclusion row");
  std::int64_t v = 0;
  for (char c : bound_text) v = v * 10 + (c - '0');
  return v;
}

BoundTables::BoundTables(std::vector<TableRow> rows) : rows_(std::move(rows)) {}

std::vector<std::uint32_t> BoundTables::lengths() const {
  std::set<std::uint32_t> seen;
  for (const TableRow& row : rows_) seen.insert(row.r);
  return {seen.begin(), seen.end()};
}

std::vector<TableRow> BoundTables::optimal(std::uint32_t r) const {
  std::vector<TableRow> out;
  for (const TableRow& row : rows_)
    if (row.r == r && row.kind == RowKind::optimal) out.push_back(row);
  return out;
}

std::vector<TableRow> BoundTables::exclusion(std::uint32_t r) const {
  std::vector<TableRow> out;
  for (const TableRow& row : rows_)
    if (row.r == r && row.kind == RowKind::exclusion) out.push_back(row);
  return out;
}

std::vector<Composition> BoundTables::optimal_compositions(std::uint32_t r) const {
  std::vector<Composition> out;
  for (const TableRow& row : optimal(r)) out.push_back(row.composition);
  return out;
}

std::vector<Composition> BoundTables::exclusion_tails(std::uint32_t r) const {
  std::vector<Composition> out;
  for (const TableRow& row : exclusion(r)) out.push_back(row.composition);
  return out;
}

std::uint32_t BoundTables::cover_cap(std::uint32_t r) const {
  std::uint32_t max_seen = 0;
  bool any = false;
  for (const TableRow& row : rows_) {
    if (row.r != r) continue;
    any = true;
    for (std::size_t i = 0; i < row.composition.length(); ++i)
      max_seen = std::max(max_seen, row.composition[i]);
    if (row.kind == RowKind::exclusion)
      max_seen = std::max(max_seen, static_cast<std::uint32_t>(row.s1_cap()));
  }
  if (!any) throw std::out_of_range("cover_cap: no rows for this length");
  return max_seen + 1;
}

BoundTables parse_tables(std::string_view text) {
  std::vector<TableRow> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = (eol == std::string_view::npos)
                                ? text.substr(pos)
                                : text.substr(pos, eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;

    std::string_view body = line;
    std::size_t hash = body.find('#');
    if (hash != std::string_view::npos) body = body.substr(0, hash);
    body = trim(body);
    if (body.empty()) continue;

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t bar = body.find('|', start);
      if (bar == std::string_view::npos) {
        fields.push_back(trim(body.substr(start)));
        break;
      }
      fields.push_back(trim(body.substr(start, bar - start)));
      start = bar + 1;
    }
    if (fields.size() != 4)
      fail(line_no, "expected 4 '|'-separated fields, got " +
                        std::to_string(fields.size()));

    const auto r = static_cast<std::uint32_t>(
        parse_small_uint(fields[0], line_no, "length"));
    if (r < 1) fail(line_no, "length must be positive");

    RowKind kind;
    if (fields[1] == "optimal") {
      kind = RowKind::optimal;
    } else if (fields[1] == "exclusion") {
      kind = RowKind::exclusion;
    } else {
      fail(line_no, "unknown row kind '" + std::string(fields[1]) + "'");
    }
    if (kind == RowKind::exclusion && r < 2)
      fail(line_no, "exclusion rows need length >= 2");

    std::optional<Composition> comp;
    try {
      comp = parse_composition(fields[2]);
    } catch (const ParseError& e) {
      fail(line_no, std::string("bad composition: ") + e.what());
    }
    const std::uint32_t want = kind == RowKind::optimal ? r : r - 1;
    if (comp->length() != want)
      fail(line_no, "composition length " + std::to_string(comp->length()) +
                        ", expected " + std::to_string(want));

    std::string bound_text(fields[3]);
    if (kind == RowKind::optimal) {
      try {
        parse_decimal(bound_text);
      } catch (const ParseError& e) {
        fail(line_no, std::string("bad bound: ") + e.what());
      }
    } else {
      std::uint64_t cap = parse_small_uint(fields[3], line_no, "cap");
      if (cap < 1) fail(line_no, "cap must be positive");
    }
    rows.push_back(TableRow{r, kind, *std::move(comp), std::move(bound_text)});
  }
  return BoundTables(std::move(rows));
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

BoundTables load_tables() {
  std::string_view text = embedded_tables_text();
  std::uint64_t got = fnv1a64(text);
  if (got != kEmbeddedTablesChecksum) {
    std::ostringstream oss;
    oss << "embedded bound table checksum mismatch: got 0x" << std::hex << got
        << ", expected 0x" << kEmbeddedTablesChecksum;
    throw std::runtime_error(oss.str());
  }
  return parse_tables(text);
}

BoundTables load_tables_from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open table file: " + path);
  std::ostringstream oss;
  oss << in.rdbuf();
  return parse_tables(oss.str());
}

}  // namespace mhs
