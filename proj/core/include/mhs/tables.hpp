#pragma once

#include "mhs/mhs_sums.hpp"
#include "mhs/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mhs {

/*
 * Bound-table data: for each length r, the optimal tuples with their strict
 * decimal upper bounds at n = m_r, and the exclusion tails with their
 * integer s_1 caps.
 *
 * File format (line-oriented, '#' comments):
 *   r | optimal   | composition (length r)    | decimal bound
 *   r | exclusion | tail composition (r-1)    | integer s_1 cap
 */
enum class RowKind { optimal, exclusion };

struct TableRow {
  std::uint32_t r = 0;
  RowKind kind = RowKind::optimal;
  Composition composition;
  std::string bound_text;

  Rational decimal_bound() const { return parse_decimal(bound_text); }
  std::int64_t s1_cap() const;  // exclusion rows only
};

class BoundTables {
 public:
  explicit BoundTables(std::vector<TableRow> rows);

  const std::vector<TableRow>& rows() const noexcept { return rows_; }
  // Ascending lengths that have at least one row.
  std::vector<std::uint32_t> lengths() const;
  std::vector<TableRow> optimal(std::uint32_t r) const;
  std::vector<TableRow> exclusion(std::uint32_t r) const;
  std::vector<Composition> optimal_compositions(std::uint32_t r) const;
  std::vector<Composition> exclusion_tails(std::uint32_t r) const;

  /*
   * Enumeration cap for the cover check at length r: one above the largest
   * exponent appearing in this r's rows and s_1 caps, so every listed
   * exponent lies strictly inside the enumerated box.
   */
  std::uint32_t cover_cap(std::uint32_t r) const;

 private:
  std::vector<TableRow> rows_;
};

// Throws ParseError with a "line N:" prefix on malformed input; validates
// composition lengths and bound syntax per kind.
BoundTables parse_tables(std::string_view text);

// The table text compiled into the library (byte-identical to the shipped
// data file) and its FNV-1a 64 checksum.
std::string_view embedded_tables_text();
std::uint64_t fnv1a64(std::string_view bytes);

/*
 * Parses the embedded table after revalidating its checksum against the
 * frozen constant, so silent drift of the data surfaces as a failure here
 * rather than as a wrong verification verdict downstream.
 */
BoundTables load_tables();

BoundTables load_tables_from_file(const std::string& path);

}  // namespace mhs
