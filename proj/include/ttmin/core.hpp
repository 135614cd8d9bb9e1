#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ttmin
{

/// Hard limit on the number of variables accepted from external input.
inline constexpr int max_variables = 20;

enum class trit : std::uint8_t
{
  zero = 0,
  one = 1,
  star = 2
};

/*! \brief Full truth table of a boolean function on n variables.
 *
 * Entry `bits[i]` is the value of f on the assignment whose j-th variable
 * (0-based) equals bit j of the index i.  Variable 0 is the least
 * significant bit of the index.  Constant functions are represented as
 * tables with n = 0 and a single entry.
 */
struct TruthTable
{
  int n = 0;
  std::vector<std::uint8_t> bits;

  TruthTable() : bits( 1, 0 ) {}
  TruthTable( int num_vars, std::vector<std::uint8_t> values );

  std::size_t size() const { return bits.size(); }
  std::uint8_t operator[]( std::size_t i ) const { return bits[i]; }

  friend bool operator==( const TruthTable& a, const TruthTable& b ) = default;
};

/// Truth table over {0, 1, *}; '*' entries are unconstrained.
struct PartialTruthTable
{
  int n = 0;
  std::vector<trit> entries;

  PartialTruthTable() : entries( 1, trit::star ) {}
  PartialTruthTable( int num_vars, std::vector<trit> values );

  std::size_t size() const { return entries.size(); }

  friend bool operator==( const PartialTruthTable& a, const PartialTruthTable& b ) = default;
};

/// A cube of {0,1}^n: fixed coordinates plus free ('*') coordinates.
struct CubeRestriction
{
  std::vector<trit> pattern;

  CubeRestriction() = default;
  explicit CubeRestriction( std::vector<trit> p ) : pattern( std::move( p ) ) {}
  static CubeRestriction from_string( std::string_view s );

  int num_free() const;
  std::string to_string() const;
};

using ParsedTable = std::variant<TruthTable, PartialTruthTable>;

/*! \brief Parses a table from a row of {0,1,*} characters.
 *
 * Returns a TruthTable when no '*' occurs, a PartialTruthTable otherwise.
 * The length must be a power of two, at least 2 and at most 2^20.
 */
ParsedTable from_text( std::string_view s );

/// Like from_text but requires a full table.
TruthTable parse_truth_table( std::string_view s );
PartialTruthTable parse_partial_truth_table( std::string_view s );

/*! \brief Parses the table file format.
 *
 * An optional first line "n=<k>" states the variable count; the next
 * non-empty line holds the 2^n entries.
 */
ParsedTable parse_table_text( std::string_view text );

/// Assignment string "101" lists x1 first.  Throws on length mismatch.
std::uint32_t parse_assignment( std::string_view s, int n );

bool evaluate( const TruthTable& tt, std::uint32_t assignment );

TruthTable restrict_table( const TruthTable& tt, const CubeRestriction& cube );

struct SupportReduction
{
  TruthTable table;
  std::vector<int> support; ///< surviving original variable indices, 0-based, increasing
};

/*! \brief Drops variables the function does not depend on.
 *
 * The result depends on every remaining variable; a constant input yields
 * a 0-variable table and an empty support map.
 */
SupportReduction reduce_to_support( const TruthTable& tt );

bool depends_on( const TruthTable& tt, int var );
bool depends_on_all_variables( const TruthTable& tt );
bool is_constant( const TruthTable& tt );

/// Functional equality; throws when the variable counts differ.
bool equal_functional( const TruthTable& a, const TruthTable& b );

std::int64_t count_ones( const TruthTable& tt );

/// True iff tt matches p on every non-star position.
bool consistent_with( const PartialTruthTable& p, const TruthTable& tt );

std::string to_string( const TruthTable& tt );
std::string to_string( const PartialTruthTable& p );

} // namespace ttmin
