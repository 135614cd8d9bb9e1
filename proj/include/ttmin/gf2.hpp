#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace ttmin::gf2
{

/// Row of an augmented system [u | b]: the form u in the low n bits, b in bit n.
using row_t = std::uint64_t;

inline row_t make_row( std::uint32_t u, int b, int n )
{
  return row_t( u ) | ( row_t( b & 1 ) << n );
}

inline std::uint32_t row_form( row_t r, int n )
{
  return std::uint32_t( r & ( ( row_t( 1 ) << n ) - 1 ) );
}

inline int row_rhs( row_t r, int n )
{
  return int( ( r >> n ) & 1 );
}

/*! \brief Reduced row echelon form of an augmented GF(2) system.
 *
 * Rows are returned sorted by decreasing pivot; the result is a canonical
 * representative of the row space, so two constraint systems describe the
 * same affine subspace iff their echelon forms are equal.
 */
inline std::vector<row_t> rref( std::vector<row_t> rows, int n )
{
  std::vector<row_t> basis;
  for ( auto r : rows )
  {
    for ( auto b : basis )
    {
      const std::uint32_t bu = row_form( b, n );
      const int p = 31 - std::countl_zero( bu );
      if ( ( row_form( r, n ) >> p ) & 1u )
        r ^= b;
    }
    if ( row_form( r, n ) != 0 )
      basis.push_back( r );
  }
  // rows sorted by decreasing pivot; the rhs bit must not affect the order
  auto by_form = [n]( row_t a, row_t b ) { return row_form( a, n ) > row_form( b, n ); };
  std::sort( basis.begin(), basis.end(), by_form );
  // back substitution clears pivot columns from the earlier rows
  for ( std::size_t i = 0; i < basis.size(); ++i )
  {
    const std::uint32_t u = row_form( basis[i], n );
    const int p = 31 - std::countl_zero( u );
    for ( std::size_t j = 0; j < i; ++j )
    {
      if ( ( row_form( basis[j], n ) >> p ) & 1u )
        basis[j] ^= basis[i];
    }
  }
  std::sort( basis.begin(), basis.end(), by_form );
  return basis;
}

/// True iff u is in the span of the forms of the (echelonized) rows.
inline bool in_span( std::uint32_t u, const std::vector<row_t>& rows, int n )
{
  for ( auto r : rows )
  {
    const std::uint32_t ru = row_form( r, n );
    if ( ru == 0 )
      continue;
    const int p = 31 - std::countl_zero( ru );
    if ( ( u >> p ) & 1u )
      u ^= ru;
  }
  return u == 0;
}

/*! \brief Reduces [u | b] against the rows; returns the reduced row.
 *
 * If the form part reduces to zero the constraint is dependent and the
 * leftover rhs bit tells whether it is implied (0) or contradicted (1).
 */
inline row_t reduce_row( std::uint32_t u, int b, const std::vector<row_t>& rows, int n )
{
  row_t r = make_row( u, b, n );
  for ( auto br : rows )
  {
    const std::uint32_t bu = row_form( br, n );
    if ( bu == 0 )
      continue;
    const int p = 31 - std::countl_zero( bu );
    if ( ( row_form( r, n ) >> p ) & 1u )
      r ^= br;
  }
  return r;
}

/// Minimum-total-Hamming-weight basis of span(candidates), greedy by weight.
inline std::vector<std::uint32_t> min_weight_basis( std::vector<std::uint32_t> candidates, int n )
{
  std::sort( candidates.begin(), candidates.end(), []( std::uint32_t a, std::uint32_t b ) {
    const int wa = std::popcount( a ), wb = std::popcount( b );
    return wa != wb ? wa < wb : a < b;
  } );
  std::vector<row_t> basis_rows;
  std::vector<std::uint32_t> basis;
  for ( auto u : candidates )
  {
    if ( u == 0 || in_span( u, basis_rows, n ) )
      continue;
    basis.push_back( u );
    basis_rows = rref( [&] {
      auto rows = basis_rows;
      rows.push_back( make_row( u, 0, n ) );
      return rows;
    }(), n );
  }
  return basis;
}

} // namespace ttmin::gf2
