#include "ttmin/oracles.hpp"
#include "ttmin/bp.hpp"
#include "ttmin/gf2.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace ttmin::oracles
{

namespace
{

int parity( std::uint32_t x )
{
  return std::popcount( x ) & 1;
}

/// Function restricted to a point set given as a bitmask over assignments.
bool constant_on_mask( const TruthTable& tt, std::uint32_t mask, int& value )
{
  value = -1;
  for ( std::uint32_t x = 0; x < tt.bits.size(); ++x )
  {
    if ( !( ( mask >> x ) & 1u ) )
      continue;
    if ( value < 0 )
      value = tt.bits[x];
    else if ( value != tt.bits[x] )
      return false;
  }
  return true;
}

struct SizeExistence
{
  const TruthTable* tt;
  int n;
  // keyed by (point mask, size)
  std::map<std::pair<std::uint32_t, int>, bool> memo;
  bool linear = false; // variables only vs all linear forms
  int max_weight = 0;  // for linear tests; 0 = unbounded

  bool exists( std::uint32_t mask, int size )
  {
    const auto key = std::make_pair( mask, size );
    if ( auto it = memo.find( key ); it != memo.end() )
      return it->second;
    int value;
    bool result = false;
    if ( constant_on_mask( *tt, mask, value ) )
    {
      result = size == 1;
    }
    else if ( size >= 3 )
    {
      const std::uint32_t points = std::uint32_t( tt->bits.size() );
      const std::uint32_t test_limit = linear ? points : std::uint32_t( n );
      for ( std::uint32_t u = linear ? 1 : 0; u < test_limit && !result; ++u )
      {
        std::uint32_t m0 = 0, m1 = 0;
        if ( linear )
        {
          if ( max_weight > 0 && std::popcount( u ) > max_weight )
            continue;
          for ( std::uint32_t x = 0; x < points; ++x )
          {
            if ( ( mask >> x ) & 1u )
              ( parity( u & x ) ? m1 : m0 ) |= std::uint32_t( 1 ) << x;
          }
        }
        else
        {
          for ( std::uint32_t x = 0; x < points; ++x )
          {
            if ( ( mask >> x ) & 1u )
              ( ( ( x >> u ) & 1u ) ? m1 : m0 ) |= std::uint32_t( 1 ) << x;
          }
        }
        if ( !m0 || !m1 )
          continue;
        for ( int s0 = 1; s0 <= size - 2 && !result; s0 += 2 )
        {
          if ( exists( m0, s0 ) && exists( m1, size - 1 - s0 ) )
            result = true;
        }
      }
    }
    memo.emplace( key, result );
    return result;
  }

  int minimum()
  {
    const std::uint32_t full =
        tt->bits.size() >= 32 ? ~std::uint32_t( 0 )
                              : ( std::uint32_t( 1 ) << tt->bits.size() ) - 1;
    const int cap = 2 * static_cast<int>( tt->bits.size() ) + 1;
    for ( int s = 1; s <= cap; s += 2 )
    {
      if ( exists( full, s ) )
        return s;
    }
    throw std::logic_error( "no tree found below the size cap" );
  }
};

} // namespace

int min_dt_size( const TruthTable& tt )
{
  if ( tt.n > 4 )
    throw std::invalid_argument( "oracle supports n <= 4" );
  SizeExistence se;
  se.tt = &tt;
  se.n = tt.n;
  se.linear = false;
  return se.minimum();
}

int min_ldt_size( const TruthTable& tt )
{
  if ( tt.n > 4 )
    throw std::invalid_argument( "oracle supports n <= 4" );
  SizeExistence se;
  se.tt = &tt;
  se.n = tt.n;
  se.linear = true;
  return se.minimum();
}

int min_ldt_c_size( const TruthTable& tt, int c )
{
  if ( tt.n > 4 )
    throw std::invalid_argument( "oracle supports n <= 4" );
  SizeExistence se;
  se.tt = &tt;
  se.n = tt.n;
  se.linear = true;
  se.max_weight = c;
  return se.minimum();
}

// --- symmetric read-once trees -------------------------------------------------

namespace
{

/// key: variable mask plus the table over those variables (low bits)
using SymKey = std::pair<std::uint32_t, std::uint32_t>;

struct SrodtExistence
{
  std::map<std::pair<SymKey, int>, bool> memo;

  static std::uint32_t restrict_key( std::uint32_t table, int vars, int drop_mask,
                                     std::uint32_t fixed )
  {
    // build the table over the remaining variables
    std::uint32_t out = 0;
    const int remaining = vars - std::popcount( std::uint32_t( drop_mask ) );
    for ( std::uint32_t y = 0; y < ( std::uint32_t( 1 ) << remaining ); ++y )
    {
      // interleave y into the non-dropped positions, fixed into dropped ones
      std::uint32_t full = 0;
      int yi = 0, fi = 0;
      for ( int j = 0; j < vars; ++j )
      {
        if ( ( drop_mask >> j ) & 1u )
        {
          if ( ( fixed >> fi ) & 1u )
            full |= std::uint32_t( 1 ) << j;
          ++fi;
        }
        else
        {
          if ( ( y >> yi ) & 1u )
            full |= std::uint32_t( 1 ) << j;
          ++yi;
        }
      }
      if ( ( table >> full ) & 1u )
        out |= std::uint32_t( 1 ) << y;
    }
    return out;
  }

  bool exists( std::uint32_t table, int vars, int size )
  {
    const std::uint32_t points = std::uint32_t( 1 ) << vars;
    const std::uint32_t full_mask = ( points >= 32 ) ? ~std::uint32_t( 0 )
                                                     : ( std::uint32_t( 1 ) << points ) - 1;
    const bool constant = ( table & full_mask ) == 0 || ( table & full_mask ) == full_mask;
    if ( constant )
      return size == 1;
    if ( size < 3 )
      return false;
    const auto key = std::make_pair( SymKey{ std::uint32_t( vars ), table }, size );
    if ( auto it = memo.find( key ); it != memo.end() )
      return it->second;

    bool result = false;
    for ( std::uint32_t amask = 1; amask < ( std::uint32_t( 1 ) << vars ) && !result; ++amask )
    {
      const int asize = std::popcount( amask );
      const std::uint32_t ext_count = std::uint32_t( 1 ) << asize;
      for ( std::uint32_t gmask = 1; gmask + 1 < ( std::uint32_t( 1 ) << ( asize + 1 ) ) && !result;
            ++gmask )
      {
        std::uint32_t sub[2];
        bool have[2] = { false, false };
        bool feasible = true;
        for ( std::uint32_t s = 0; s < ext_count && feasible; ++s )
        {
          const int b = int( ( gmask >> std::popcount( s ) ) & 1u );
          const std::uint32_t h = restrict_key( table, vars, int( amask ), s );
          if ( !have[b] )
          {
            sub[b] = h;
            have[b] = true;
          }
          else if ( sub[b] != h )
          {
            feasible = false;
          }
        }
        if ( !feasible )
          continue;
        const int rest = vars - asize;
        for ( int s0 = 1; s0 <= size - 2 && !result; s0 += 2 )
        {
          if ( exists( sub[0], rest, s0 ) && exists( sub[1], rest, size - 1 - s0 ) )
            result = true;
        }
      }
    }
    memo.emplace( key, result );
    return result;
  }
};

} // namespace

int min_srodt_size( const TruthTable& tt )
{
  if ( tt.n > 4 )
    throw std::invalid_argument( "oracle supports n <= 4" );
  std::uint32_t table = 0;
  for ( std::uint32_t x = 0; x < tt.bits.size(); ++x )
  {
    if ( tt.bits[x] )
      table |= std::uint32_t( 1 ) << x;
  }
  SrodtExistence se;
  const int cap = 2 * static_cast<int>( tt.bits.size() ) + 1;
  for ( int s = 1; s <= cap; s += 2 )
  {
    if ( se.exists( table, tt.n, s ) )
      return s;
  }
  throw std::logic_error( "no symmetric tree found below the size cap" );
}

// --- linear decision lists ------------------------------------------------------

namespace
{

struct LdlOracle
{
  const TruthTable* tt;
  std::unordered_map<std::uint32_t, int> memo; // point mask -> min size or -1

  int solve( std::uint32_t mask )
  {
    if ( auto it = memo.find( mask ); it != memo.end() )
      return it->second;
    int value;
    int result = -1;
    if ( constant_on_mask( *tt, mask, value ) )
    {
      result = 0;
    }
    else
    {
      const std::uint32_t points = std::uint32_t( tt->bits.size() );
      for ( std::uint32_t u = 1; u < points; ++u )
      {
        std::uint32_t m0 = 0, m1 = 0;
        for ( std::uint32_t x = 0; x < points; ++x )
        {
          if ( ( mask >> x ) & 1u )
            ( parity( u & x ) ? m1 : m0 ) |= std::uint32_t( 1 ) << x;
        }
        if ( !m0 || !m1 )
          continue;
        for ( int b = 0; b < 2; ++b )
        {
          const std::uint32_t taken = b ? m1 : m0;
          const std::uint32_t rest = b ? m0 : m1;
          int taken_value;
          if ( !constant_on_mask( *tt, taken, taken_value ) )
            continue;
          const int sub = solve( rest );
          if ( sub < 0 )
            continue;
          if ( result < 0 || 1 + sub < result )
            result = 1 + sub;
        }
      }
    }
    memo.emplace( mask, result );
    return result;
  }
};

} // namespace

std::optional<int> min_ldl_size( const TruthTable& tt )
{
  if ( tt.n > 4 )
    throw std::invalid_argument( "oracle supports n <= 4" );
  LdlOracle oracle;
  oracle.tt = &tt;
  const std::uint32_t full = ( tt.bits.size() >= 32 )
                                 ? ~std::uint32_t( 0 )
                                 : ( std::uint32_t( 1 ) << tt.bits.size() ) - 1;
  const int r = oracle.solve( full );
  if ( r < 0 )
    return std::nullopt;
  return r;
}

// --- depth-2 and second-order unate formulas -------------------------------------

namespace
{

constexpr int kNone = -1;

void keep_min( std::vector<int>& table, std::size_t f, int leaves )
{
  if ( table[f] == kNone || leaves < table[f] )
    table[f] = leaves;
}

std::size_t shifted_function( std::size_t f, int n, std::uint32_t a )
{
  const std::uint32_t points = std::uint32_t( 1 ) << n;
  std::size_t g = 0;
  for ( std::uint32_t x = 0; x < points; ++x )
  {
    if ( ( f >> ( x ^ a ) ) & 1u )
      g |= std::size_t( 1 ) << x;
  }
  return g;
}

/// Projection g(x) = op over completions of x outside `vars_mask`.
std::size_t project( std::size_t f, int n, std::uint32_t vars_mask, bool use_or )
{
  const std::uint32_t points = std::uint32_t( 1 ) << n;
  std::size_t g = 0;
  for ( std::uint32_t x = 0; x < points; ++x )
  {
    bool acc = use_or ? false : true;
    const std::uint32_t base = x & vars_mask;
    for ( std::uint32_t y = 0; y < points; ++y )
    {
      if ( ( y & vars_mask ) != base )
        continue;
      const bool v = ( f >> y ) & 1u;
      acc = use_or ? ( acc || v ) : ( acc && v );
    }
    if ( acc )
      g |= std::size_t( 1 ) << x;
  }
  return g;
}

std::uint32_t support_mask( std::size_t f, int n )
{
  const std::uint32_t points = std::uint32_t( 1 ) << n;
  std::uint32_t mask = 0;
  for ( int i = 0; i < n; ++i )
  {
    for ( std::uint32_t x = 0; x < points; ++x )
    {
      if ( !( ( x >> i ) & 1u ) )
      {
        const bool a = ( f >> x ) & 1u;
        const bool b = ( f >> ( x | ( std::uint32_t( 1 ) << i ) ) ) & 1u;
        if ( a != b )
        {
          mask |= std::uint32_t( 1 ) << i;
          break;
        }
      }
    }
  }
  return mask;
}

} // namespace

UnateLeafTables enumerate_unate_leaves( int n )
{
  if ( n > 3 )
    throw std::invalid_argument( "oracle supports n <= 3" );
  const std::uint32_t points = std::uint32_t( 1 ) << n;
  const std::size_t functions = std::size_t( 1 ) << points;

  UnateLeafTables tables;
  tables.n = n;
  tables.udnf.assign( functions, kNone );
  tables.ucnf.assign( functions, kNone );
  tables.uf2.assign( functions, kNone );

  // monotone DNFs: every set of terms (subsets of variables, incl. empty)
  std::vector<int> mono_dnf( functions, kNone ), mono_cnf( functions, kNone );
  const std::uint32_t term_count = std::uint32_t( 1 ) << n;
  for ( std::uint32_t dnf = 0; dnf < ( std::uint32_t( 1 ) << term_count ); ++dnf )
  {
    std::size_t f = 0;
    int leaves = 0;
    for ( std::uint32_t term = 0; term < term_count; ++term )
    {
      if ( !( ( dnf >> term ) & 1u ) )
        continue;
      leaves += std::popcount( term );
      for ( std::uint32_t x = 0; x < points; ++x )
      {
        if ( ( term & x ) == term )
          f |= std::size_t( 1 ) << x;
      }
    }
    keep_min( mono_dnf, f, leaves );
  }
  // monotone CNFs: every set of clauses
  for ( std::uint32_t cnf = 0; cnf < ( std::uint32_t( 1 ) << term_count ); ++cnf )
  {
    std::size_t f = ( std::size_t( 1 ) << points ) - 1;
    int leaves = 0;
    for ( std::uint32_t clause = 0; clause < term_count; ++clause )
    {
      if ( !( ( cnf >> clause ) & 1u ) )
        continue;
      leaves += std::popcount( clause );
      for ( std::uint32_t x = 0; x < points; ++x )
      {
        if ( ( clause & x ) == 0 ) // no positive literal satisfied
          f &= ~( std::size_t( 1 ) << x );
      }
    }
    keep_min( mono_cnf, f, leaves );
  }

  // orientation shifts
  for ( std::size_t f = 0; f < functions; ++f )
  {
    for ( std::uint32_t a = 0; a < points; ++a )
    {
      const std::size_t g = shifted_function( f, n, a );
      if ( mono_dnf[g] != kNone )
        keep_min( tables.udnf, f, mono_dnf[g] );
      if ( mono_cnf[g] != kNone )
        keep_min( tables.ucnf, f, mono_cnf[g] );
    }
  }

  // second order: read-once splits over variable-disjoint blocks
  std::vector<int> uf2 = tables.uf2;
  std::vector<std::uint8_t> visiting( functions, 0 );
  auto solve = [&]( auto&& self, std::size_t f ) -> int {
    if ( uf2[f] != kNone )
      return uf2[f];
    if ( visiting[f] )
      return kNone;
    const std::size_t all_points_one = ( std::size_t( 1 ) << points ) - 1;
    if ( f == 0 || f == all_points_one )
    {
      uf2[f] = kNone; // the model has no constants
      return kNone;
    }
    visiting[f] = 1;

    int best = kNone;
    auto update = [&]( int v ) {
      if ( v != kNone && ( best == kNone || v < best ) )
        best = v;
    };
    update( tables.udnf[f] );
    update( tables.ucnf[f] );

    const std::uint32_t support = support_mask( f, n );
    if ( std::popcount( support ) >= 2 )
    {
      // all 2-block partitions of the support
      for ( std::uint32_t part = ( support - 1 ) & support; part;
            part = ( part - 1 ) & support )
      {
        const std::uint32_t other = support ^ part;
        if ( part > other )
          continue; // unordered
        for ( int use_or = 0; use_or < 2; ++use_or )
        {
          // and-factors come from or-projections and vice versa
          const std::size_t g1 = project( f, n, part, !use_or );
          const std::size_t g2 = project( f, n, other, !use_or );
          std::size_t combined = 0;
          for ( std::uint32_t x = 0; x < points; ++x )
          {
            const bool v1 = ( g1 >> x ) & 1u;
            const bool v2 = ( g2 >> x ) & 1u;
            const bool v = use_or ? ( v1 || v2 ) : ( v1 && v2 );
            if ( v )
              combined |= std::size_t( 1 ) << x;
          }
          if ( combined != f )
            continue;
          const int c1 = self( self, g1 );
          const int c2 = self( self, g2 );
          if ( c1 != kNone && c2 != kNone )
            update( c1 + c2 );
        }
      }
    }
    visiting[f] = 0;
    uf2[f] = best;
    return best;
  };
  for ( std::size_t f = 0; f < functions; ++f )
    solve( solve, f );
  tables.uf2 = std::move( uf2 );
  return tables;
}

ArithmeticLeafTables enumerate_arithmetic_leaves( int n )
{
  if ( n > 3 )
    throw std::invalid_argument( "oracle supports n <= 3" );
  const std::uint32_t points = std::uint32_t( 1 ) << n;
  const std::size_t functions = std::size_t( 1 ) << points;

  ArithmeticLeafTables tables;
  tables.n = n;
  tables.sigma2a.assign( functions, kNone );
  tables.pi2a.assign( functions, kNone );
  tables.f2a.assign( functions, kNone );

  // sums of monomials: every coefficient vector
  for ( std::size_t poly = 0; poly < functions; ++poly )
  {
    std::size_t f = 0;
    int leaves = 0;
    for ( std::uint32_t mono = 0; mono < points; ++mono )
    {
      if ( !( ( poly >> mono ) & 1u ) )
        continue;
      if ( mono )
        leaves += std::popcount( mono );
      for ( std::uint32_t x = 0; x < points; ++x )
      {
        if ( ( mono & x ) == mono )
          f ^= std::size_t( 1 ) << x;
      }
    }
    keep_min( tables.sigma2a, f, leaves );
  }

  // products of affine forms <alpha,x> + c with alpha != 0
  std::vector<std::pair<std::uint32_t, int>> forms;
  for ( std::uint32_t alpha = 1; alpha < points; ++alpha )
  {
    forms.emplace_back( alpha, 0 );
    forms.emplace_back( alpha, 1 );
  }
  for ( std::uint32_t subset = 0; subset < ( std::uint32_t( 1 ) << forms.size() ); ++subset )
  {
    std::size_t f = 0;
    int leaves = 0;
    for ( std::uint32_t x = 0; x < points; ++x )
    {
      bool acc = true;
      for ( std::size_t i = 0; i < forms.size() && acc; ++i )
      {
        if ( !( ( subset >> i ) & 1u ) )
          continue;
        if ( ( parity( forms[i].first & x ) ^ forms[i].second ) == 0 )
          acc = false;
      }
      if ( acc )
        f |= std::size_t( 1 ) << x;
    }
    for ( std::size_t i = 0; i < forms.size(); ++i )
    {
      if ( ( subset >> i ) & 1u )
        leaves += std::popcount( forms[i].first );
    }
    keep_min( tables.pi2a, f, leaves );
  }

  // second order: read-once splits over {+, *} with free constants
  std::vector<int> f2a( functions, kNone );
  const std::size_t all_ones = functions - 1;
  auto complement = [&]( std::size_t f ) { return f ^ all_ones; };

  auto solve = [&]( auto&& self, std::size_t f ) -> int {
    if ( f2a[f] != kNone )
      return f2a[f];

    int best = kNone;
    auto update = [&]( int v ) {
      if ( v != kNone && ( best == kNone || v < best ) )
        best = v;
    };
    if ( f == 0 || f == all_ones )
    {
      f2a[f] = 0;
      return 0;
    }
    update( tables.sigma2a[f] );
    update( tables.pi2a[f] );

    const std::uint32_t support = support_mask( f, n );
    if ( std::popcount( support ) >= 2 )
    {
      for ( std::uint32_t part = ( support - 1 ) & support; part;
            part = ( part - 1 ) & support )
      {
        const std::uint32_t other = support ^ part;
        if ( part > other )
          continue;

        // product splits of f and f + 1 (top constant is free)
        for ( int b = 0; b < 2; ++b )
        {
          const std::size_t g = b ? complement( f ) : f;
          const std::size_t g1 = project( g, n, part, true );
          const std::size_t g2 = project( g, n, other, true );
          std::size_t combined = 0;
          for ( std::uint32_t x = 0; x < points; ++x )
          {
            if ( ( ( g1 >> x ) & 1u ) && ( ( g2 >> x ) & 1u ) )
              combined |= std::size_t( 1 ) << x;
          }
          if ( combined != g )
            continue;
          const int c1 = self( self, g1 );
          const int c2 = self( self, g2 );
          if ( c1 != kNone && c2 != kNone )
            update( c1 + c2 );
        }

        // sum split: anchor the second factor at the all-zero assignment
        {
          std::size_t g1 = 0, g2 = 0;
          for ( std::uint32_t x = 0; x < points; ++x )
          {
            if ( ( f >> ( x & part ) ) & 1u )
              g1 |= std::size_t( 1 ) << x;
            const bool base = ( f >> 0 ) & 1u;
            if ( ( ( ( f >> ( x & other ) ) & 1u ) ^ base ) != 0 )
              g2 |= std::size_t( 1 ) << x;
          }
          std::size_t combined = g1 ^ g2;
          if ( combined == f )
          {
            const int c1 = std::min( self( self, g1 ) == kNone ? 1 << 20 : f2a[g1],
                                     self( self, complement( g1 ) ) == kNone ? 1 << 20
                                                                             : f2a[complement( g1 )] );
            const int c2 = std::min( self( self, g2 ) == kNone ? 1 << 20 : f2a[g2],
                                     self( self, complement( g2 ) ) == kNone ? 1 << 20
                                                                             : f2a[complement( g2 )] );
            if ( c1 < ( 1 << 20 ) && c2 < ( 1 << 20 ) )
              update( c1 + c2 );
          }
        }
      }
    }
    f2a[f] = best;
    return best;
  };
  for ( std::size_t f = 0; f < functions; ++f )
    solve( solve, f );
  tables.f2a = std::move( f2a );
  return tables;
}

int min_weight_basis_exhaustive( const std::vector<std::uint32_t>& generators, int n )
{
  // span of the generators
  std::vector<gf2::row_t> rows;
  for ( auto g : generators )
    rows.push_back( gf2::make_row( g, 0, n ) );
  rows = gf2::rref( rows, n );
  const int dim = static_cast<int>( rows.size() );
  if ( dim == 0 )
    return 0;

  std::vector<std::uint32_t> span;
  for ( std::uint32_t combo = 1; combo < ( std::uint32_t( 1 ) << dim ); ++combo )
  {
    std::uint32_t v = 0;
    for ( int i = 0; i < dim; ++i )
    {
      if ( ( combo >> i ) & 1u )
        v ^= gf2::row_form( rows[i], n );
    }
    span.push_back( v );
  }
  std::sort( span.begin(), span.end() );

  // all independent d-subsets of the span
  int best = -1;
  std::vector<int> pick( dim, 0 );
  auto recurse = [&]( auto&& self, int index, int start, int weight,
                      std::vector<gf2::row_t> basis ) -> void {
    if ( best >= 0 && weight >= best )
      return;
    if ( index == dim )
    {
      best = weight;
      return;
    }
    for ( int i = start; i < static_cast<int>( span.size() ); ++i )
    {
      if ( gf2::in_span( span[i], basis, n ) )
        continue;
      auto extended = gf2::rref(
          [&] {
            auto r = basis;
            r.push_back( gf2::make_row( span[i], 0, n ) );
            return r;
          }(),
          n );
      self( self, index + 1, i + 1, weight + std::popcount( span[i] ), std::move( extended ) );
    }
  };
  recurse( recurse, 0, 0, 0, {} );
  return best;
}

bool width1_obdd_exists( const TruthTable& tt )
{
  std::vector<int> order( tt.n );
  for ( int i = 0; i < tt.n; ++i )
    order[i] = i;
  std::sort( order.begin(), order.end() );
  do
  {
    const Obdd d = obdd_build( tt, order );
    std::vector<int> width( tt.n, 0 );
    for ( const auto& node : d.nodes )
      ++width[node.var];
    if ( std::all_of( width.begin(), width.end(), []( int w ) { return w <= 1; } ) )
      return true;
  } while ( std::next_permutation( order.begin(), order.end() ) );
  return false;
}

int min_obdd_size_all_orders( const TruthTable& tt )
{
  std::vector<int> order( tt.n );
  for ( int i = 0; i < tt.n; ++i )
    order[i] = i;
  int best = -1;
  do
  {
    const int size = obdd_build( tt, order ).size();
    if ( best < 0 || size < best )
      best = size;
  } while ( std::next_permutation( order.begin(), order.end() ) );
  return best;
}

} // namespace ttmin::oracles
