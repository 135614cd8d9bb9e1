#include "ttmin/mlpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace ttmin
{

namespace
{

void check_decomposable_input( const TruthTable& tt )
{
  if ( is_constant( tt ) )
    throw std::invalid_argument( "decomposition is undefined for constant functions" );
  if ( tt.n < 2 )
    throw std::invalid_argument( "decomposition needs at least two variables" );
  if ( !depends_on_all_variables( tt ) )
    throw std::invalid_argument( "decomposition input must depend on all variables" );
}

/// In-place subset transform; self-inverse over GF(2).
void subset_transform( std::vector<std::uint8_t>& v, int n )
{
  for ( int j = 0; j < n; ++j )
  {
    const std::size_t bit = std::size_t( 1 ) << j;
    for ( std::size_t mask = 0; mask < v.size(); ++mask )
    {
      if ( mask & bit )
        v[mask] ^= v[mask ^ bit];
    }
  }
}

std::vector<std::vector<int>> connected_components( int n, const std::vector<std::pair<int, int>>& edges )
{
  std::vector<int> parent( n );
  for ( int i = 0; i < n; ++i )
    parent[i] = i;
  auto find = [&]( int x ) {
    while ( parent[x] != x )
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for ( auto [a, b] : edges )
    parent[find( a )] = find( b );

  std::vector<std::vector<int>> components;
  std::vector<int> index( n, -1 );
  for ( int i = 0; i < n; ++i )
  {
    const int r = find( i );
    if ( index[r] < 0 )
    {
      index[r] = static_cast<int>( components.size() );
      components.emplace_back();
    }
    components[index[r]].push_back( i );
  }
  return components;
}

} // namespace

MultilinearPoly::MultilinearPoly( int num_vars, std::vector<std::uint8_t> cs )
    : n( num_vars ), coeffs( std::move( cs ) )
{
  if ( n < 0 || n > max_variables )
    throw std::invalid_argument( "variable count out of range" );
  if ( coeffs.size() != ( std::size_t( 1 ) << n ) )
    throw std::invalid_argument( "coefficient vector length must be 2^n" );
}

bool MultilinearPoly::is_zero() const
{
  return std::all_of( coeffs.begin(), coeffs.end(), []( std::uint8_t c ) { return c == 0; } );
}

MultilinearPoly to_multilinear( const TruthTable& tt )
{
  std::vector<std::uint8_t> cs = tt.bits;
  subset_transform( cs, tt.n );
  return MultilinearPoly( tt.n, std::move( cs ) );
}

TruthTable to_truth_table( const MultilinearPoly& p )
{
  std::vector<std::uint8_t> bits = p.coeffs;
  subset_transform( bits, p.n );
  return TruthTable( p.n, std::move( bits ) );
}

MultilinearPoly partial_derivative( const MultilinearPoly& p, int var )
{
  if ( var < 0 || var >= p.n )
    throw std::invalid_argument( "variable index out of range" );
  const std::size_t bit = std::size_t( 1 ) << var;
  std::vector<std::uint8_t> cs( p.coeffs.size(), 0 );
  for ( std::size_t s = 0; s < p.coeffs.size(); ++s )
  {
    if ( s & bit )
      cs[s ^ bit] = p.coeffs[s];
  }
  return MultilinearPoly( p.n, std::move( cs ) );
}

MultilinearPoly commutator_delta( const MultilinearPoly& p, int i, int j )
{
  if ( i == j )
    throw std::invalid_argument( "commutator requires two distinct variables" );
  if ( i < 0 || i >= p.n || j < 0 || j >= p.n )
    throw std::invalid_argument( "variable index out of range" );

  const TruthTable tt = to_truth_table( p );
  const std::size_t bi = std::size_t( 1 ) << i;
  const std::size_t bj = std::size_t( 1 ) << j;

  std::vector<std::uint8_t> bits( tt.bits.size(), 0 );
  for ( std::size_t a = 0; a < bits.size(); ++a )
  {
    const std::size_t base = a & ~bi & ~bj;
    const std::uint8_t v11 = tt.bits[base | bi | bj];
    const std::uint8_t v00 = tt.bits[base];
    const std::uint8_t v10 = tt.bits[base | bi];
    const std::uint8_t v01 = tt.bits[base | bj];
    bits[a] = std::uint8_t( ( v11 & v00 ) ^ ( v10 & v01 ) );
  }
  return to_multilinear( TruthTable( p.n, std::move( bits ) ) );
}

namespace
{

// GF(4) as bit pairs c0 + c1*w with w^2 = w + 1.
inline std::uint8_t gf4_mul( std::uint8_t a, std::uint8_t b )
{
  static constexpr std::uint8_t table[4][4] = {
      { 0, 0, 0, 0 }, { 0, 1, 2, 3 }, { 0, 2, 3, 1 }, { 0, 3, 1, 2 } };
  return table[a][b];
}

/*! \brief Values of the multilinear extension on the grid {0,1,w}^k.
 *
 * Polynomials of per-variable degree at most two are determined by their
 * values on a three-point grid per variable, so comparing products of
 * multilinear polynomials on this grid decides equality in the ring.
 */
std::vector<std::uint8_t> gf4_grid_values( const std::vector<std::uint8_t>& coeffs, int k )
{
  if ( k == 0 )
    return { coeffs[0] };
  const std::size_t half = coeffs.size() / 2;
  const auto lo = gf4_grid_values(
      std::vector<std::uint8_t>( coeffs.begin(), coeffs.begin() + half ), k - 1 );
  const auto hi = gf4_grid_values(
      std::vector<std::uint8_t>( coeffs.begin() + half, coeffs.end() ), k - 1 );
  static constexpr std::uint8_t points[3] = { 0, 1, 2 }; // 0, 1, w
  std::vector<std::uint8_t> out( lo.size() * 3 );
  for ( int d = 0; d < 3; ++d )
  {
    for ( std::size_t t = 0; t < lo.size(); ++t )
      out[d * lo.size() + t] = std::uint8_t( lo[t] ^ gf4_mul( points[d], hi[t] ) );
  }
  return out;
}

} // namespace

bool is_pair_decomposable( const MultilinearPoly& p, int i, int j )
{
  if ( i == j )
    throw std::invalid_argument( "pair test requires two distinct variables" );
  if ( i < 0 || i >= p.n || j < 0 || j >= p.n )
    throw std::invalid_argument( "variable index out of range" );
  if ( p.n > 14 )
    throw std::invalid_argument( "pair decomposability test supports n <= 14" );

  // the four restrictions as multilinear polynomials on the other variables
  const TruthTable tt = to_truth_table( p );
  const int k = p.n - 2;
  const std::size_t bi = std::size_t( 1 ) << i;
  const std::size_t bj = std::size_t( 1 ) << j;
  std::vector<std::uint8_t> r11( std::size_t( 1 ) << k ), r00 = r11, r10 = r11, r01 = r11;
  std::size_t out = 0;
  for ( std::size_t a = 0; a < tt.bits.size(); ++a )
  {
    if ( ( a & bi ) || ( a & bj ) )
      continue;
    r00[out] = tt.bits[a];
    r10[out] = tt.bits[a | bi];
    r01[out] = tt.bits[a | bj];
    r11[out] = tt.bits[a | bi | bj];
    ++out;
  }
  for ( auto* r : { &r00, &r10, &r01, &r11 } )
  {
    MultilinearPoly q = to_multilinear( TruthTable( k, std::move( *r ) ) );
    *r = std::move( q.coeffs );
  }

  // Delta is zero in the ring iff the two products agree on the grid
  const auto v11 = gf4_grid_values( r11, k );
  const auto v00 = gf4_grid_values( r00, k );
  const auto v10 = gf4_grid_values( r10, k );
  const auto v01 = gf4_grid_values( r01, k );
  for ( std::size_t t = 0; t < v11.size(); ++t )
  {
    if ( gf4_mul( v11[t], v00[t] ) != gf4_mul( v10[t], v01[t] ) )
      return false;
  }
  return true;
}

TruthTable Decomposition::recombine( int n ) const
{
  std::vector<std::uint8_t> bits( std::size_t( 1 ) << n );
  for ( std::uint32_t a = 0; a < bits.size(); ++a )
  {
    int acc = ( op == DecompOp::And ) ? 1 : ( op == DecompOp::Xor ? int( constant ) : 0 );
    for ( std::size_t f = 0; f < factors.size(); ++f )
    {
      std::uint32_t sub = 0;
      for ( std::size_t b = 0; b < blocks[f].size(); ++b )
      {
        if ( ( a >> blocks[f][b] ) & 1u )
          sub |= std::uint32_t( 1 ) << b;
      }
      const int v = factors[f].bits[sub];
      switch ( op )
      {
      case DecompOp::And:
        acc &= v;
        break;
      case DecompOp::Or:
        acc |= v;
        break;
      case DecompOp::Xor:
        acc ^= v;
        break;
      }
    }
    bits[a] = std::uint8_t( acc );
  }
  return TruthTable( n, std::move( bits ) );
}

namespace
{

/// Extracts the factor on `block` by pinning the other variables to `anchor`.
TruthTable extract_factor( const TruthTable& tt, const std::vector<int>& block, std::uint32_t anchor )
{
  CubeRestriction cube;
  cube.pattern.assign( tt.n, trit::zero );
  for ( int i = 0; i < tt.n; ++i )
    cube.pattern[i] = ( ( anchor >> i ) & 1u ) ? trit::one : trit::zero;
  for ( int v : block )
    cube.pattern[v] = trit::star;
  return restrict_table( tt, cube );
}

std::optional<Decomposition> and_decompose_impl( const TruthTable& tt )
{
  const auto p = to_multilinear( tt );

  std::vector<std::pair<int, int>> edges;
  for ( int i = 0; i < tt.n; ++i )
  {
    for ( int j = i + 1; j < tt.n; ++j )
    {
      if ( !is_pair_decomposable( p, i, j ) )
        edges.emplace_back( i, j );
    }
  }
  auto blocks = connected_components( tt.n, edges );
  if ( blocks.size() < 2 )
    return std::nullopt;

  // lexicographically smallest satisfying assignment anchors the factors
  std::uint32_t anchor = 0;
  while ( tt.bits[anchor] == 0 )
    ++anchor;

  Decomposition d;
  d.op = DecompOp::And;
  d.blocks = std::move( blocks );
  for ( const auto& block : d.blocks )
    d.factors.push_back( extract_factor( tt, block, anchor ) );
  return d;
}

} // namespace

std::optional<Decomposition> and_decompose( const TruthTable& tt )
{
  check_decomposable_input( tt );
  return and_decompose_impl( tt );
}

std::optional<Decomposition> or_decompose( const TruthTable& tt )
{
  check_decomposable_input( tt );

  TruthTable complement = tt;
  for ( auto& b : complement.bits )
    b ^= 1;

  auto d = and_decompose_impl( complement );
  if ( !d )
    return std::nullopt;
  for ( auto& f : d->factors )
  {
    for ( auto& b : f.bits )
      b ^= 1;
  }
  d->op = DecompOp::Or;
  return d;
}

std::optional<Decomposition> xor_decompose( const TruthTable& tt )
{
  check_decomposable_input( tt );
  const auto p = to_multilinear( tt );

  std::vector<std::pair<int, int>> edges;
  for ( std::size_t s = 0; s < p.coeffs.size(); ++s )
  {
    if ( !p.coeffs[s] )
      continue;
    int first = -1;
    for ( int i = 0; i < p.n; ++i )
    {
      if ( ( s >> i ) & 1u )
      {
        if ( first >= 0 )
          edges.emplace_back( first, i );
        first = i;
      }
    }
  }
  auto blocks = connected_components( tt.n, edges );
  if ( blocks.size() < 2 )
    return std::nullopt;

  Decomposition d;
  d.op = DecompOp::Xor;
  d.constant = p.coeffs[0] != 0;
  d.blocks = std::move( blocks );
  for ( const auto& block : d.blocks )
  {
    std::uint32_t block_mask = 0;
    for ( int v : block )
      block_mask |= std::uint32_t( 1 ) << v;

    // gather the monomials supported inside the block
    MultilinearPoly factor_poly( static_cast<int>( block.size() ),
                                 std::vector<std::uint8_t>( std::size_t( 1 ) << block.size(), 0 ) );
    for ( std::size_t s = 1; s < p.coeffs.size(); ++s )
    {
      if ( !p.coeffs[s] || ( s & ~std::size_t( block_mask ) ) != 0 )
        continue;
      std::uint32_t sub = 0;
      for ( std::size_t b = 0; b < block.size(); ++b )
      {
        if ( ( s >> block[b] ) & 1u )
          sub |= std::uint32_t( 1 ) << b;
      }
      factor_poly.coeffs[sub] = 1;
    }
    d.factors.push_back( to_truth_table( factor_poly ) );
  }
  return d;
}

std::string to_string( const MultilinearPoly& p )
{
  std::string s;
  for ( std::size_t mono = 0; mono < p.coeffs.size(); ++mono )
  {
    if ( !p.coeffs[mono] )
      continue;
    if ( !s.empty() )
      s += " + ";
    if ( mono == 0 )
    {
      s += "1";
      continue;
    }
    bool first = true;
    for ( int i = 0; i < p.n; ++i )
    {
      if ( ( mono >> i ) & 1u )
      {
        if ( !first )
          s += "*";
        s += "x" + std::to_string( i + 1 );
        first = false;
      }
    }
  }
  return s.empty() ? "0" : s;
}

} // namespace ttmin
