#include "ttmin/core.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ttmin
{

namespace
{

void check_var_count( int n )
{
  if ( n < 0 || n > max_variables )
    throw std::invalid_argument( "variable count out of range (0.." + std::to_string( max_variables ) + ")" );
}

} // namespace

TruthTable::TruthTable( int num_vars, std::vector<std::uint8_t> values )
    : n( num_vars ), bits( std::move( values ) )
{
  check_var_count( n );
  if ( bits.size() != ( std::size_t( 1 ) << n ) )
    throw std::invalid_argument( "truth table length must be 2^n" );
  for ( auto b : bits )
  {
    if ( b > 1 )
      throw std::invalid_argument( "truth table entries must be 0 or 1" );
  }
}

PartialTruthTable::PartialTruthTable( int num_vars, std::vector<trit> values )
    : n( num_vars ), entries( std::move( values ) )
{
  check_var_count( n );
  if ( entries.size() != ( std::size_t( 1 ) << n ) )
    throw std::invalid_argument( "partial truth table length must be 2^n" );
}

CubeRestriction CubeRestriction::from_string( std::string_view s )
{
  std::vector<trit> p;
  p.reserve( s.size() );
  for ( char c : s )
  {
    switch ( c )
    {
    case '0':
      p.push_back( trit::zero );
      break;
    case '1':
      p.push_back( trit::one );
      break;
    case '*':
    case 'x':
      p.push_back( trit::star );
      break;
    default:
      throw std::invalid_argument( "cube characters must be 0, 1 or *" );
    }
  }
  return CubeRestriction( std::move( p ) );
}

int CubeRestriction::num_free() const
{
  return static_cast<int>( std::count( pattern.begin(), pattern.end(), trit::star ) );
}

std::string CubeRestriction::to_string() const
{
  std::string s;
  for ( auto t : pattern )
    s += ( t == trit::star ) ? '*' : char( '0' + int( t ) );
  return s;
}

ParsedTable from_text( std::string_view s )
{
  if ( s.size() < 2 || !std::has_single_bit( s.size() ) )
    throw std::invalid_argument( "table length must be a power of two, >= 2" );
  const int n = std::countr_zero( s.size() );
  check_var_count( n );

  bool partial = false;
  std::vector<trit> entries;
  entries.reserve( s.size() );
  for ( char c : s )
  {
    switch ( c )
    {
    case '0':
      entries.push_back( trit::zero );
      break;
    case '1':
      entries.push_back( trit::one );
      break;
    case '*':
      entries.push_back( trit::star );
      partial = true;
      break;
    default:
      throw std::invalid_argument( std::string( "illegal table character '" ) + c + "'" );
    }
  }
  if ( partial )
    return PartialTruthTable( n, std::move( entries ) );

  std::vector<std::uint8_t> bits( entries.size() );
  std::transform( entries.begin(), entries.end(), bits.begin(), []( trit t ) { return std::uint8_t( t ); } );
  return TruthTable( n, std::move( bits ) );
}

TruthTable parse_truth_table( std::string_view s )
{
  auto parsed = from_text( s );
  if ( auto* tt = std::get_if<TruthTable>( &parsed ) )
    return std::move( *tt );
  throw std::invalid_argument( "expected a full truth table, found '*' entries" );
}

PartialTruthTable parse_partial_truth_table( std::string_view s )
{
  auto parsed = from_text( s );
  if ( auto* p = std::get_if<PartialTruthTable>( &parsed ) )
    return std::move( *p );
  auto& tt = std::get<TruthTable>( parsed );
  std::vector<trit> entries( tt.bits.size() );
  std::transform( tt.bits.begin(), tt.bits.end(), entries.begin(), []( std::uint8_t b ) { return trit( b ); } );
  return PartialTruthTable( tt.n, std::move( entries ) );
}

ParsedTable parse_table_text( std::string_view text )
{
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while ( pos <= text.size() )
  {
    auto end = text.find( '\n', pos );
    if ( end == std::string_view::npos )
      end = text.size();
    auto line = text.substr( pos, end - pos );
    while ( !line.empty() && ( line.back() == '\r' || line.back() == ' ' ) )
      line.remove_suffix( 1 );
    while ( !line.empty() && line.front() == ' ' )
      line.remove_prefix( 1 );
    if ( !line.empty() )
      lines.push_back( line );
    pos = end + 1;
  }
  if ( lines.empty() )
    throw std::invalid_argument( "empty table text" );

  std::optional<int> declared;
  std::size_t row_index = 0;
  if ( lines[0].substr( 0, 2 ) == "n=" )
  {
    declared = std::stoi( std::string( lines[0].substr( 2 ) ) );
    row_index = 1;
  }
  if ( row_index >= lines.size() )
    throw std::invalid_argument( "missing table row" );

  auto parsed = from_text( lines[row_index] );
  const int n = std::holds_alternative<TruthTable>( parsed ) ? std::get<TruthTable>( parsed ).n
                                                             : std::get<PartialTruthTable>( parsed ).n;
  if ( declared && *declared != n )
    throw std::invalid_argument( "declared n does not match table length" );
  return parsed;
}

std::uint32_t parse_assignment( std::string_view s, int n )
{
  if ( static_cast<int>( s.size() ) != n )
    throw std::invalid_argument( "assignment length does not match variable count" );
  std::uint32_t a = 0;
  for ( int i = 0; i < n; ++i )
  {
    if ( s[i] == '1' )
      a |= std::uint32_t( 1 ) << i;
    else if ( s[i] != '0' )
      throw std::invalid_argument( "assignment characters must be 0 or 1" );
  }
  return a;
}

bool evaluate( const TruthTable& tt, std::uint32_t assignment )
{
  if ( assignment >= tt.bits.size() )
    throw std::invalid_argument( "assignment out of range for the table dimension" );
  return tt.bits[assignment] != 0;
}

TruthTable restrict_table( const TruthTable& tt, const CubeRestriction& cube )
{
  if ( static_cast<int>( cube.pattern.size() ) != tt.n )
    throw std::invalid_argument( "cube length does not match variable count" );

  std::vector<int> free_vars;
  std::uint32_t fixed = 0;
  for ( int i = 0; i < tt.n; ++i )
  {
    if ( cube.pattern[i] == trit::star )
      free_vars.push_back( i );
    else if ( cube.pattern[i] == trit::one )
      fixed |= std::uint32_t( 1 ) << i;
  }

  const int k = static_cast<int>( free_vars.size() );
  std::vector<std::uint8_t> bits( std::size_t( 1 ) << k );
  for ( std::uint32_t a = 0; a < bits.size(); ++a )
  {
    std::uint32_t full = fixed;
    for ( int j = 0; j < k; ++j )
    {
      if ( ( a >> j ) & 1u )
        full |= std::uint32_t( 1 ) << free_vars[j];
    }
    bits[a] = tt.bits[full];
  }
  return TruthTable( k, std::move( bits ) );
}

bool depends_on( const TruthTable& tt, int var )
{
  if ( var < 0 || var >= tt.n )
    throw std::invalid_argument( "variable index out of range" );
  const std::uint32_t mask = std::uint32_t( 1 ) << var;
  for ( std::uint32_t a = 0; a < tt.bits.size(); ++a )
  {
    if ( ( a & mask ) == 0 && tt.bits[a] != tt.bits[a | mask] )
      return true;
  }
  return false;
}

bool depends_on_all_variables( const TruthTable& tt )
{
  for ( int i = 0; i < tt.n; ++i )
  {
    if ( !depends_on( tt, i ) )
      return false;
  }
  return true;
}

bool is_constant( const TruthTable& tt )
{
  return std::all_of( tt.bits.begin(), tt.bits.end(),
                      [&]( std::uint8_t b ) { return b == tt.bits[0]; } );
}

SupportReduction reduce_to_support( const TruthTable& tt )
{
  std::vector<int> support;
  for ( int i = 0; i < tt.n; ++i )
  {
    if ( depends_on( tt, i ) )
      support.push_back( i );
  }

  const int k = static_cast<int>( support.size() );
  std::vector<std::uint8_t> bits( std::size_t( 1 ) << k );
  for ( std::uint32_t a = 0; a < bits.size(); ++a )
  {
    std::uint32_t full = 0;
    for ( int j = 0; j < k; ++j )
    {
      if ( ( a >> j ) & 1u )
        full |= std::uint32_t( 1 ) << support[j];
    }
    bits[a] = tt.bits[full];
  }
  return SupportReduction{ TruthTable( k, std::move( bits ) ), std::move( support ) };
}

bool equal_functional( const TruthTable& a, const TruthTable& b )
{
  if ( a.n != b.n )
    throw std::invalid_argument( "cannot compare tables of different dimension" );
  return a.bits == b.bits;
}

std::int64_t count_ones( const TruthTable& tt )
{
  return std::count( tt.bits.begin(), tt.bits.end(), std::uint8_t( 1 ) );
}

bool consistent_with( const PartialTruthTable& p, const TruthTable& tt )
{
  if ( p.n != tt.n )
    throw std::invalid_argument( "dimension mismatch between partial and full table" );
  for ( std::size_t i = 0; i < p.entries.size(); ++i )
  {
    if ( p.entries[i] != trit::star && std::uint8_t( p.entries[i] ) != tt.bits[i] )
      return false;
  }
  return true;
}

std::string to_string( const TruthTable& tt )
{
  std::string s;
  s.reserve( tt.bits.size() );
  for ( auto b : tt.bits )
    s += char( '0' + b );
  return s;
}

std::string to_string( const PartialTruthTable& p )
{
  std::string s;
  s.reserve( p.entries.size() );
  for ( auto t : p.entries )
    s += ( t == trit::star ) ? '*' : char( '0' + int( t ) );
  return s;
}

} // namespace ttmin
