#include <doctest.h>

#include <stdexcept>

#include "ttmin/core.hpp"

#include <random>

using namespace ttmin;

namespace
{

TruthTable table_of( int n, std::uint64_t bits )
{
  std::vector<std::uint8_t> v( std::size_t( 1 ) << n );
  for ( std::size_t i = 0; i < v.size(); ++i )
    v[i] = std::uint8_t( ( bits >> i ) & 1 );
  return TruthTable( n, std::move( v ) );
}

} // namespace

TEST_CASE( "from_text parses full and partial tables" )
{
  auto and2 = std::get<TruthTable>( from_text( "0001" ) );
  CHECK( and2.n == 2 );
  CHECK( to_string( and2 ) == "0001" );

  auto ident = std::get<TruthTable>( from_text( "01" ) );
  CHECK( ident.n == 1 );
  CHECK( evaluate( ident, 1 ) );

  auto partial = std::get<PartialTruthTable>( from_text( "0*11" ) );
  CHECK( partial.n == 2 );
  CHECK( partial.entries[1] == trit::star );

  CHECK_THROWS_AS( from_text( "010" ), std::invalid_argument );
  CHECK_THROWS_AS( from_text( "0a01" ), std::invalid_argument );
  CHECK_THROWS_AS( from_text( "1" ), std::invalid_argument );
}

TEST_CASE( "table file format with optional header" )
{
  auto parsed = parse_table_text( "n=2\n0111\n" );
  CHECK( to_string( std::get<TruthTable>( parsed ) ) == "0111" );
  CHECK_THROWS_AS( parse_table_text( "n=3\n0111\n" ), std::invalid_argument );
  auto headerless = parse_table_text( "0*11" );
  CHECK( std::holds_alternative<PartialTruthTable>( headerless ) );
}

TEST_CASE( "evaluate follows the index convention" )
{
  const auto and2 = parse_truth_table( "0001" );
  CHECK( evaluate( and2, parse_assignment( "11", 2 ) ) );
  CHECK_FALSE( evaluate( and2, parse_assignment( "10", 2 ) ) );

  const auto parity3 = parse_truth_table( "01101001" );
  CHECK_FALSE( evaluate( parity3, parse_assignment( "101", 3 ) ) );
  CHECK( evaluate( parity3, parse_assignment( "100", 3 ) ) );

  CHECK_THROWS_AS( parse_assignment( "10", 3 ), std::invalid_argument );
}

TEST_CASE( "index convention round trip" )
{
  const std::string row = "0110100110010110";
  const auto tt = parse_truth_table( row );
  for ( std::uint32_t a = 0; a < tt.bits.size(); ++a )
    CHECK( evaluate( tt, a ) == ( row[a] == '1' ) );
}

TEST_CASE( "restrict drops fixed variables and keeps order" )
{
  const auto and2 = parse_truth_table( "0001" );
  CHECK( to_string( restrict_table( and2, CubeRestriction::from_string( "1*" ) ) ) == "01" );
  CHECK( to_string( restrict_table( and2, CubeRestriction::from_string( "0*" ) ) ) == "00" );

  const auto maj3 = parse_truth_table( "00010111" );
  CHECK( to_string( restrict_table( maj3, CubeRestriction::from_string( "**1" ) ) ) == "0111" );

  CHECK_THROWS_AS( restrict_table( and2, CubeRestriction::from_string( "1**" ) ),
                   std::invalid_argument );
}

TEST_CASE( "restriction composes" )
{
  // restricting by c1 then c2 equals restricting by the composed cube,
  // exhaustively over all cube pairs for sample tables on up to 4 variables
  auto all_cubes = []( int k ) {
    std::vector<std::vector<trit>> cubes;
    std::vector<trit> cube( k, trit::zero );
    while ( true )
    {
      cubes.push_back( cube );
      int i = 0;
      for ( ; i < k; ++i )
      {
        if ( cube[i] != trit::star )
        {
          cube[i] = trit( int( cube[i] ) + 1 );
          break;
        }
        cube[i] = trit::zero;
      }
      if ( i == k )
        break;
    }
    return cubes;
  };

  std::mt19937_64 rng( 7 );
  for ( int n = 1; n <= 4; ++n )
  {
    for ( int sample = 0; sample < 3; ++sample )
    {
      const auto tt = table_of( n, rng() );
      for ( const auto& c1 : all_cubes( n ) )
      {
        const auto first = restrict_table( tt, CubeRestriction{ c1 } );
        for ( const auto& c2 : all_cubes( first.n ) )
        {
          const auto second = restrict_table( first, CubeRestriction{ c2 } );
          std::vector<trit> composed = c1;
          int free_index = 0;
          for ( auto& t : composed )
          {
            if ( t == trit::star )
              t = c2[free_index++];
          }
          CHECK( equal_functional( second, restrict_table( tt, CubeRestriction{ composed } ) ) );
        }
      }
    }
  }
}

TEST_CASE( "reduce_to_support drops dummies" )
{
  // x1 as a 2-variable table: depends only on x1
  const auto padded = parse_truth_table( "0101" );
  const auto reduced = reduce_to_support( padded );
  CHECK( to_string( reduced.table ) == "01" );
  CHECK( reduced.support == std::vector<int>{ 0 } );

  const auto and2 = parse_truth_table( "0001" );
  const auto full = reduce_to_support( and2 );
  CHECK( equal_functional( full.table, and2 ) );
  CHECK( full.support == std::vector<int>{ 0, 1 } );

  const auto ones = parse_truth_table( "1111" );
  const auto constant = reduce_to_support( ones );
  CHECK( constant.table.n == 0 );
  CHECK( constant.support.empty() );
  CHECK( constant.table.bits == std::vector<std::uint8_t>{ 1 } );
}

TEST_CASE( "reduce_to_support is idempotent and exact" )
{
  for ( int n = 1; n <= 4; ++n )
  {
    for ( std::uint64_t f = 0; f < ( std::uint64_t( 1 ) << ( 1 << n ) ); ++f )
    {
      const auto tt = table_of( n, f );
      const auto reduced = reduce_to_support( tt );
      CHECK( depends_on_all_variables( reduced.table ) );
      const auto again = reduce_to_support( reduced.table );
      CHECK( equal_functional( again.table, reduced.table ) );
      // functional equality up to dropped dummies
      for ( std::uint32_t a = 0; a < tt.bits.size(); ++a )
      {
        std::uint32_t sub = 0;
        for ( std::size_t j = 0; j < reduced.support.size(); ++j )
        {
          if ( ( a >> reduced.support[j] ) & 1u )
            sub |= std::uint32_t( 1 ) << j;
        }
        CHECK( tt.bits[a] == reduced.table.bits[sub] );
      }
    }
  }
}

TEST_CASE( "equality, counting, consistency" )
{
  const auto and2 = parse_truth_table( "0001" );
  const auto or2 = parse_truth_table( "0111" );
  CHECK( equal_functional( and2, parse_truth_table( "0001" ) ) );
  CHECK_FALSE( equal_functional( and2, or2 ) );
  CHECK_THROWS_AS( equal_functional( and2, parse_truth_table( "01" ) ), std::invalid_argument );

  CHECK( count_ones( and2 ) == 1 );
  CHECK( count_ones( or2 ) == 3 );
  CHECK( count_ones( parse_truth_table( "01101001" ) ) == 4 );

  const auto partial = parse_partial_truth_table( "0*" );
  CHECK( consistent_with( partial, parse_truth_table( "01" ) ) );
  CHECK_FALSE( consistent_with( partial, parse_truth_table( "11" ) ) );
  CHECK_THROWS_AS( consistent_with( partial, parse_truth_table( "0001" ) ),
                   std::invalid_argument );
}
