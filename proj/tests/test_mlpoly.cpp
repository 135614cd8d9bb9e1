#include <doctest.h>

#include <stdexcept>

#include "ttmin/mlpoly.hpp"

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

MultilinearPoly poly_of( int n, std::initializer_list<std::uint32_t> monomials )
{
  std::vector<std::uint8_t> cs( std::size_t( 1 ) << n, 0 );
  for ( auto m : monomials )
    cs[m] = 1;
  return MultilinearPoly( n, std::move( cs ) );
}

} // namespace

TEST_CASE( "multilinear transform matches hand expansions" )
{
  CHECK( to_multilinear( parse_truth_table( "0001" ) ) == poly_of( 2, { 0b11 } ) );
  CHECK( to_string( to_multilinear( parse_truth_table( "0001" ) ) ) == "x1*x2" );

  // OR2 = x1 + x2 + x1 x2, verified by evaluating on all 4 points
  const auto or_poly = to_multilinear( parse_truth_table( "0111" ) );
  CHECK( or_poly == poly_of( 2, { 0b01, 0b10, 0b11 } ) );
  const auto ones = TruthTable( 0, { 1 } );
  CHECK( to_multilinear( ones ).coeffs == std::vector<std::uint8_t>{ 1 } );
}

TEST_CASE( "transform round trip" )
{
  for ( int n = 1; n <= 4; ++n )
  {
    for ( std::uint64_t f = 0; f < ( std::uint64_t( 1 ) << ( 1 << n ) ); ++f )
    {
      const auto tt = table_of( n, f );
      CHECK( equal_functional( to_truth_table( to_multilinear( tt ) ), tt ) );
    }
  }
  std::mt19937_64 rng( 11 );
  for ( int trial = 0; trial < 1000; ++trial )
  {
    std::vector<std::uint8_t> bits( 1u << 10 );
    for ( auto& b : bits )
      b = std::uint8_t( rng() & 1 );
    const TruthTable tt( 10, std::move( bits ) );
    CHECK( equal_functional( to_truth_table( to_multilinear( tt ) ), tt ) );
  }
  const MultilinearPoly zero( 3, std::vector<std::uint8_t>( 8, 0 ) );
  CHECK( to_string( to_truth_table( zero ) ) == "00000000" );
}

TEST_CASE( "partial derivatives" )
{
  CHECK( partial_derivative( poly_of( 2, { 0b11 } ), 0 ) == poly_of( 2, { 0b10 } ) );
  CHECK( partial_derivative( poly_of( 2, { 0b01, 0b10 } ), 0 ) == poly_of( 2, { 0 } ) );
  // d(x1 x2 + x2 x3)/dx2 = x1 + x3
  CHECK( partial_derivative( poly_of( 3, { 0b011, 0b110 } ), 1 ) ==
         poly_of( 3, { 0b001, 0b100 } ) );
  CHECK_THROWS_AS( partial_derivative( poly_of( 2, { 0b01 } ), 2 ), std::invalid_argument );
}

TEST_CASE( "commutator examples" )
{
  CHECK( commutator_delta( poly_of( 2, { 0b11 } ), 0, 1 ).is_zero() );
  CHECK( commutator_delta( poly_of( 2, { 0b01, 0b10 } ), 0, 1 ) == poly_of( 2, { 0 } ) );
  CHECK( commutator_delta( poly_of( 2, { 0b01, 0b10, 0b11 } ), 0, 1 ) == poly_of( 2, { 0 } ) );
  CHECK_THROWS_AS( commutator_delta( poly_of( 2, { 0b01 } ), 1, 1 ), std::invalid_argument );

  CHECK( is_pair_decomposable( poly_of( 2, { 0b11 } ), 0, 1 ) );
  CHECK_FALSE( is_pair_decomposable( poly_of( 2, { 0b01, 0b10 } ), 0, 1 ) );
  // x1 x3 + x2 is irreducible and depends on both x1 and x2
  CHECK_FALSE( is_pair_decomposable( poly_of( 3, { 0b101, 0b010 } ), 0, 1 ) );
  // the commutator may reduce to zero pointwise while the ring product
  // does not: ones exactly at 110 and 001
  {
    const auto tricky = to_multilinear( parse_truth_table( "00011000" ) );
    for ( int i = 0; i < 3; ++i )
      for ( int j = i + 1; j < 3; ++j )
        CHECK_FALSE( is_pair_decomposable( tricky, i, j ) );
    CHECK( commutator_delta( tricky, 0, 1 ).is_zero() ); // reduced form only
  }
}

TEST_CASE( "non-vanishing second derivative for decomposable pairs" )
{
  for ( int n = 2; n <= 4; ++n )
  {
    for ( std::uint64_t f = 0; f < ( std::uint64_t( 1 ) << ( 1 << n ) ); ++f )
    {
      const auto tt = table_of( n, f );
      if ( !depends_on_all_variables( tt ) )
        continue;
      const auto q = to_multilinear( tt );
      for ( int i = 0; i < n; ++i )
      {
        for ( int j = i + 1; j < n; ++j )
        {
          if ( is_pair_decomposable( q, i, j ) )
            CHECK_FALSE( partial_derivative( partial_derivative( q, i ), j ).is_zero() );
        }
      }
    }
  }
}

TEST_CASE( "and decomposition" )
{
  const auto and2 = and_decompose( parse_truth_table( "0001" ) );
  REQUIRE( and2.has_value() );
  CHECK( and2->blocks == std::vector<std::vector<int>>{ { 0 }, { 1 } } );
  CHECK( to_string( and2->factors[0] ) == "01" );
  CHECK( to_string( and2->factors[1] ) == "01" );

  // (x1 | x2) & x3
  const auto layered = and_decompose( parse_truth_table( "00000111" ) );
  REQUIRE( layered.has_value() );
  CHECK( layered->blocks == std::vector<std::vector<int>>{ { 0, 1 }, { 2 } } );
  CHECK( to_string( layered->factors[0] ) == "0111" );

  CHECK_FALSE( and_decompose( parse_truth_table( "0111" ) ).has_value() );
  CHECK_THROWS_AS( and_decompose( parse_truth_table( "1111" ) ), std::invalid_argument );
  CHECK_THROWS_AS( and_decompose( parse_truth_table( "0101" ) ), std::invalid_argument );
}

TEST_CASE( "or decomposition" )
{
  const auto or2 = or_decompose( parse_truth_table( "0111" ) );
  REQUIRE( or2.has_value() );
  CHECK( or2->blocks == std::vector<std::vector<int>>{ { 0 }, { 1 } } );

  CHECK_FALSE( or_decompose( parse_truth_table( "0001" ) ).has_value() );

  // (x1 & x2) | x3
  const auto layered = or_decompose( parse_truth_table( "00011111" ) );
  REQUIRE( layered.has_value() );
  CHECK( layered->blocks == std::vector<std::vector<int>>{ { 0, 1 }, { 2 } } );
}

TEST_CASE( "xor decomposition" )
{
  const auto parity3 = xor_decompose( parse_truth_table( "01101001" ) );
  REQUIRE( parity3.has_value() );
  CHECK( parity3->blocks.size() == 3 );
  CHECK_FALSE( parity3->constant );

  // x1 x2 + x3 + 1
  const auto shifted = xor_decompose( parse_truth_table( "11100001" ) );
  REQUIRE( shifted.has_value() );
  CHECK( shifted->blocks == std::vector<std::vector<int>>{ { 0, 1 }, { 2 } } );
  CHECK( shifted->constant );
  // canonical factors have zero constant term
  for ( const auto& factor : shifted->factors )
    CHECK( to_multilinear( factor ).coeffs[0] == 0 );

  CHECK_FALSE( xor_decompose( parse_truth_table( "00010111" ) ).has_value() );
}

TEST_CASE( "decompositions recombine and the trichotomy holds" )
{
  for ( int n = 2; n <= 4; ++n )
  {
    for ( std::uint64_t f = 0; f < ( std::uint64_t( 1 ) << ( 1 << n ) ); ++f )
    {
      const auto tt = table_of( n, f );
      if ( is_constant( tt ) || !depends_on_all_variables( tt ) )
        continue;
      int fired = 0;
      for ( auto d : { and_decompose( tt ), or_decompose( tt ), xor_decompose( tt ) } )
      {
        if ( !d )
          continue;
        ++fired;
        CHECK( d->blocks.size() >= 2 );
        CHECK( equal_functional( d->recombine( n ), tt ) );
      }
      CHECK( fired <= 1 );
    }
  }
}

TEST_CASE( "commutator shift identity on random polynomials" )
{
  std::mt19937_64 rng( 23 );
  for ( int trial = 0; trial < 200; ++trial )
  {
    const int n = 2 + int( rng() % 7 );
    std::vector<std::uint8_t> cs( std::size_t( 1 ) << n );
    for ( auto& c : cs )
      c = std::uint8_t( rng() & 1 );
    const MultilinearPoly q( n, std::move( cs ) );
    const int i = int( rng() % n );
    int j = int( rng() % n );
    while ( j == i )
      j = int( rng() % n );

    const auto dd = partial_derivative( partial_derivative( q, i ), j );
    CHECK( dd == partial_derivative( partial_derivative( q, j ), i ) );

    MultilinearPoly shifted = q;
    shifted.coeffs[0] ^= 1;
    auto expected = commutator_delta( q, i, j );
    for ( std::size_t s = 0; s < expected.coeffs.size(); ++s )
      expected.coeffs[s] ^= dd.coeffs[s];
    CHECK( commutator_delta( shifted, i, j ) == expected );
  }
}
