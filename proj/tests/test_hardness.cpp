#include <doctest.h>

#include <stdexcept>

#include "ttmin/hardness.hpp"
#include "ttmin/trees.hpp"

#include <algorithm>
#include <bit>
#include <random>

using namespace ttmin;

TEST_CASE( "set cover to tree reduction" )
{
  SetCoverInstance inst;
  inst.m = 2;
  inst.sets = { { 1, 2 } };
  inst.k = 1;
  const auto reduced = reduce_sc_to_tree( inst );
  CHECK( to_string( reduced.tt ) == "0011" );
  CHECK( reduced.tests == std::vector<std::vector<std::uint32_t>>{ { 2, 3 } } );
  CHECK( reduced.k == 1 );
  CHECK( decide_test_family_tree( reduced.tt, reduced.tests, reduced.k ) );

  SetCoverInstance single;
  single.m = 1;
  single.sets = { { 1 } };
  single.k = 1;
  const auto tiny = reduce_sc_to_tree( single );
  CHECK( to_string( tiny.tt ) == "01" );
  CHECK( tiny.tests == std::vector<std::vector<std::uint32_t>>{ { 1 } } );

  SetCoverInstance wide;
  wide.m = 4;
  wide.sets = { { 1, 2 }, { 3, 4 } };
  wide.k = 2;
  const auto three = reduce_sc_to_tree( wide );
  CHECK( to_string( three.tt ) == "00001111" );
  CHECK( three.tt.n == 3 );

  SetCoverInstance bad;
  bad.m = 2;
  bad.sets = { {} };
  CHECK_THROWS_AS( reduce_sc_to_tree( bad ), std::invalid_argument );
}

TEST_CASE( "brute set cover" )
{
  SetCoverInstance inst;
  inst.m = 3;
  inst.sets = { { 1, 2 }, { 3 }, { 1, 3 } };
  CHECK( brute_set_cover( inst ) == 2 );

  SetCoverInstance uncoverable;
  uncoverable.m = 2;
  uncoverable.sets = { { 1 } };
  CHECK_FALSE( brute_set_cover( uncoverable ).has_value() );

  SetCoverInstance trivial;
  trivial.m = 1;
  trivial.sets = { { 1 } };
  CHECK( brute_set_cover( trivial ) == 1 );
}

TEST_CASE( "3psc reduction construction" )
{
  ThreePscInstance inst;
  inst.n = 3;
  inst.block_of = { 0, 1, 2 };
  inst.sets = { { 0, 1, 2 } };
  inst.k = 1;

  const auto reduced = reduce_3psc_to_mondnf_star( inst );
  CHECK( reduced.q == 4 );
  CHECK( reduced.t == 12 );
  CHECK( reduced.v_vectors.size() == 3 );
  CHECK( reduced.w_vectors.size() == 1 );
  for ( auto v : reduced.v_vectors )
    CHECK( std::popcount( v ) == 2 * reduced.q + reduced.q / 2 );
  for ( auto w : reduced.w_vectors )
    CHECK( std::popcount( w ) == 3 * reduced.q / 2 );

  // the lemma's condition (1): alpha in S iff w <= v_alpha
  for ( std::size_t s = 0; s < inst.sets.size(); ++s )
  {
    for ( int alpha = 0; alpha < inst.n; ++alpha )
    {
      const bool member = std::find( inst.sets[s].begin(), inst.sets[s].end(), alpha ) !=
                          inst.sets[s].end();
      const bool below = ( reduced.w_vectors[s] & reduced.v_vectors[alpha] ) ==
                         reduced.w_vectors[s];
      CHECK( member == below );
    }
  }

  // answer preserving: the only set covers everything
  CHECK( brute_min_mondnf_partial( reduced.ptt ) == 1 );

  ThreePscInstance malformed = inst;
  malformed.sets = { { 0, 1, 1 } };
  CHECK_THROWS_AS( reduce_3psc_to_mondnf_star( malformed ), std::invalid_argument );
}

TEST_CASE( "brute monotone DNF for partial tables" )
{
  // a full table (Maj3) matches the monotone minimizer's term count
  const auto maj3 = parse_partial_truth_table( "00010111" );
  CHECK( brute_min_mondnf_partial( maj3 ) == 3 );

  const auto blank = parse_partial_truth_table( "****" );
  CHECK( brute_min_mondnf_partial( blank ) == 0 );

  // a 1 below a 0 is unsatisfiable
  const auto contradictory = parse_partial_truth_table( "01*0" );
  CHECK_FALSE( brute_min_mondnf_partial( contradictory ).has_value() );
}

TEST_CASE( "reduction verification harness" )
{
  SetCoverInstance inst;
  inst.m = 2;
  inst.sets = { { 1, 2 } };
  inst.k = 1;
  CHECK_FALSE( check_tree_reduction( inst ).has_value() );

  // negative control: a corrupted shift breaks equivalence on some instance
  int broken = 0;
  const auto batch_seed = 0xfeedULL;
  std::mt19937_64 rng( batch_seed );
  for ( int trial = 0; trial < 20; ++trial )
  {
    SetCoverInstance random_inst;
    random_inst.m = 1 + int( rng() % 6 );
    const int sets = 1 + int( rng() % 4 );
    for ( int s = 0; s < sets; ++s )
    {
      std::vector<int> set;
      for ( int d = 1; d <= random_inst.m; ++d )
      {
        if ( rng() % 2 )
          set.push_back( d );
      }
      if ( set.empty() )
        set.push_back( 1 );
      random_inst.sets.push_back( std::move( set ) );
    }
    ReductionCheckOptions corrupt;
    corrupt.shift_delta = 1;
    if ( check_tree_reduction( random_inst, corrupt ).has_value() )
      ++broken;
  }
  CHECK( broken > 0 );

  const auto tree_report = verify_tree_reduction_batch( 42, 10 );
  CHECK( tree_report.passed() );
  CHECK( tree_report.instances == 10 );

  const auto dnf_report = verify_dnf_reduction_all( 4 );
  CHECK( dnf_report.passed() );
  CHECK( dnf_report.instances > 0 );
}

TEST_CASE( "3psc enumeration is canonical and valid" )
{
  const auto instances = enumerate_3psc_instances( 4 );
  CHECK( !instances.empty() );
  for ( const auto& inst : instances )
  {
    CHECK( inst.n == 4 );
    CHECK_NOTHROW( reduce_3psc_to_mondnf_star( inst ) );
  }
}

TEST_CASE( "set cover text round trip" )
{
  SetCoverInstance inst;
  inst.m = 3;
  inst.k = 2;
  inst.sets = { { 1, 2 }, { 3 } };
  const auto text = to_string( inst );
  const auto parsed = parse_set_cover( text );
  CHECK( parsed.m == inst.m );
  CHECK( parsed.k == inst.k );
  CHECK( parsed.sets == inst.sets );
}

TEST_CASE( "partial-table brute force agrees with the monotone minimizer" )
{
  std::mt19937_64 rng( 13 );
  auto check_table = [&]( const TruthTable& tt ) {
    const auto dnf = minimize_monotone_dnf( tt );
    const auto brute = brute_min_mondnf_partial( parse_partial_truth_table( to_string( tt ) ) );
    if ( dnf.ok() )
    {
      REQUIRE( brute.has_value() );
      CHECK( *brute == dnf->size );
    }
  };
  for ( std::uint64_t f = 0; f < 256; ++f )
  {
    std::vector<std::uint8_t> bits( 8 );
    for ( std::size_t i = 0; i < 8; ++i )
      bits[i] = std::uint8_t( ( f >> i ) & 1 );
    check_table( TruthTable( 3, std::move( bits ) ) );
  }
  for ( int trial = 0; trial < 50; ++trial )
  {
    std::vector<std::uint8_t> bits( 16 );
    for ( auto& b : bits )
      b = std::uint8_t( rng() & 1 );
    check_table( TruthTable( 4, std::move( bits ) ) );
  }
}
