#include "ttmin/hardness.hpp"
#include "ttmin/trees.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ttmin
{

namespace
{

void validate_set_cover( const SetCoverInstance& inst )
{
  if ( inst.m < 1 )
    throw std::invalid_argument( "universe must be nonempty" );
  for ( const auto& s : inst.sets )
  {
    if ( s.empty() )
      throw std::invalid_argument( "sets must be nonempty" );
    for ( int d : s )
    {
      if ( d < 1 || d > inst.m )
        throw std::invalid_argument( "set element outside the universe" );
    }
  }
}

std::uint32_t set_mask( const std::vector<int>& s )
{
  std::uint32_t m = 0;
  for ( int d : s )
    m |= std::uint32_t( 1 ) << ( d - 1 );
  return m;
}

} // namespace

ReducedTreeInstance reduce_sc_to_tree( const SetCoverInstance& inst )
{
  validate_set_cover( inst );
  // u > 0 smallest with u + m a power of two
  std::size_t power = 1;
  while ( power <= std::size_t( inst.m ) )
    power <<= 1;
  const std::size_t u = power - inst.m;
  const int n = std::countr_zero( power );

  std::vector<std::uint8_t> bits( power, 0 );
  for ( std::size_t i = u; i < power; ++i )
    bits[i] = 1;

  ReducedTreeInstance out;
  out.tt = TruthTable( n, std::move( bits ) );
  out.k = inst.k;
  for ( const auto& s : inst.sets )
  {
    std::vector<std::uint32_t> positions;
    for ( int d : s )
      positions.push_back( std::uint32_t( d - 1 + u ) );
    std::sort( positions.begin(), positions.end() );
    out.tests.push_back( std::move( positions ) );
  }
  return out;
}

namespace
{

void validate_3psc( const ThreePscInstance& inst )
{
  if ( inst.n < 3 )
    throw std::invalid_argument( "3-partite instance needs at least 3 elements" );
  if ( inst.n > 9 )
    throw std::invalid_argument( "3-partite reduction supports n <= 9" );
  if ( static_cast<int>( inst.block_of.size() ) != inst.n )
    throw std::invalid_argument( "block assignment length mismatch" );
  std::array<int, 3> block_sizes{ 0, 0, 0 };
  for ( int b : inst.block_of )
  {
    if ( b < 0 || b > 2 )
      throw std::invalid_argument( "block index must be 0, 1 or 2" );
    ++block_sizes[b];
  }
  for ( int c : block_sizes )
  {
    if ( c == 0 )
      throw std::invalid_argument( "all three blocks must be nonempty" );
  }

  std::vector<std::uint32_t> masks;
  std::uint32_t covered = 0;
  for ( const auto& s : inst.sets )
  {
    if ( s.size() != 3 )
      throw std::invalid_argument( "every set must have exactly 3 elements" );
    std::array<int, 3> per_block{ 0, 0, 0 };
    for ( int d : s )
    {
      if ( d < 0 || d >= inst.n )
        throw std::invalid_argument( "set element out of range" );
      ++per_block[inst.block_of[d]];
    }
    if ( per_block != std::array<int, 3>{ 1, 1, 1 } )
      throw std::invalid_argument( "every set needs one representative per block" );
    std::uint32_t mask = 0;
    for ( int d : s )
      mask |= std::uint32_t( 1 ) << d;
    if ( std::find( masks.begin(), masks.end(), mask ) != masks.end() )
      throw std::invalid_argument( "duplicate sets violate the anti-chain requirement" );
    masks.push_back( mask );
    covered |= mask;
  }
  if ( covered != ( std::uint32_t( 1 ) << inst.n ) - 1 )
    throw std::invalid_argument( "the sets must cover all elements" );
}

} // namespace

ReducedDnfInstance reduce_3psc_to_mondnf_star( const ThreePscInstance& inst )
{
  validate_3psc( inst );
  const int n = inst.n;

  // smallest even q with C(q, q/2) >= n
  int q = 2;
  auto central = []( int q ) {
    long long c = 1;
    for ( int i = 1; i <= q / 2; ++i )
      c = c * ( q / 2 + i ) / i;
    return c;
  };
  while ( central( q ) < n )
    q += 2;
  const int t = 3 * q;
  if ( t > 18 )
    throw std::invalid_argument( "reduced table dimension exceeds 18" );

  // the n lexicographically first weight-q/2 patterns of length q
  std::vector<std::uint32_t> patterns;
  for ( std::uint32_t b = 0; static_cast<int>( patterns.size() ) < n; ++b )
  {
    if ( std::popcount( b ) == q / 2 )
      patterns.push_back( b );
  }

  const std::uint32_t block_ones = ( std::uint32_t( 1 ) << q ) - 1;
  std::vector<std::uint32_t> v_vectors( n );
  for ( int i = 0; i < n; ++i )
  {
    std::uint32_t v = 0;
    for ( int block = 0; block < 3; ++block )
    {
      const std::uint32_t chunk = ( block == inst.block_of[i] ) ? patterns[i] : block_ones;
      v |= chunk << ( q * block );
    }
    v_vectors[i] = v;
  }

  std::vector<std::uint32_t> w_vectors;
  for ( const auto& s : inst.sets )
  {
    std::uint32_t w = ~std::uint32_t( 0 );
    for ( int d : s )
      w &= v_vectors[d];
    w &= ( std::uint32_t( 1 ) << t ) - 1;
    w_vectors.push_back( w );
  }

  const std::size_t table = std::size_t( 1 ) << t;
  std::vector<trit> entries( table, trit::star );

  // A: one-below neighbours of W
  for ( auto w : w_vectors )
  {
    for ( int i = 0; i < t; ++i )
    {
      if ( ( w >> i ) & 1u )
        entries[w ^ ( std::uint32_t( 1 ) << i )] = trit::zero;
    }
  }
  // V
  for ( auto v : v_vectors )
    entries[v] = trit::one;
  // B: points on a dominance path up to some v with no w leading to them.
  // Zeroing the whole shadow of V outside the up-set of W (rather than only
  // the distance-1 in-neighbours) is required for the only-if direction:
  // with distance-1 zeros alone, a term mixing the block patterns of
  // different sets can slip between the zeros and cover several v's.
  {
    std::vector<std::uint8_t> above_w( table, 0 );
    for ( auto w : w_vectors )
      above_w[w] = 1;
    for ( std::uint32_t x = 0; x < table; ++x )
    {
      if ( above_w[x] )
        continue;
      for ( int i = 0; i < t && !above_w[x]; ++i )
      {
        if ( ( ( x >> i ) & 1u ) && above_w[x ^ ( std::uint32_t( 1 ) << i )] )
          above_w[x] = 1;
      }
    }
    std::vector<std::uint8_t> below_v( table, 0 );
    for ( auto v : v_vectors )
      below_v[v] = 1;
    for ( std::uint32_t x = table; x-- > 0; )
    {
      if ( below_v[x] )
        continue;
      for ( int i = 0; i < t && !below_v[x]; ++i )
      {
        if ( !( ( x >> i ) & 1u ) && below_v[x | ( std::uint32_t( 1 ) << i )] )
          below_v[x] = 1;
      }
    }
    for ( std::uint32_t x = 0; x < table; ++x )
    {
      if ( below_v[x] && !above_w[x] )
        entries[x] = trit::zero;
    }
  }

  ReducedDnfInstance out;
  out.ptt = PartialTruthTable( t, std::move( entries ) );
  out.k = inst.k;
  out.q = q;
  out.t = t;
  out.v_vectors = std::move( v_vectors );
  out.w_vectors = std::move( w_vectors );
  return out;
}

std::optional<int> brute_set_cover( const SetCoverInstance& inst )
{
  validate_set_cover( inst );
  if ( inst.m > 20 || inst.sets.size() > 20 )
    throw std::invalid_argument( "brute_set_cover supports m <= 20 and at most 20 sets" );

  const std::uint32_t full = ( std::uint32_t( 1 ) << inst.m ) - 1;
  std::vector<std::uint32_t> masks;
  for ( const auto& s : inst.sets )
    masks.push_back( set_mask( s ) );

  std::vector<int> best( std::size_t( 1 ) << inst.m, -1 );
  best[0] = 0;
  // BFS over covered masks by number of sets used
  std::vector<std::uint32_t> frontier = { 0 };
  int used = 0;
  while ( !frontier.empty() )
  {
    if ( best[full] >= 0 )
      return best[full];
    ++used;
    std::vector<std::uint32_t> next;
    for ( auto covered : frontier )
    {
      for ( auto m : masks )
      {
        const std::uint32_t nc = covered | m;
        if ( best[nc] < 0 )
        {
          best[nc] = used;
          next.push_back( nc );
        }
      }
    }
    frontier = std::move( next );
  }
  if ( best[full] >= 0 )
    return best[full];
  return std::nullopt;
}

std::optional<std::int64_t> brute_min_mondnf_partial( const PartialTruthTable& ptt )
{
  if ( ptt.n > 18 )
    throw std::invalid_argument( "brute_min_mondnf_partial supports at most 18 variables" );

  std::vector<std::uint32_t> ones, zeros;
  for ( std::uint32_t x = 0; x < ptt.entries.size(); ++x )
  {
    if ( ptt.entries[x] == trit::one )
      ones.push_back( x );
    else if ( ptt.entries[x] == trit::zero )
      zeros.push_back( x );
  }
  if ( ones.empty() )
    return 0; // the empty DNF (constant 0) is consistent
  if ( ones.size() > 18 )
    throw std::invalid_argument( "brute_min_mondnf_partial supports at most 18 one-entries" );

  auto usable = [&]( std::uint32_t term ) {
    for ( auto z : zeros )
    {
      if ( ( term & z ) == term )
        return false;
    }
    return true;
  };

  // coverage signature over the one-entries for every usable term below one
  std::vector<std::uint32_t> signatures;
  std::size_t enumerated = 0;
  for ( auto x : ones )
  {
    // all submasks of x
    std::uint32_t sub = x;
    while ( true )
    {
      if ( ++enumerated > 16'000'000 )
        throw std::invalid_argument( "term enumeration exceeds the search budget" );
      if ( usable( sub ) )
      {
        std::uint32_t sig = 0;
        for ( std::size_t i = 0; i < ones.size(); ++i )
        {
          if ( ( sub & ones[i] ) == sub )
            sig |= std::uint32_t( 1 ) << i;
        }
        signatures.push_back( sig );
      }
      if ( sub == 0 )
        break;
      sub = ( sub - 1 ) & x;
    }
  }
  std::sort( signatures.begin(), signatures.end() );
  signatures.erase( std::unique( signatures.begin(), signatures.end() ), signatures.end() );

  // drop dominated signatures
  std::vector<std::uint32_t> maximal;
  for ( auto s : signatures )
  {
    bool dominated = false;
    for ( auto o : signatures )
    {
      if ( o != s && ( s & o ) == s )
      {
        dominated = true;
        break;
      }
    }
    if ( !dominated )
      maximal.push_back( s );
  }

  const std::uint32_t full = ( ones.size() == 32 ) ? ~std::uint32_t( 0 )
                                                   : ( std::uint32_t( 1 ) << ones.size() ) - 1;
  // every one-entry needs at least one usable term
  {
    std::uint32_t coverable = 0;
    for ( auto s : maximal )
      coverable |= s;
    if ( coverable != full )
      return std::nullopt;
  }

  // subset DP for the exact minimum cover
  std::vector<std::int32_t> dp( std::size_t( full ) + 1, -1 );
  dp[0] = 0;
  for ( std::uint32_t mask = 0; mask < full; ++mask )
  {
    if ( dp[mask] < 0 )
      continue;
    const int lowest = std::countr_zero( ~mask & full );
    for ( auto s : maximal )
    {
      if ( !( ( s >> lowest ) & 1u ) )
        continue;
      const std::uint32_t nm = mask | s;
      if ( dp[nm] < 0 || dp[nm] > dp[mask] + 1 )
        dp[nm] = dp[mask] + 1;
    }
  }
  return dp[full];
}

std::optional<std::string> check_tree_reduction( const SetCoverInstance& inst,
                                                 const ReductionCheckOptions& opts )
{
  auto reduced = reduce_sc_to_tree( inst );
  if ( opts.shift_delta != 0 )
  {
    for ( auto& test : reduced.tests )
    {
      for ( auto& pos : test )
      {
        const std::int64_t moved = std::int64_t( pos ) + opts.shift_delta;
        pos = std::uint32_t( ( moved % std::int64_t( reduced.tt.bits.size() ) +
                               std::int64_t( reduced.tt.bits.size() ) ) %
                             std::int64_t( reduced.tt.bits.size() ) );
      }
    }
  }

  const auto cover = brute_set_cover( inst );
  for ( int k = 0; k <= static_cast<int>( inst.sets.size() ); ++k )
  {
    const bool cover_k = cover.has_value() && *cover <= k;
    const bool tree_k = decide_test_family_tree( reduced.tt, reduced.tests, k );
    if ( cover_k != tree_k )
    {
      std::ostringstream oss;
      oss << "mismatch at k=" << k << " for instance " << to_string( inst )
          << " (cover " << ( cover ? std::to_string( *cover ) : std::string( "none" ) )
          << ", tree " << ( tree_k ? "accepts" : "rejects" ) << ")";
      return oss.str();
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_dnf_reduction( const ThreePscInstance& inst )
{
  const auto reduced = reduce_3psc_to_mondnf_star( inst );

  SetCoverInstance sc;
  sc.m = inst.n;
  sc.k = inst.k;
  for ( const auto& s : inst.sets )
  {
    std::vector<int> up;
    for ( int d : s )
      up.push_back( d + 1 );
    sc.sets.push_back( std::move( up ) );
  }
  const auto cover = brute_set_cover( sc );
  const auto dnf = brute_min_mondnf_partial( reduced.ptt );

  if ( !cover.has_value() )
    return "3-partite instance without a cover slipped validation";
  if ( !dnf.has_value() || *dnf != *cover )
  {
    std::ostringstream oss;
    oss << "min cover " << *cover << " vs min monotone DNF "
        << ( dnf ? std::to_string( *dnf ) : std::string( "none" ) ) << " (n=" << inst.n << ")";
    return oss.str();
  }
  return std::nullopt;
}

ReductionReport verify_tree_reduction_batch( std::uint64_t seed, int instances )
{
  ReductionReport report;
  std::mt19937_64 rng( seed );
  for ( int i = 0; i < instances; ++i )
  {
    SetCoverInstance inst;
    inst.m = 1 + int( rng() % 8 );
    const int sets = 1 + int( rng() % 6 );
    for ( int s = 0; s < sets; ++s )
    {
      std::vector<int> set;
      for ( int d = 1; d <= inst.m; ++d )
      {
        if ( rng() % 2 )
          set.push_back( d );
      }
      if ( set.empty() )
        set.push_back( 1 + int( rng() % inst.m ) );
      inst.sets.push_back( std::move( set ) );
    }
    inst.k = int( rng() % ( sets + 1 ) );

    ++report.instances;
    report.checks += sets + 1;
    if ( auto failure = check_tree_reduction( inst ) )
      report.failures.push_back( *failure );
  }
  return report;
}

std::vector<ThreePscInstance> enumerate_3psc_instances( int n )
{
  std::vector<ThreePscInstance> out;
  if ( n < 3 )
    return out;

  // canonical block assignments: block ids appear in first-use order
  std::vector<int> block_of( n, 0 );
  auto emit_families = [&]( const std::vector<int>& blocks ) {
    std::array<std::vector<int>, 3> members;
    for ( int i = 0; i < n; ++i )
      members[blocks[i]].push_back( i );
    if ( members[0].empty() || members[1].empty() || members[2].empty() )
      return;

    std::vector<std::vector<int>> possible;
    for ( int a : members[0] )
      for ( int b : members[1] )
        for ( int c : members[2] )
          possible.push_back( { a, b, c } );

    const std::size_t count = possible.size();
    if ( count > 20 )
      return; // out of enumeration range
    const std::uint32_t all_mask = ( std::uint32_t( 1 ) << n ) - 1;
    for ( std::uint32_t family = 1; family < ( std::uint32_t( 1 ) << count ); ++family )
    {
      std::uint32_t covered = 0;
      for ( std::size_t s = 0; s < count; ++s )
      {
        if ( ( family >> s ) & 1u )
        {
          for ( int d : possible[s] )
            covered |= std::uint32_t( 1 ) << d;
        }
      }
      if ( covered != all_mask )
        continue;
      ThreePscInstance inst;
      inst.n = n;
      inst.block_of = blocks;
      for ( std::size_t s = 0; s < count; ++s )
      {
        if ( ( family >> s ) & 1u )
          inst.sets.push_back( possible[s] );
      }
      inst.k = static_cast<int>( inst.sets.size() );
      out.push_back( std::move( inst ) );
    }
  };

  // enumerate canonical surjections onto {0,1,2}
  std::vector<int> assignment( n, 0 );
  while ( true )
  {
    // canonical: first element in block 0; first non-0 block is 1
    bool canonical = assignment[0] == 0;
    int max_seen = 0;
    for ( int i = 1; i < n && canonical; ++i )
    {
      if ( assignment[i] > max_seen + 1 )
        canonical = false;
      max_seen = std::max( max_seen, assignment[i] );
    }
    if ( canonical )
      emit_families( assignment );

    int i = 0;
    for ( ; i < n; ++i )
    {
      if ( assignment[i] < 2 )
      {
        ++assignment[i];
        break;
      }
      assignment[i] = 0;
    }
    if ( i == n )
      break;
  }
  return out;
}

ReductionReport verify_dnf_reduction_all( int max_n )
{
  ReductionReport report;
  for ( int n = 3; n <= max_n; ++n )
  {
    for ( const auto& inst : enumerate_3psc_instances( n ) )
    {
      ++report.instances;
      ++report.checks;
      if ( auto failure = check_dnf_reduction( inst ) )
        report.failures.push_back( *failure );
    }
  }
  return report;
}

std::string to_string( const SetCoverInstance& inst )
{
  std::ostringstream oss;
  oss << inst.m << "\n" << inst.k << "\n";
  bool first_set = true;
  for ( const auto& s : inst.sets )
  {
    if ( !first_set )
      oss << ";";
    first_set = false;
    bool first = true;
    for ( int d : s )
    {
      if ( !first )
        oss << ",";
      first = false;
      oss << d;
    }
  }
  return oss.str();
}

SetCoverInstance parse_set_cover( const std::string& text )
{
  std::istringstream iss( text );
  SetCoverInstance inst;
  std::string line;
  if ( !std::getline( iss, line ) )
    throw std::invalid_argument( "missing universe size" );
  inst.m = std::stoi( line );
  if ( !std::getline( iss, line ) )
    throw std::invalid_argument( "missing target size" );
  inst.k = std::stoi( line );
  if ( std::getline( iss, line ) && !line.empty() )
  {
    std::istringstream sets( line );
    std::string chunk;
    while ( std::getline( sets, chunk, ';' ) )
    {
      std::vector<int> set;
      std::istringstream elems( chunk );
      std::string e;
      while ( std::getline( elems, e, ',' ) )
      {
        if ( !e.empty() )
          set.push_back( std::stoi( e ) );
      }
      if ( !set.empty() )
        inst.sets.push_back( std::move( set ) );
    }
  }
  validate_set_cover( inst );
  return inst;
}

} // namespace ttmin
