#include "ttmin/bp.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace ttmin
{

bool evaluate( const Obdd& d, std::uint32_t a )
{
  int edge = d.root;
  while ( !Obdd::is_terminal( edge ) )
  {
    const auto& node = d.nodes[edge - 2];
    edge = ( ( a >> node.var ) & 1u ) ? node.hi : node.lo;
  }
  return edge == Obdd::terminal_1;
}

namespace
{

std::string edge_text( int edge )
{
  if ( edge == Obdd::terminal_0 )
    return "T0";
  if ( edge == Obdd::terminal_1 )
    return "T1";
  return "n" + std::to_string( edge - 2 );
}

} // namespace

std::string to_string( const Obdd& d )
{
  std::string s = "root=" + edge_text( d.root );
  for ( std::size_t i = 0; i < d.nodes.size(); ++i )
  {
    const auto& node = d.nodes[i];
    s += "\n(" + std::to_string( i ) + ", x" + std::to_string( node.var + 1 ) + ", " +
         edge_text( node.lo ) + ", " + edge_text( node.hi ) + ")";
  }
  return s;
}

std::string to_dot( const Obdd& d )
{
  std::string s = "digraph obdd {\n  T0 [shape=box,label=\"0\"];\n  T1 [shape=box,label=\"1\"];\n";
  for ( std::size_t i = 0; i < d.nodes.size(); ++i )
  {
    const auto& node = d.nodes[i];
    s += "  n" + std::to_string( i ) + " [label=\"x" + std::to_string( node.var + 1 ) + "\"];\n";
    const auto target = []( int edge ) {
      return Obdd::is_terminal( edge ) ? ( edge ? std::string( "T1" ) : std::string( "T0" ) )
                                       : "n" + std::to_string( edge - 2 );
    };
    s += "  n" + std::to_string( i ) + " -> " + target( node.lo ) + " [style=dashed];\n";
    s += "  n" + std::to_string( i ) + " -> " + target( node.hi ) + ";\n";
  }
  s += "  root -> " + ( Obdd::is_terminal( d.root )
                            ? ( d.root ? std::string( "T1" ) : std::string( "T0" ) )
                            : "n" + std::to_string( d.root - 2 ) ) +
       ";\n  root [shape=none,label=\"\"];\n}\n";
  return s;
}

namespace
{

struct TableKey
{
  std::vector<std::uint8_t> bits;
  bool operator==( const TableKey& o ) const = default;
};

struct TableKeyHash
{
  std::size_t operator()( const TableKey& k ) const
  {
    std::size_t h = 1469598103934665603ull;
    for ( auto b : k.bits )
      h = ( h ^ b ) * 1099511628211ull;
    return h;
  }
};

struct ObddBuilder
{
  const std::vector<int>* order;
  Obdd out;
  std::vector<std::unordered_map<TableKey, int, TableKeyHash>> sub_memo; // per level
  std::unordered_map<std::uint64_t, int> unique; // (var, lo, hi) -> edge

  int build( int level, std::vector<std::uint8_t> table )
  {
    if ( table.size() == 1 )
      return table[0] ? Obdd::terminal_1 : Obdd::terminal_0;
    auto& memo = sub_memo[level];
    TableKey key{ table };
    if ( auto it = memo.find( key ); it != memo.end() )
      return it->second;

    const std::size_t half = table.size() / 2;
    // the level variable is the low bit of the remaining-variable block
    std::vector<std::uint8_t> lo_t( half ), hi_t( half );
    for ( std::size_t i = 0; i < half; ++i )
    {
      lo_t[i] = table[2 * i];
      hi_t[i] = table[2 * i + 1];
    }
    const int lo = build( level + 1, std::move( lo_t ) );
    const int hi = build( level + 1, std::move( hi_t ) );
    int edge;
    if ( lo == hi )
    {
      edge = lo;
    }
    else
    {
      const int var = ( *order )[level];
      const std::uint64_t ukey =
          ( std::uint64_t( var ) << 48 ) | ( std::uint64_t( lo ) << 24 ) | std::uint64_t( hi );
      auto it = unique.find( ukey );
      if ( it != unique.end() )
      {
        edge = it->second;
      }
      else
      {
        out.nodes.push_back( { var, lo, hi } );
        edge = static_cast<int>( out.nodes.size() ) + 1;
        unique.emplace( ukey, edge );
      }
    }
    memo.emplace( std::move( key ), edge );
    return edge;
  }
};

} // namespace

Obdd obdd_build( const TruthTable& tt, const std::vector<int>& order )
{
  if ( static_cast<int>( order.size() ) != tt.n )
    throw std::invalid_argument( "order length does not match the variable count" );
  std::vector<bool> seen( tt.n, false );
  for ( int v : order )
  {
    if ( v < 0 || v >= tt.n || seen[v] )
      throw std::invalid_argument( "order is not a permutation of the variables" );
    seen[v] = true;
  }

  // permute the table so that the order becomes (x1, x2, ...)
  std::vector<std::uint8_t> permuted( tt.bits.size() );
  for ( std::uint32_t a = 0; a < permuted.size(); ++a )
  {
    std::uint32_t original = 0;
    for ( int level = 0; level < tt.n; ++level )
    {
      if ( ( a >> level ) & 1u )
        original |= std::uint32_t( 1 ) << order[level];
    }
    permuted[a] = tt.bits[original];
  }

  ObddBuilder builder;
  builder.order = &order;
  builder.out.n = tt.n;
  builder.out.order = order;
  builder.sub_memo.resize( tt.n + 1 );
  builder.out.root = builder.build( 0, std::move( permuted ) );
  return builder.out;
}

namespace
{

/// Distinct cofactor tables over the remaining variables, exact and sorted.
using PackedTable = std::vector<std::uint8_t>;

} // namespace

OptimalOrder obdd_optimal_order( const TruthTable& tt )
{
  if ( tt.n > 16 )
    throw std::invalid_argument( "obdd_optimal_order supports n <= 16" );
  const int n = tt.n;
  if ( n == 0 )
    return { {}, 0 };

  const std::uint32_t full = ( std::uint32_t( 1 ) << n ) - 1;

  // cost[S][v]: number of distinct cofactors on the restricted set S that
  // depend on v, for v outside S
  std::vector<std::vector<int>> cost( std::size_t( 1 ) << n, std::vector<int>( n, 0 ) );

  // distinct cofactor tables per restricted set, propagated by layer
  std::vector<std::vector<PackedTable>> current( std::size_t( 1 ) << n );
  current[0] = { tt.bits };

  std::vector<std::uint32_t> layer_sets = { 0 };
  std::size_t live_entries = 1;
  for ( int filled = 0; filled < n; ++filled )
  {
    std::vector<std::uint32_t> next_sets;
    std::vector<std::vector<PackedTable>> next( std::size_t( 1 ) << n );
    for ( auto s : layer_sets )
    {
      // compute cost[s][v] from the distinct cofactors
      std::vector<int> rest;
      for ( int i = 0; i < n; ++i )
      {
        if ( !( ( s >> i ) & 1u ) )
          rest.push_back( i );
      }
      auto& tables = current[s];
      for ( const auto& table : tables )
      {
        for ( std::size_t ri = 0; ri < rest.size(); ++ri )
        {
          // does the cofactor depend on rest[ri]?
          const std::size_t bit = std::size_t( 1 ) << ri;
          bool dep = false;
          for ( std::size_t a = 0; a < table.size() && !dep; ++a )
          {
            if ( !( a & bit ) && table[a] != table[a | bit] )
              dep = true;
          }
          if ( dep )
            ++cost[s][rest[ri]];
        }
      }

      // extend to supersets
      for ( std::size_t ri = 0; ri < rest.size(); ++ri )
      {
        const std::uint32_t ns = s | ( std::uint32_t( 1 ) << rest[ri] );
        auto& bucket = next[ns];
        if ( bucket.empty() )
          next_sets.push_back( ns );
        const std::size_t bit = std::size_t( 1 ) << ri;
        for ( const auto& table : tables )
        {
          PackedTable lo( table.size() / 2 ), hi( table.size() / 2 );
          std::size_t li = 0;
          for ( std::size_t a = 0; a < table.size(); ++a )
          {
            if ( !( a & bit ) )
            {
              // compress index by dropping position ri
              lo[li] = table[a];
              hi[li] = table[a | bit];
              ++li;
            }
          }
          bucket.push_back( std::move( lo ) );
          bucket.push_back( std::move( hi ) );
        }
      }
      tables.clear();
      tables.shrink_to_fit();
    }
    // dedupe buckets
    std::sort( next_sets.begin(), next_sets.end() );
    next_sets.erase( std::unique( next_sets.begin(), next_sets.end() ), next_sets.end() );
    live_entries = 0;
    for ( auto ns : next_sets )
    {
      auto& bucket = next[ns];
      std::sort( bucket.begin(), bucket.end() );
      bucket.erase( std::unique( bucket.begin(), bucket.end() ), bucket.end() );
      live_entries += bucket.size();
      if ( live_entries > 32'000'000 )
        throw std::invalid_argument( "obdd_optimal_order exceeds the state budget" );
    }
    current = std::move( next );
    layer_sets = std::move( next_sets );
  }

  // h[S]: minimal cost of the levels below a top set S
  std::vector<int> h( std::size_t( 1 ) << n, 0 );
  std::vector<std::uint32_t> sets_by_size( std::size_t( 1 ) << n );
  for ( std::uint32_t s = 0; s <= full; ++s )
    sets_by_size[s] = s;
  std::sort( sets_by_size.begin(), sets_by_size.end(), []( std::uint32_t a, std::uint32_t b ) {
    const int pa = std::popcount( a ), pb = std::popcount( b );
    return pa != pb ? pa > pb : a < b;
  } );
  for ( auto s : sets_by_size )
  {
    if ( s == full )
      continue;
    int best = -1;
    for ( int v = 0; v < n; ++v )
    {
      if ( ( s >> v ) & 1u )
        continue;
      const int c = cost[s][v] + h[s | ( std::uint32_t( 1 ) << v )];
      if ( best < 0 || c < best )
        best = c;
    }
    h[s] = best;
  }

  // lexicographically least optimal order, walking forward
  OptimalOrder result;
  result.size = h[0];
  std::uint32_t s = 0;
  while ( s != full )
  {
    for ( int v = 0; v < n; ++v )
    {
      if ( ( s >> v ) & 1u )
        continue;
      if ( cost[s][v] + h[s | ( std::uint32_t( 1 ) << v )] == h[s] )
      {
        result.order.push_back( v );
        s |= std::uint32_t( 1 ) << v;
        break;
      }
    }
  }
  return result;
}

// --- mu branching programs -----------------------------------------------------

bool evaluate( const MuBp& p, std::uint32_t a )
{
  int edge = p.root;
  while ( edge >= 2 )
  {
    const auto& node = p.chain[edge - 2];
    edge = ( ( a >> node.var ) & 1u ) ? node.hi : node.lo;
  }
  return edge == 1;
}

std::string to_string( const MuBp& p )
{
  auto target = []( int edge ) {
    return edge < 2 ? ( edge ? std::string( "T1" ) : std::string( "T0" ) )
                    : "n" + std::to_string( edge - 2 );
  };
  std::string s = "root=" + target( p.root );
  for ( std::size_t i = 0; i < p.chain.size(); ++i )
  {
    const auto& node = p.chain[i];
    s += "\n(n" + std::to_string( i ) + ", x" + std::to_string( node.var + 1 ) + ", " +
         target( node.lo ) + ", " + target( node.hi ) + ")";
  }
  return s;
}

Rejectable<MuBp> mubp_construct( const TruthTable& tt )
{
  const auto reduced = reduce_to_support( tt );
  const int m = reduced.table.n;
  if ( m > 16 )
    throw std::invalid_argument( "mubp_construct supports at most 16 support variables" );

  MuBp p;
  p.n = tt.n;
  if ( m == 0 )
  {
    p.root = reduced.table.bits[0];
    return Rejectable<MuBp>::accept( std::move( p ) );
  }

  // width 1 in every layer is equivalent to a diagram of exactly m nodes
  const auto best = obdd_optimal_order( reduced.table );
  if ( best.size != m )
    return Rejectable<MuBp>::reject( "no mu branching program" );
  const Obdd d = obdd_build( reduced.table, best.order );

  // one node per variable; renumber top to bottom along the order
  std::vector<int> level_of_var( m, 0 );
  for ( int level = 0; level < m; ++level )
    level_of_var[best.order[level]] = level;
  std::vector<int> new_id( d.nodes.size() );
  std::vector<std::pair<int, int>> by_level; // (level, old id)
  for ( std::size_t i = 0; i < d.nodes.size(); ++i )
    by_level.emplace_back( level_of_var[d.nodes[i].var], static_cast<int>( i ) );
  std::sort( by_level.begin(), by_level.end() );
  p.chain.resize( d.nodes.size() );
  for ( std::size_t pos = 0; pos < by_level.size(); ++pos )
    new_id[by_level[pos].second] = static_cast<int>( pos );
  auto remap_edge = [&]( int edge ) {
    return edge < 2 ? edge : new_id[edge - 2] + 2;
  };
  for ( std::size_t i = 0; i < d.nodes.size(); ++i )
  {
    const auto& node = d.nodes[i];
    p.chain[new_id[i]] = { reduced.support[node.var], remap_edge( node.lo ),
                           remap_edge( node.hi ) };
  }
  p.root = remap_edge( d.root );
  return Rejectable<MuBp>::accept( std::move( p ) );
}

} // namespace ttmin
