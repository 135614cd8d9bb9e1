#include "ttmin/trees.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>

namespace ttmin
{

namespace
{

std::string form_bits( std::uint32_t u, int n )
{
  std::string s( n, '0' );
  for ( int i = 0; i < n; ++i )
  {
    if ( ( u >> i ) & 1u )
      s[i] = '1';
  }
  return s;
}

int parity( std::uint32_t x )
{
  return std::popcount( x ) & 1;
}

} // namespace

// --- AffineSubspace --------------------------------------------------------

AffineSubspace AffineSubspace::whole( int n )
{
  AffineSubspace s;
  s.n = n;
  return s;
}

bool AffineSubspace::contains( std::uint32_t x ) const
{
  for ( auto r : rows )
  {
    if ( parity( gf2::row_form( r, n ) & x ) != gf2::row_rhs( r, n ) )
      return false;
  }
  return true;
}

bool AffineSubspace::test_independent( std::uint32_t u ) const
{
  return !gf2::in_span( u, rows, n );
}

AffineSubspace AffineSubspace::with_constraint( std::uint32_t u, int b ) const
{
  if ( !test_independent( u ) )
    throw std::invalid_argument( "constraint is dependent on the subspace" );
  auto new_rows = rows;
  new_rows.push_back( gf2::make_row( u, b, n ) );
  AffineSubspace s;
  s.n = n;
  s.rows = gf2::rref( std::move( new_rows ), n );
  return s;
}

std::size_t AffineSubspace::hash() const
{
  std::size_t h = 0x9e3779b97f4a7c15ull ^ std::size_t( rows.size() );
  for ( auto r : rows )
    h = ( h * 0x100000001b3ull ) ^ std::size_t( r );
  return h;
}

// --- tree evaluation and serialization -------------------------------------

bool evaluate( const DecisionTree& t, std::uint32_t a )
{
  const DtNode* node = t.root.get();
  while ( !node->leaf )
    node = ( ( a >> node->var ) & 1u ) ? node->hi.get() : node->lo.get();
  return node->value;
}

std::string to_string( const DecisionTree& t )
{
  return t.root ? t.root->serial : std::string( "()" );
}

bool evaluate( const LinearDecisionTree& t, std::uint32_t a )
{
  const LdtNode* node = t.root.get();
  while ( !node->leaf )
    node = parity( node->form & a ) ? node->hi.get() : node->lo.get();
  return node->value;
}

std::string to_string( const LinearDecisionTree& t )
{
  return t.root ? t.root->serial : std::string( "()" );
}

bool evaluate( const SymmetricTree& t, std::uint32_t a )
{
  const SymNode* node = t.root.get();
  while ( !node->leaf )
  {
    int w = 0;
    for ( int v : node->vars )
      w += int( ( a >> v ) & 1u );
    node = node->sym[w] ? node->hi.get() : node->lo.get();
  }
  return node->value;
}

std::string to_string( const SymmetricTree& t )
{
  return t.root ? t.root->serial : std::string( "()" );
}

bool evaluate( const LinearDecisionList& l, std::uint32_t a )
{
  for ( const auto& [test, value] : l.pairs )
  {
    if ( parity( test.u & a ) == test.b )
      return value != 0;
  }
  throw std::logic_error( "decision list has no satisfied test" );
}

std::string to_string( const LinearDecisionList& l )
{
  std::string s = "[";
  bool first = true;
  for ( const auto& [test, value] : l.pairs )
  {
    if ( !first )
      s += "; ";
    first = false;
    if ( test.is_const_true() )
      s += "(const1)";
    else
      s += "(lin " + form_bits( test.u, l.n ) + " b=" + std::to_string( test.b ) + ")";
    s += " -> " + std::to_string( value );
  }
  return s + "]";
}

bool evaluate( const TestFamilyTree& t, std::uint32_t a )
{
  const FixedTestNode* node = t.root.get();
  while ( !node->leaf )
    node = t.tests[node->test].bits[a] ? node->hi.get() : node->lo.get();
  return node->value;
}

std::string to_string( const TestFamilyTree& t )
{
  return t.root ? t.root->serial : std::string( "()" );
}

// --- lattice ----------------------------------------------------------------

LatticeGraph::LatticeGraph( int n, int max_weight, std::size_t node_budget )
    : n_( n ), max_weight_( max_weight )
{
  if ( n < 0 )
    throw std::invalid_argument( "negative dimension" );
  layers_.resize( n + 1 );
  index_.resize( n + 1 );

  auto insert = [&]( int layer, AffineSubspace s ) {
    auto& slot = index_[layer][s.hash()];
    for ( int i : slot )
    {
      if ( layers_[layer][i] == s )
        return false;
    }
    slot.push_back( static_cast<int>( layers_[layer].size() ) );
    layers_[layer].push_back( std::move( s ) );
    return true;
  };

  insert( 0, AffineSubspace::whole( n ) );
  std::size_t total = 1;
  for ( int d = 0; d < n; ++d )
  {
    for ( const auto& node : layers_[d] )
    {
      for ( std::uint32_t u = 1; u < ( std::uint32_t( 1 ) << n ); ++u )
      {
        if ( std::popcount( u ) > max_weight_ )
          continue;
        if ( !node.test_independent( u ) )
          continue;
        for ( int b = 0; b < 2; ++b )
        {
          if ( insert( d + 1, node.with_constraint( u, b ) ) )
          {
            if ( ++total > node_budget )
              throw std::invalid_argument( "lattice exceeds the node budget" );
          }
        }
      }
    }
  }
}

std::vector<std::size_t> LatticeGraph::layer_sizes() const
{
  std::vector<std::size_t> sizes;
  for ( const auto& layer : layers_ )
    sizes.push_back( layer.size() );
  return sizes;
}

int LatticeGraph::find( const AffineSubspace& s ) const
{
  const int layer = static_cast<int>( s.rows.size() );
  if ( layer < 0 || layer >= static_cast<int>( index_.size() ) )
    return -1;
  auto it = index_[layer].find( s.hash() );
  if ( it == index_[layer].end() )
    return -1;
  for ( int i : it->second )
  {
    if ( layers_[layer][i] == s )
      return i;
  }
  return -1;
}

LatticeGraph build_affine_lattice( int n )
{
  return build_affine_lattice( n, n );
}

LatticeGraph build_affine_lattice( int n, int max_weight )
{
  if ( max_weight < 1 )
    throw std::invalid_argument( "test weight bound must be at least 1" );
  if ( max_weight <= 2 )
  {
    if ( n > 12 )
      throw std::invalid_argument( "weight-bounded lattice supports n <= 12" );
  }
  else if ( n > 6 )
  {
    throw std::invalid_argument( "unbounded lattice supports n <= 6" );
  }
  return LatticeGraph( n, std::min( max_weight, n ) );
}

// --- ordinary decision trees ------------------------------------------------

namespace
{

struct DtContext
{
  const TruthTable* tt;
  int n;
  DtRef leaf0, leaf1;
  std::unordered_map<std::uint64_t, DtRef> memo;
};

DtRef make_dt_leaf( bool v )
{
  auto node = std::make_shared<DtNode>();
  node->leaf = true;
  node->value = v;
  node->size = 1;
  node->serial = v ? "(leaf 1)" : "(leaf 0)";
  return node;
}

/// fixed: bit i set iff variable i is pinned; vals holds the pinned values.
DtRef dt_solve( DtContext& ctx, std::uint32_t fixed, std::uint32_t vals )
{
  const std::uint64_t key = ( std::uint64_t( fixed ) << 32 ) | vals;
  if ( auto it = ctx.memo.find( key ); it != ctx.memo.end() )
    return it->second;

  std::vector<int> free_vars;
  for ( int i = 0; i < ctx.n; ++i )
  {
    if ( !( ( fixed >> i ) & 1u ) )
      free_vars.push_back( i );
  }

  // constant on the cube?
  bool constant = true;
  const std::uint8_t first = [&] {
    std::uint32_t a = vals;
    return ctx.tt->bits[a];
  }();
  for ( std::uint32_t sub = 0; sub < ( std::uint32_t( 1 ) << free_vars.size() ); ++sub )
  {
    std::uint32_t a = vals;
    for ( std::size_t j = 0; j < free_vars.size(); ++j )
    {
      if ( ( sub >> j ) & 1u )
        a |= std::uint32_t( 1 ) << free_vars[j];
    }
    if ( ctx.tt->bits[a] != first )
    {
      constant = false;
      break;
    }
  }
  if ( constant )
  {
    DtRef leaf = first ? ctx.leaf1 : ctx.leaf0;
    ctx.memo.emplace( key, leaf );
    return leaf;
  }

  DtRef best;
  for ( int v : free_vars )
  {
    const std::uint32_t bit = std::uint32_t( 1 ) << v;
    DtRef lo = dt_solve( ctx, fixed | bit, vals );
    DtRef hi = dt_solve( ctx, fixed | bit, vals | bit );
    const int size = 1 + lo->size + hi->size;
    if ( best && size > best->size )
      continue;
    auto node = std::make_shared<DtNode>();
    node->var = v;
    node->lo = lo;
    node->hi = hi;
    node->size = size;
    node->serial = "(node (var " + std::to_string( v + 1 ) + ") " + lo->serial + " " + hi->serial + ")";
    if ( !best || size < best->size || ( size == best->size && node->serial < best->serial ) )
      best = node;
  }
  ctx.memo.emplace( key, best );
  return best;
}

} // namespace

DecisionTree minimize_dt( const TruthTable& tt )
{
  if ( tt.n > 12 )
    throw std::invalid_argument( "minimize_dt supports n <= 12" );
  DtContext ctx;
  ctx.tt = &tt;
  ctx.n = tt.n;
  ctx.leaf0 = make_dt_leaf( false );
  ctx.leaf1 = make_dt_leaf( true );
  DecisionTree t;
  t.n = tt.n;
  t.root = dt_solve( ctx, 0, 0 );
  return t;
}

// --- linear decision trees ---------------------------------------------------

namespace
{

LdtRef make_ldt_leaf( bool v, std::size_t table_len )
{
  auto node = std::make_shared<LdtNode>();
  node->leaf = true;
  node->value = v;
  node->size = 1;
  node->serial = v ? "(leaf 1)" : "(leaf 0)";
  node->table.assign( table_len, std::uint8_t( v ) );
  return node;
}

bool ldt_better( const LdtRef& a, const LdtRef& b )
{
  if ( !b )
    return true;
  if ( a->size != b->size )
    return a->size < b->size;
  return a->serial < b->serial;
}

} // namespace

LinearDecisionTree minimize_ldt( const TruthTable& tt )
{
  auto lattice = build_affine_lattice( tt.n );
  return minimize_ldt( tt, lattice );
}

LinearDecisionTree minimize_ldt( const TruthTable& tt, const LatticeGraph& lattice )
{
  if ( lattice.n() != tt.n )
    throw std::invalid_argument( "lattice dimension does not match the table" );
  const int n = tt.n;
  const std::size_t table_len = tt.bits.size();
  const auto& layers = lattice.layers();

  LdtRef leaf0 = make_ldt_leaf( false, table_len );
  LdtRef leaf1 = make_ldt_leaf( true, table_len );

  std::vector<std::vector<LdtRef>> value( layers.size() );

  // points
  value[n].resize( layers[n].size() );
  for ( std::size_t i = 0; i < layers[n].size(); ++i )
  {
    std::uint32_t point = 0;
    while ( !layers[n][i].contains( point ) )
      ++point;
    value[n][i] = tt.bits[point] ? leaf1 : leaf0;
  }

  for ( int d = n - 1; d >= 0; --d )
  {
    value[d].resize( layers[d].size() );
    for ( std::size_t i = 0; i < layers[d].size(); ++i )
    {
      const AffineSubspace& space = layers[d][i];
      LdtRef best;
      for ( std::uint32_t u = 1; u < ( std::uint32_t( 1 ) << n ); ++u )
      {
        if ( std::popcount( u ) > lattice.max_weight() )
          continue;
        if ( !space.test_independent( u ) )
          continue;
        const int i0 = lattice.find( space.with_constraint( u, 0 ) );
        const int i1 = lattice.find( space.with_constraint( u, 1 ) );
        const LdtRef& t0 = value[d + 1][i0];
        const LdtRef& t1 = value[d + 1][i1];

        if ( t0->table == t1->table )
        {
          const LdtRef& smaller = ldt_better( t0, t1 ) ? t0 : t1;
          if ( ldt_better( smaller, best ) )
            best = smaller;
          continue;
        }
        const int size = 1 + t0->size + t1->size;
        if ( best && size > best->size )
          continue;
        auto node = std::make_shared<LdtNode>();
        node->form = u;
        node->lo = t0;
        node->hi = t1;
        node->size = size;
        node->serial =
            "(node (lin " + form_bits( u, n ) + " b=1) " + t0->serial + " " + t1->serial + ")";
        node->table.resize( table_len );
        for ( std::uint32_t x = 0; x < table_len; ++x )
          node->table[x] = parity( u & x ) ? t1->table[x] : t0->table[x];
        if ( ldt_better( node, best ) )
          best = node;
      }
      value[d][i] = best;
    }
  }

  LinearDecisionTree t;
  t.n = n;
  t.root = value[0][0];
  if ( t.root->table != tt.bits )
    throw std::logic_error( "linear decision tree does not reproduce the table" );
  return t;
}

LinearDecisionTree minimize_ldt_c( const TruthTable& tt, int c )
{
  auto lattice = build_affine_lattice( tt.n, c );
  return minimize_ldt( tt, lattice );
}

// --- symmetric read-once trees ------------------------------------------------

namespace
{

std::vector<int> cube_free_vars( const std::vector<trit>& cube )
{
  std::vector<int> f;
  for ( std::size_t i = 0; i < cube.size(); ++i )
  {
    if ( cube[i] == trit::star )
      f.push_back( static_cast<int>( i ) );
  }
  return f;
}

bool sym_better( const SymRef& a, const SymRef& b )
{
  if ( !b )
    return true;
  if ( a->size != b->size )
    return a->size < b->size;
  return a->serial < b->serial;
}

std::size_t cube_code( const std::vector<trit>& cube )
{
  std::size_t code = 0;
  for ( auto it = cube.rbegin(); it != cube.rend(); ++it )
    code = code * 3 + std::size_t( *it );
  return code;
}

} // namespace

SymmetricTree minimize_srodt( const TruthTable& tt )
{
  if ( tt.n > 4 )
    throw std::invalid_argument( "minimize_srodt supports n <= 4" );
  const int n = tt.n;

  std::size_t total = 1;
  for ( int i = 0; i < n; ++i )
    total *= 3;

  // per cube: the best tree plus its value table over the cube's free
  // variables (a collapsed subtree tests fewer variables than the cube
  // has, so the table is kept beside the shared tree, not inside it)
  std::vector<SymRef> value( total );
  std::vector<std::vector<std::uint8_t>> value_table( total );

  std::vector<std::vector<std::vector<trit>>> by_stars( n + 1 );
  {
    std::vector<trit> cube( n, trit::zero );
    while ( true )
    {
      by_stars[cube_free_vars( cube ).size()].push_back( cube );
      int i = 0;
      for ( ; i < n; ++i )
      {
        if ( cube[i] == trit::zero )
        {
          cube[i] = trit::one;
          break;
        }
        if ( cube[i] == trit::one )
        {
          cube[i] = trit::star;
          break;
        }
        cube[i] = trit::zero;
      }
      if ( i == n )
        break;
    }
  }

  auto make_leaf = []( bool v ) {
    auto node = std::make_shared<SymNode>();
    node->leaf = true;
    node->value = v;
    node->size = 1;
    node->serial = v ? "(leaf 1)" : "(leaf 0)";
    return node;
  };

  for ( int stars = 0; stars <= n; ++stars )
  {
    for ( const auto& cube : by_stars[stars] )
    {
      const auto free_vars = cube_free_vars( cube );
      const std::size_t code = cube_code( cube );
      if ( stars == 0 )
      {
        std::uint32_t point = 0;
        for ( int i = 0; i < n; ++i )
        {
          if ( cube[i] == trit::one )
            point |= std::uint32_t( 1 ) << i;
        }
        value[code] = make_leaf( tt.bits[point] );
        value_table[code] = { tt.bits[point] };
        continue;
      }

      SymRef best;
      std::vector<std::uint8_t> best_table;
      auto consider = [&]( const SymRef& cand, std::vector<std::uint8_t> table ) {
        if ( sym_better( cand, best ) )
        {
          best = cand;
          best_table = std::move( table );
        }
      };

      for ( std::uint32_t amask = 1; amask < ( std::uint32_t( 1 ) << stars ); ++amask )
      {
        const int asize = std::popcount( amask );
        std::vector<int> avars;
        for ( int j = 0; j < stars; ++j )
        {
          if ( ( amask >> j ) & 1u )
            avars.push_back( free_vars[j] );
        }

        // subtree entry of every extension on the A variables
        const std::uint32_t ext_count = std::uint32_t( 1 ) << asize;
        std::vector<std::size_t> ext_code( ext_count );
        for ( std::uint32_t s = 0; s < ext_count; ++s )
        {
          auto beta = cube;
          for ( int j = 0; j < asize; ++j )
            beta[avars[j]] = ( ( s >> j ) & 1u ) ? trit::one : trit::zero;
          ext_code[s] = cube_code( beta );
        }

        for ( std::uint32_t gmask = 1; gmask + 1 < ( std::uint32_t( 1 ) << ( asize + 1 ) ); ++gmask )
        {
          // g maps Hamming weight w to bit w of gmask; constants excluded
          std::size_t sub_code[2] = { 0, 0 };
          bool have[2] = { false, false };
          bool feasible = true;
          for ( std::uint32_t s = 0; s < ext_count && feasible; ++s )
          {
            const int b = int( ( gmask >> std::popcount( s ) ) & 1u );
            const std::size_t candidate = ext_code[s];
            if ( !have[b] )
            {
              sub_code[b] = candidate;
              have[b] = true;
            }
            else if ( value_table[sub_code[b]] != value_table[candidate] )
            {
              feasible = false;
            }
            else if ( sym_better( value[candidate], value[sub_code[b]] ) )
            {
              sub_code[b] = candidate;
            }
          }
          if ( !feasible )
            continue;
          const SymRef& t0 = value[sub_code[0]];
          const SymRef& t1 = value[sub_code[1]];
          const auto& table0 = value_table[sub_code[0]];
          const auto& table1 = value_table[sub_code[1]];

          // table of the combined node over the cube's free variables
          auto combined_table = [&]() {
            std::vector<std::uint8_t> out( std::size_t( 1 ) << stars );
            for ( std::uint32_t y = 0; y < out.size(); ++y )
            {
              std::uint32_t apart = 0, rest = 0;
              int ai = 0, ri = 0;
              for ( int j = 0; j < stars; ++j )
              {
                if ( ( amask >> j ) & 1u )
                {
                  if ( ( y >> j ) & 1u )
                    apart |= std::uint32_t( 1 ) << ai;
                  ++ai;
                }
                else
                {
                  if ( ( y >> j ) & 1u )
                    rest |= std::uint32_t( 1 ) << ri;
                  ++ri;
                }
              }
              const int b = int( ( gmask >> std::popcount( apart ) ) & 1u );
              out[y] = ( b ? table1 : table0 )[rest];
            }
            return out;
          };

          if ( table0 == table1 )
          {
            const bool first = sym_better( t0, t1 );
            const SymRef& smaller = first ? t0 : t1;
            if ( sym_better( smaller, best ) )
            {
              // the child table is over stars - asize variables; lift it
              std::vector<std::uint8_t> lifted( std::size_t( 1 ) << stars );
              for ( std::uint32_t y = 0; y < lifted.size(); ++y )
              {
                std::uint32_t rest = 0;
                int ri = 0;
                for ( int j = 0; j < stars; ++j )
                {
                  if ( !( ( amask >> j ) & 1u ) )
                  {
                    if ( ( y >> j ) & 1u )
                      rest |= std::uint32_t( 1 ) << ri;
                    ++ri;
                  }
                }
                lifted[y] = table0[rest];
              }
              consider( smaller, std::move( lifted ) );
            }
            continue;
          }
          const int size = 1 + t0->size + t1->size;
          if ( best && size > best->size )
            continue;

          auto node = std::make_shared<SymNode>();
          node->vars = avars;
          node->sym.resize( asize + 1 );
          for ( int w = 0; w <= asize; ++w )
            node->sym[w] = std::uint8_t( ( gmask >> w ) & 1u );
          node->lo = t0;
          node->hi = t1;
          node->size = size;
          {
            std::string gtxt;
            for ( int w = 0; w <= asize; ++w )
              gtxt += char( '0' + node->sym[w] );
            std::string vtxt;
            for ( int v : avars )
            {
              if ( !vtxt.empty() )
                vtxt += ",";
              vtxt += std::to_string( v + 1 );
            }
            node->serial = "(node (sym " + gtxt + " vars=" + vtxt + ") " + t0->serial + " " +
                           t1->serial + ")";
          }
          consider( node, combined_table() );
        }
      }
      value[code] = best;
      value_table[code] = std::move( best_table );
    }
  }

  std::vector<trit> all_star( n, trit::star );
  SymmetricTree t;
  t.n = n;
  t.root = value[cube_code( all_star )];
  for ( std::uint32_t a = 0; a < tt.bits.size(); ++a )
  {
    if ( evaluate( t, a ) != ( tt.bits[a] != 0 ) )
      throw std::logic_error( "symmetric tree does not reproduce the table" );
  }
  return t;
}

// --- meta-algorithm over a fixed test family ---------------------------------

namespace
{

using PointSet = std::vector<std::uint64_t>;

PointSet full_point_set( int n )
{
  const std::size_t points = std::size_t( 1 ) << n;
  PointSet s( ( points + 63 ) / 64, ~std::uint64_t( 0 ) );
  if ( points % 64 )
    s.back() = ( std::uint64_t( 1 ) << ( points % 64 ) ) - 1;
  return s;
}

bool set_get( const PointSet& s, std::uint32_t x )
{
  return ( s[x / 64] >> ( x % 64 ) ) & 1u;
}

std::size_t set_count( const PointSet& s )
{
  std::size_t c = 0;
  for ( auto w : s )
    c += std::popcount( w );
  return c;
}

bool set_empty( const PointSet& s )
{
  for ( auto w : s )
    if ( w )
      return false;
  return true;
}

struct PointSetHash
{
  std::size_t operator()( const PointSet& s ) const
  {
    std::size_t h = 1469598103934665603ull;
    for ( auto w : s )
      h = ( h ^ w ) * 1099511628211ull;
    return h;
  }
};

bool ftt_better( const FixedTestRef& a, const FixedTestRef& b )
{
  if ( !b )
    return true;
  if ( a->size != b->size )
    return a->size < b->size;
  return a->serial < b->serial;
}

} // namespace

Rejectable<TestFamilyTree> minimize_fixed_tests( const TruthTable& tt,
                                                 const std::vector<TruthTable>& tests )
{
  if ( tt.n > 10 )
    throw std::invalid_argument( "minimize_fixed_tests supports n <= 10" );
  if ( tests.size() > 16 )
    throw std::invalid_argument( "minimize_fixed_tests supports at most 16 tests" );
  for ( const auto& d : tests )
  {
    if ( d.n != tt.n )
      throw std::invalid_argument( "test dimension does not match the table" );
  }
  const std::size_t points = tt.bits.size();

  // test point sets
  std::vector<PointSet> dsets;
  for ( const auto& d : tests )
  {
    PointSet s( ( points + 63 ) / 64, 0 );
    for ( std::uint32_t x = 0; x < points; ++x )
    {
      if ( d.bits[x] )
        s[x / 64] |= std::uint64_t( 1 ) << ( x % 64 );
    }
    dsets.push_back( std::move( s ) );
  }

  // closure of all reachable subsets under splitting
  std::unordered_map<PointSet, int, PointSetHash> id_of;
  std::vector<PointSet> sets;
  auto intern = [&]( const PointSet& s ) {
    auto it = id_of.find( s );
    if ( it != id_of.end() )
      return std::pair<int, bool>( it->second, false );
    const int id = static_cast<int>( sets.size() );
    id_of.emplace( s, id );
    sets.push_back( s );
    return std::pair<int, bool>( id, true );
  };
  intern( full_point_set( tt.n ) );
  for ( std::size_t head = 0; head < sets.size(); ++head )
  {
    if ( sets.size() > 1'000'000 )
      throw std::invalid_argument( "test family closure exceeds the node budget" );
    const PointSet v = sets[head];
    for ( const auto& d : dsets )
    {
      PointSet inside( v.size() ), outside( v.size() );
      for ( std::size_t w = 0; w < v.size(); ++w )
      {
        inside[w] = v[w] & d[w];
        outside[w] = v[w] & ~d[w];
      }
      if ( set_empty( inside ) || set_empty( outside ) )
        continue;
      intern( inside );
      intern( outside );
    }
  }

  // process by increasing cardinality
  std::vector<int> order( sets.size() );
  for ( std::size_t i = 0; i < order.size(); ++i )
    order[i] = static_cast<int>( i );
  std::stable_sort( order.begin(), order.end(),
                    [&]( int a, int b ) { return set_count( sets[a] ) < set_count( sets[b] ); } );

  std::vector<FixedTestRef> value( sets.size() );
  for ( int id : order )
  {
    const PointSet& v = sets[id];
    FixedTestRef best;
    for ( std::size_t ti = 0; ti < dsets.size(); ++ti )
    {
      PointSet inside( v.size() ), outside( v.size() );
      for ( std::size_t w = 0; w < v.size(); ++w )
      {
        inside[w] = v[w] & dsets[ti][w];
        outside[w] = v[w] & ~dsets[ti][w];
      }
      if ( set_empty( inside ) || set_empty( outside ) )
        continue;
      const FixedTestRef& t1 = value[id_of.at( inside )];
      const FixedTestRef& t0 = value[id_of.at( outside )];

      if ( t0->serial == t1->serial || [&] {
             // functional equality over the whole space
             for ( std::uint32_t x = 0; x < points; ++x )
             {
               const FixedTestNode* n0 = t0.get();
               while ( !n0->leaf )
                 n0 = tests[n0->test].bits[x] ? n0->hi.get() : n0->lo.get();
               const FixedTestNode* n1 = t1.get();
               while ( !n1->leaf )
                 n1 = tests[n1->test].bits[x] ? n1->hi.get() : n1->lo.get();
               if ( n0->value != n1->value )
                 return false;
             }
             return true;
           }() )
      {
        const FixedTestRef& smaller = ftt_better( t0, t1 ) ? t0 : t1;
        if ( ftt_better( smaller, best ) )
          best = smaller;
        continue;
      }
      const int size = 1 + t0->size + t1->size;
      if ( best && size > best->size )
        continue;
      auto node = std::make_shared<FixedTestNode>();
      node->test = static_cast<int>( ti );
      node->lo = t0;
      node->hi = t1;
      node->size = size;
      node->serial = "(node (test " + std::to_string( ti + 1 ) + ") " + t0->serial + " " +
                     t1->serial + ")";
      if ( ftt_better( node, best ) )
        best = node;
    }

    if ( !best )
    {
      // no test splits V: it must be constant under f
      int seen = -1;
      for ( std::uint32_t x = 0; x < points; ++x )
      {
        if ( !set_get( v, x ) )
          continue;
        if ( seen < 0 )
          seen = tt.bits[x];
        else if ( seen != tt.bits[x] )
          return Rejectable<TestFamilyTree>::reject(
              "indistinguishable points with different values" );
      }
      auto node = std::make_shared<FixedTestNode>();
      node->leaf = true;
      node->value = seen != 0;
      node->size = 1;
      node->serial = seen ? "(leaf 1)" : "(leaf 0)";
      best = node;
    }
    value[id] = best;
  }

  TestFamilyTree t;
  t.n = tt.n;
  t.tests = tests;
  t.root = value[0];
  for ( std::uint32_t x = 0; x < points; ++x )
  {
    if ( evaluate( t, x ) != ( tt.bits[x] != 0 ) )
      throw std::logic_error( "fixed-test tree does not reproduce the table" );
  }
  return Rejectable<TestFamilyTree>::accept( std::move( t ) );
}

// --- linear decision lists ----------------------------------------------------

namespace
{

struct LdlState
{
  bool ok = false;
  int size = 0;
  std::vector<std::pair<LinearTest, int>> pairs;
  std::string serial;
};

struct LdlKey
{
  std::vector<gf2::row_t> rows;
  bool operator==( const LdlKey& o ) const = default;
};

struct LdlKeyHash
{
  std::size_t operator()( const LdlKey& k ) const
  {
    std::size_t h = 14695981039346656037ull;
    for ( auto r : k.rows )
      h = ( h ^ r ) * 1099511628211ull;
    return h;
  }
};

struct LdlContext
{
  const TruthTable* tt;
  int n;
  std::unordered_map<LdlKey, LdlState, LdlKeyHash> memo;
};

/// -1 when f is not constant on the subspace, else the constant value.
int constant_on( const TruthTable& tt, const AffineSubspace& s )
{
  int seen = -1;
  for ( std::uint32_t x = 0; x < tt.bits.size(); ++x )
  {
    if ( !s.contains( x ) )
      continue;
    if ( seen < 0 )
      seen = tt.bits[x];
    else if ( seen != tt.bits[x] )
      return -1;
  }
  return seen;
}

std::string ldl_serial( const std::vector<std::pair<LinearTest, int>>& pairs, int n )
{
  LinearDecisionList l;
  l.n = n;
  l.pairs = pairs;
  return to_string( l );
}

const LdlState& ldl_solve( LdlContext& ctx, const AffineSubspace& space )
{
  LdlKey key{ space.rows };
  if ( auto it = ctx.memo.find( key ); it != ctx.memo.end() )
    return it->second;

  LdlState state;
  if ( const int c = constant_on( *ctx.tt, space ); c >= 0 )
  {
    state.ok = true;
    state.size = 0;
    state.pairs = { { LinearTest{ 0, 0 }, c } };
    state.serial = ldl_serial( state.pairs, ctx.n );
    return ctx.memo.emplace( std::move( key ), std::move( state ) ).first->second;
  }

  for ( std::uint32_t u = 1; u < ( std::uint32_t( 1 ) << ctx.n ); ++u )
  {
    if ( !space.test_independent( u ) )
      continue;
    for ( int b = 0; b < 2; ++b )
    {
      const auto taken = space.with_constraint( u, b );
      const int v = constant_on( *ctx.tt, taken );
      if ( v < 0 )
        continue;
      const auto rest = space.with_constraint( u, b ^ 1 );
      const LdlState& sub = ldl_solve( ctx, rest );
      if ( !sub.ok )
        continue;
      LdlState cand;
      cand.ok = true;
      cand.size = 1 + sub.size;
      cand.pairs.reserve( sub.pairs.size() + 1 );
      cand.pairs.emplace_back( LinearTest{ u, b }, v );
      cand.pairs.insert( cand.pairs.end(), sub.pairs.begin(), sub.pairs.end() );
      cand.serial = ldl_serial( cand.pairs, ctx.n );
      if ( !state.ok || cand.size < state.size ||
           ( cand.size == state.size && cand.serial < state.serial ) )
        state = std::move( cand );
    }
  }
  return ctx.memo.emplace( std::move( key ), std::move( state ) ).first->second;
}

} // namespace

Rejectable<LinearDecisionList> minimize_ldl( const TruthTable& tt )
{
  if ( tt.n > 6 )
    throw std::invalid_argument( "minimize_ldl supports n <= 6" );
  LdlContext ctx;
  ctx.tt = &tt;
  ctx.n = tt.n;
  const LdlState& top = ldl_solve( ctx, AffineSubspace::whole( tt.n ) );
  if ( !top.ok )
    return Rejectable<LinearDecisionList>::reject( "no linear decision list exists" );
  LinearDecisionList l;
  l.n = tt.n;
  l.pairs = top.pairs;
  return Rejectable<LinearDecisionList>::accept( std::move( l ) );
}

int ldl_size_lower_bound( const TruthTable& tt )
{
  const std::int64_t ones = count_ones( tt );
  for ( int k = 0; k <= tt.n; ++k )
  {
    const std::int64_t divisor = std::int64_t( 1 ) << ( tt.n - k );
    if ( ones % divisor == 0 )
      return k;
  }
  return tt.n;
}

LinearDecisionList model_minimize_ldl( const LinearDecisionList& list )
{
  if ( list.pairs.empty() )
    throw std::invalid_argument( "malformed list: empty" );
  if ( !list.pairs.back().first.is_const_true() )
    throw std::invalid_argument( "malformed list: final test must be the constant 1" );
  const int n = list.n;
  for ( const auto& [test, value] : list.pairs )
  {
    if ( n < 32 && test.u >= ( std::uint32_t( 1 ) << n ) )
      throw std::invalid_argument( "malformed list: test exceeds the dimension" );
    (void)value;
  }

  LinearDecisionList out;
  out.n = n;
  std::vector<gf2::row_t> rows; // survivors satisfy <u,x> = b^1 per kept test

  for ( const auto& [test, value] : list.pairs )
  {
    const auto reduced = gf2::reduce_row( test.u, 0, rows, n );
    if ( gf2::row_form( reduced, n ) != 0 )
    {
      out.pairs.emplace_back( test, value );
      rows = gf2::rref(
          [&] {
            auto r = rows;
            r.push_back( gf2::make_row( test.u, test.b ^ 1, n ) );
            return r;
          }(),
          n );
      continue;
    }
    // dependent: the test outcome is forced for every survivor
    const int forced = gf2::row_rhs( reduced, n );
    if ( forced == test.b )
    {
      out.pairs.emplace_back( LinearTest{ 0, 0 }, value );
      break;
    }
    // never satisfied: drop the pair
  }

  // merge identical trailing leaves
  while ( out.pairs.size() >= 2 &&
          out.pairs[out.pairs.size() - 1].second == out.pairs[out.pairs.size() - 2].second )
  {
    out.pairs.erase( out.pairs.end() - 2 );
  }
  return out;
}

// --- decision trees over arbitrary given tests (the NP-hard language) ---------

bool decide_test_family_tree( const TruthTable& tt,
                              const std::vector<std::vector<std::uint32_t>>& tests, int k )
{
  if ( tests.size() > 16 )
    throw std::invalid_argument( "decide_test_family_tree supports at most 16 tests" );
  if ( k > 8 )
    throw std::invalid_argument( "decide_test_family_tree supports k <= 8" );
  if ( k < 0 )
    return false;
  const std::size_t points = tt.bits.size();
  const int t = static_cast<int>( tests.size() );

  // membership masks per point
  std::vector<std::uint32_t> member( points, 0 );
  for ( int i = 0; i < t; ++i )
  {
    for ( auto pos : tests[i] )
    {
      if ( pos >= points )
        throw std::invalid_argument( "test position out of range" );
      member[pos] |= std::uint32_t( 1 ) << i;
    }
  }

  // a consistent tree over a chosen subset exists iff the subset's
  // signatures separate the 0- and 1-points
  for ( std::uint32_t subset = 0; subset < ( std::uint32_t( 1 ) << t ); ++subset )
  {
    if ( std::popcount( subset ) > k )
      continue;
    std::unordered_map<std::uint32_t, int> sig_value;
    bool consistent = true;
    for ( std::uint32_t x = 0; x < points && consistent; ++x )
    {
      const std::uint32_t sig = member[x] & subset;
      auto [it, inserted] = sig_value.emplace( sig, tt.bits[x] );
      if ( !inserted && it->second != tt.bits[x] )
        consistent = false;
    }
    if ( consistent )
      return true;
  }
  return false;
}

} // namespace ttmin
