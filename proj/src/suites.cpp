#include "ttmin/suites.hpp"

#include "ttmin/bp.hpp"
#include "ttmin/core.hpp"
#include "ttmin/formulas.hpp"
#include "ttmin/hardness.hpp"
#include "ttmin/mlpoly.hpp"
#include "ttmin/oracles.hpp"
#include "ttmin/trees.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace ttmin
{

std::string to_json( const SuiteReport& report )
{
  nlohmann::json j;
  j["suite"] = report.name;
  j["checked"] = report.checked;
  j["failures"] = report.failures.size();
  nlohmann::json examples = nlohmann::json::array();
  for ( std::size_t i = 0; i < report.failures.size() && i < 10; ++i )
    examples.push_back( report.failures[i] );
  j["counterexamples"] = examples;
  j["passed"] = report.passed();
  return j.dump();
}

namespace
{

unsigned resolve_threads( const SuiteOptions& opts )
{
  if ( opts.threads > 0 )
    return opts.threads;
  if ( const char* env = std::getenv( "TTMIN_THREADS" ) )
  {
    const int parsed = std::atoi( env );
    if ( parsed > 0 )
      return static_cast<unsigned>( parsed );
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

/// Splits [0, count) into chunks; failure lists are merged in chunk order,
/// so the outcome does not depend on the thread count.
template <typename Body>
void parallel_sweep( std::size_t count, unsigned threads, SuiteReport& report, Body body )
{
  threads = std::max( 1u, std::min<unsigned>( threads, 64 ) );
  const std::size_t chunk = ( count + threads - 1 ) / threads;
  std::vector<std::vector<std::string>> buckets( threads );
  std::vector<std::thread> workers;
  for ( unsigned t = 0; t < threads; ++t )
  {
    const std::size_t begin = std::min( count, t * chunk );
    const std::size_t end = std::min( count, begin + chunk );
    workers.emplace_back( [&, t, begin, end] {
      for ( std::size_t i = begin; i < end; ++i )
        body( i, buckets[t] );
    } );
  }
  for ( auto& w : workers )
    w.join();
  for ( auto& bucket : buckets )
  {
    for ( auto& f : bucket )
      report.failures.push_back( std::move( f ) );
  }
  report.checked += static_cast<long long>( count );
}

TruthTable table_from_bits( int n, std::uint64_t bits )
{
  std::vector<std::uint8_t> v( std::size_t( 1 ) << n );
  for ( std::size_t i = 0; i < v.size(); ++i )
    v[i] = std::uint8_t( ( bits >> i ) & 1u );
  return TruthTable( n, std::move( v ) );
}

TruthTable random_table( std::mt19937_64& rng, int n )
{
  std::vector<std::uint8_t> v( std::size_t( 1 ) << n );
  for ( auto& b : v )
    b = std::uint8_t( rng() & 1u );
  return TruthTable( n, std::move( v ) );
}

TruthTable random_nonconstant_table( std::mt19937_64& rng, int n )
{
  while ( true )
  {
    auto tt = random_table( rng, n );
    if ( !is_constant( tt ) )
      return tt;
  }
}

/// f1 on the low n1 variables combined with f2 on the next n2 variables.
TruthTable combine_disjoint( const TruthTable& f1, const TruthTable& f2, char op )
{
  const int n = f1.n + f2.n;
  std::vector<std::uint8_t> bits( std::size_t( 1 ) << n );
  const std::uint32_t low_mask = ( std::uint32_t( 1 ) << f1.n ) - 1;
  for ( std::uint32_t x = 0; x < bits.size(); ++x )
  {
    const int a = f1.bits[x & low_mask];
    const int b = f2.bits[x >> f1.n];
    bits[x] = std::uint8_t( op == '&' ? ( a & b ) : op == '|' ? ( a | b ) : ( a ^ b ) );
  }
  return TruthTable( n, std::move( bits ) );
}

} // namespace

// --- criterion 1 ------------------------------------------------------------

SuiteReport check_trichotomy( const SuiteOptions& opts )
{
  SuiteReport report;
  report.name = "trichotomy";
  parallel_sweep( 1u << 16, resolve_threads( opts ), report,
                  []( std::size_t f, std::vector<std::string>& failures ) {
                    const auto tt = table_from_bits( 4, f );
                    const auto reduced = reduce_to_support( tt );
                    if ( reduced.table.n < 2 )
                      return;
                    int fired = 0;
                    if ( and_decompose( reduced.table ) )
                      ++fired;
                    if ( or_decompose( reduced.table ) )
                      ++fired;
                    if ( xor_decompose( reduced.table ) )
                      ++fired;
                    if ( fired > 1 )
                      failures.push_back( "function " + std::to_string( f ) +
                                          " fired " + std::to_string( fired ) +
                                          " decompositions" );
                  } );
  return report;
}

// --- criterion 2 ------------------------------------------------------------

SuiteReport check_tree_oracles( const SuiteOptions& opts )
{
  SuiteReport report;
  report.name = "tree-oracles";
  const auto lattice = build_affine_lattice( 3 );
  (void)opts;
  for ( std::size_t f = 0; f < 256; ++f )
  {
    const auto tt = table_from_bits( 3, f );
    report.checked += 4;

    const int dt = minimize_dt( tt ).size();
    const int dt_oracle = oracles::min_dt_size( tt );
    if ( dt != dt_oracle )
      report.failures.push_back( "dt size " + std::to_string( dt ) + " != oracle " +
                                 std::to_string( dt_oracle ) + " on " + to_string( tt ) );

    const int ldt = minimize_ldt( tt, lattice ).size();
    const int ldt_oracle = oracles::min_ldt_size( tt );
    if ( ldt != ldt_oracle )
      report.failures.push_back( "ldt size " + std::to_string( ldt ) + " != oracle " +
                                 std::to_string( ldt_oracle ) + " on " + to_string( tt ) );

    const int srodt = minimize_srodt( tt ).size();
    const int srodt_oracle = oracles::min_srodt_size( tt );
    if ( srodt != srodt_oracle )
      report.failures.push_back( "srodt size " + std::to_string( srodt ) + " != oracle " +
                                 std::to_string( srodt_oracle ) + " on " + to_string( tt ) );

    const auto ldl = minimize_ldl( tt );
    const auto ldl_oracle = oracles::min_ldl_size( tt );
    if ( ldl.ok() != ldl_oracle.has_value() ||
         ( ldl.ok() && ldl->size() != *ldl_oracle ) )
      report.failures.push_back(
          "ldl " + ( ldl.ok() ? std::to_string( ldl->size() ) : std::string( "reject" ) ) +
          " != oracle " +
          ( ldl_oracle ? std::to_string( *ldl_oracle ) : std::string( "reject" ) ) + " on " +
          to_string( tt ) );
  }
  return report;
}

// --- criterion 3 ------------------------------------------------------------

SuiteReport check_ldt_c_degeneration( const SuiteOptions& opts )
{
  SuiteReport report;
  report.name = "ldt-c-degeneration";
  (void)opts;
  for ( int n = 1; n <= 3; ++n )
  {
    const auto lattice = build_affine_lattice( n, 1 );
    for ( std::uint64_t f = 0; f < ( std::uint64_t( 1 ) << ( 1 << n ) ); ++f )
    {
      const auto tt = table_from_bits( n, f );
      ++report.checked;
      const int via_c1 = minimize_ldt( tt, lattice ).size();
      const int via_dt = minimize_dt( tt ).size();
      if ( via_c1 != via_dt )
        report.failures.push_back( "ldt_c(1) size " + std::to_string( via_c1 ) +
                                   " != dt size " + std::to_string( via_dt ) + " on " +
                                   to_string( tt ) );
    }
  }
  return report;
}

// --- criterion 4 ------------------------------------------------------------

SuiteReport check_ldl_size_law( const SuiteOptions& opts )
{
  SuiteReport report;
  report.name = "ldl-size-law";
  auto check_one = [&]( const TruthTable& tt ) {
    ++report.checked;
    const auto ldl = minimize_ldl( tt );
    if ( !ldl.ok() )
      return;
    const int bound = ldl_size_lower_bound( tt );
    if ( ldl->size() != bound )
      report.failures.push_back( "ldl size " + std::to_string( ldl->size() ) +
                                 " != divisibility bound " + std::to_string( bound ) + " on " +
                                 to_string( tt ) );
    // the returned list passes model minimization unchanged
    const auto reminimized = model_minimize_ldl( *ldl );
    if ( reminimized.pairs != ldl->pairs )
      report.failures.push_back( "returned list was not model-minimal on " + to_string( tt ) );
  };

  for ( int n = 1; n <= 3; ++n )
  {
    for ( std::uint64_t f = 0; f < ( std::uint64_t( 1 ) << ( 1 << n ) ); ++f )
      check_one( table_from_bits( n, f ) );
  }
  std::mt19937_64 rng( opts.seed );
  for ( int i = 0; i < 200; ++i )
    check_one( random_table( rng, 4 ) );
  return report;
}

// --- criterion 5 ------------------------------------------------------------

SuiteReport check_commutator_identities( const SuiteOptions& opts )
{
  SuiteReport report;
  report.name = "commutator-identities";
  std::mt19937_64 rng( opts.seed );
  for ( int trial = 0; trial < 1000; ++trial )
  {
    const int n = 2 + int( rng() % 7 ); // 2..8
    std::vector<std::uint8_t> coeffs( std::size_t( 1 ) << n );
    for ( auto& c : coeffs )
      c = std::uint8_t( rng() & 1u );
    const MultilinearPoly q( n, std::move( coeffs ) );
    ++report.checked;

    for ( int i = 0; i < n; ++i )
    {
      for ( int j = i + 1; j < n; ++j )
      {
        const auto second = partial_derivative( partial_derivative( q, i ), j );
        const auto second_swapped = partial_derivative( partial_derivative( q, j ), i );
        if ( !( second == second_swapped ) )
        {
          report.failures.push_back( "derivative symmetry failed at (" + std::to_string( i ) +
                                     "," + std::to_string( j ) + ") n=" + std::to_string( n ) );
          continue;
        }
        const auto delta = commutator_delta( q, i, j );
        for ( int c = 0; c < 2; ++c )
        {
          MultilinearPoly shifted = q;
          shifted.coeffs[0] ^= std::uint8_t( c );
          auto lhs = commutator_delta( shifted, i, j );
          MultilinearPoly rhs = delta;
          if ( c )
          {
            for ( std::size_t s = 0; s < rhs.coeffs.size(); ++s )
              rhs.coeffs[s] ^= second.coeffs[s];
          }
          if ( !( lhs == rhs ) )
            report.failures.push_back( "commutator shift identity failed at (" +
                                       std::to_string( i ) + "," + std::to_string( j ) +
                                       ") c=" + std::to_string( c ) +
                                       " n=" + std::to_string( n ) );
        }
      }
    }
  }
  return report;
}

// --- criterion 6 ------------------------------------------------------------

namespace
{

Formula::Node random_rof_node( std::mt19937_64& rng, const std::vector<int>& vars,
                               int forbidden_op )
{
  using Node = Formula::Node;
  using Op = Formula::Op;
  if ( vars.size() == 1 )
    return Node::leaf( vars[0], ( rng() & 1u ) != 0 );

  int op_index;
  do
  {
    op_index = int( rng() % 3 );
  } while ( op_index == forbidden_op );
  const Op op = op_index == 0 ? Op::And : op_index == 1 ? Op::Or : Op::Xor;

  auto shuffled = vars;
  for ( std::size_t i = shuffled.size(); i > 1; --i )
    std::swap( shuffled[i - 1], shuffled[rng() % i] );

  const int max_children = static_cast<int>( std::min<std::size_t>( shuffled.size(), 4 ) );
  const int children = 2 + int( rng() % ( max_children - 1 ) );

  // split the shuffled variables into `children` nonempty groups
  std::vector<std::vector<int>> groups( children );
  for ( int c = 0; c < children; ++c )
    groups[c].push_back( shuffled[c] );
  for ( std::size_t i = children; i < shuffled.size(); ++i )
    groups[rng() % children].push_back( shuffled[i] );

  std::vector<Node> nodes;
  for ( auto& g : groups )
  {
    std::sort( g.begin(), g.end() );
    nodes.push_back( random_rof_node( rng, g, op_index ) );
  }
  return Node::gate( op, std::move( nodes ) );
}

} // namespace

SuiteReport check_rof_round_trip( const SuiteOptions& opts )
{
  SuiteReport report;
  report.name = "rof-round-trip";
  std::mt19937_64 rng( opts.seed );
  for ( int trial = 0; trial < 500; ++trial )
  {
    const int n = 2 + int( rng() % 7 ); // 2..8
    std::vector<int> vars( n );
    for ( int i = 0; i < n; ++i )
      vars[i] = i;
    Formula generated;
    generated.n = n;
    generated.root = random_rof_node( rng, vars, -1 );
    const auto tt = to_truth_table( generated );
    ++report.checked;

    const auto minimized = minimize_rof_xor( tt );
    if ( !minimized.ok() )
    {
      report.failures.push_back( "reject on a generated read-once formula: " +
                                 to_string( generated ) );
      continue;
    }
    if ( !equal_functional( to_truth_table( minimized->formula ), tt ) )
    {
      report.failures.push_back( "round trip changed the function: " + to_string( generated ) );
      continue;
    }
    const int generated_gates = gate_count( generated );
    if ( minimized->size > generated_gates )
      report.failures.push_back( "minimized gate count " + std::to_string( minimized->size ) +
                                 " exceeds the generator's " +
                                 std::to_string( generated_gates ) );
  }
  return report;
}

// --- criterion 7 ------------------------------------------------------------

namespace
{

TruthTable random_unate_nonconstant( std::mt19937_64& rng, int n )
{
  while ( true )
  {
    // random monotone closure of up to three points, then a random shift
    std::vector<std::uint8_t> bits( std::size_t( 1 ) << n, 0 );
    const int anchors = 1 + int( rng() % 3 );
    for ( int i = 0; i < anchors; ++i )
    {
      const std::uint32_t y = std::uint32_t( rng() % bits.size() );
      for ( std::uint32_t x = 0; x < bits.size(); ++x )
      {
        if ( ( x & y ) == y )
          bits[x] = 1;
      }
    }
    TruthTable tt( n, std::move( bits ) );
    std::vector<std::uint8_t> shifted( tt.bits.size() );
    const std::uint32_t a = std::uint32_t( rng() % tt.bits.size() );
    for ( std::uint32_t x = 0; x < tt.bits.size(); ++x )
      shifted[x] = tt.bits[x ^ a];
    TruthTable out( n, std::move( shifted ) );
    if ( !is_constant( out ) )
      return out;
  }
}

TruthTable random_affine_indicator( std::mt19937_64& rng, int n )
{
  const int dim = int( rng() % std::min( n + 1, 4 ) );
  std::vector<std::uint32_t> basis;
  std::vector<gf2::row_t> rows;
  while ( static_cast<int>( basis.size() ) < dim )
  {
    const std::uint32_t v = std::uint32_t( rng() % ( std::size_t( 1 ) << n ) );
    if ( v == 0 || gf2::in_span( v, rows, n ) )
      continue;
    basis.push_back( v );
    rows = gf2::rref(
        [&] {
          auto r = rows;
          r.push_back( gf2::make_row( v, 0, n ) );
          return r;
        }(),
        n );
  }
  const std::uint32_t shift = std::uint32_t( rng() % ( std::size_t( 1 ) << n ) );
  std::vector<std::uint8_t> bits( std::size_t( 1 ) << n, 0 );
  for ( std::uint32_t combo = 0; combo < ( std::uint32_t( 1 ) << dim ); ++combo )
  {
    std::uint32_t x = shift;
    for ( int i = 0; i < dim; ++i )
    {
      if ( ( combo >> i ) & 1u )
        x ^= basis[i];
    }
    bits[x] = 1;
  }
  return TruthTable( n, std::move( bits ) );
}

int udnf_leaves( const TruthTable& tt )
{
  auto r = minimize_unate_dnf( tt );
  if ( !r.ok() )
    throw std::logic_error( "expected a unate function" );
  return leaf_count( r->formula );
}

int ucnf_leaves( const TruthTable& tt )
{
  auto r = minimize_unate_cnf( tt );
  if ( !r.ok() )
    throw std::logic_error( "expected a unate function" );
  return leaf_count( r->formula );
}

} // namespace

SuiteReport check_direct_products( const SuiteOptions& opts )
{
  SuiteReport report;
  report.name = "direct-products";
  std::mt19937_64 rng( opts.seed );

  for ( int trial = 0; trial < 200; ++trial )
  {
    const int n1 = 1 + int( rng() % 4 );
    const int n2 = 1 + int( rng() % std::min( 4, 8 - n1 ) );

    // boolean lemma on unate factors
    {
      const auto f1 = random_unate_nonconstant( rng, n1 );
      const auto f2 = random_unate_nonconstant( rng, n2 );
      const auto conj = combine_disjoint( f1, f2, '&' );
      ++report.checked;
      if ( ucnf_leaves( conj ) != ucnf_leaves( f1 ) + ucnf_leaves( f2 ) )
        report.failures.push_back( "uCNF additivity failed on " + to_string( f1 ) + " & " +
                                   to_string( f2 ) );
      if ( udnf_leaves( conj ) < udnf_leaves( f1 ) + udnf_leaves( f2 ) )
        report.failures.push_back( "uDNF superadditivity failed on " + to_string( f1 ) + " & " +
                                   to_string( f2 ) );
    }

    // arithmetic lemma
    {
      // the lemma assumes non-constant factors
      auto draw = [&]( int n ) {
        while ( true )
        {
          const TruthTable f = ( rng() & 1u ) ? random_affine_indicator( rng, n )
                                              : random_nonconstant_table( rng, n );
          if ( !is_constant( f ) )
            return f;
        }
      };
      const TruthTable f1 = draw( n1 );
      const TruthTable f2 = draw( n2 );
      const auto prod = combine_disjoint( f1, f2, '&' );
      const auto sum = combine_disjoint( f1, f2, '^' );
      ++report.checked;

      const auto pi1 = minimize_pi2a( f1 );
      const auto pi2 = minimize_pi2a( f2 );
      const auto pi_prod = minimize_pi2a( prod );
      if ( pi1.ok() && pi2.ok() )
      {
        if ( !pi_prod.ok() || pi_prod->size != pi1->size + pi2->size )
          report.failures.push_back( "Pi2A additivity over products failed on " +
                                     to_string( f1 ) + " & " + to_string( f2 ) );
      }
      else if ( pi_prod.ok() && count_ones( prod ) > 0 )
      {
        report.failures.push_back( "Pi2A accepted a product with a non-affine factor: " +
                                   to_string( f1 ) + " & " + to_string( f2 ) );
      }

      if ( sigma2a( prod ).size < sigma2a( f1 ).size + sigma2a( f2 ).size )
        report.failures.push_back( "Sigma2A superadditivity over products failed on " +
                                   to_string( f1 ) + " & " + to_string( f2 ) );

      if ( sigma2a( sum ).size != sigma2a( f1 ).size + sigma2a( f2 ).size )
        report.failures.push_back( "Sigma2A additivity over sums failed on " + to_string( f1 ) +
                                   " ^ " + to_string( f2 ) );

      const auto pi_sum = minimize_pi2a( sum );
      if ( pi_sum.ok() )
      {
        if ( !pi1.ok() || !pi2.ok() || pi_sum->size < pi1->size + pi2->size )
          report.failures.push_back( "Pi2A superadditivity over sums failed on " +
                                     to_string( f1 ) + " ^ " + to_string( f2 ) );
      }
    }
  }
  return report;
}

// --- criterion 8 ------------------------------------------------------------

SuiteReport check_pi2a_basis( const SuiteOptions& opts )
{
  SuiteReport report;
  report.name = "pi2a-basis";
  std::mt19937_64 rng( opts.seed );
  for ( int trial = 0; trial < 100; ++trial )
  {
    const int n = 4 + int( rng() % 5 ); // 4..8
    const int dim = 1 + int( rng() % 4 );
    std::vector<std::uint32_t> generators;
    std::vector<gf2::row_t> rows;
    while ( static_cast<int>( generators.size() ) < dim )
    {
      const std::uint32_t v = std::uint32_t( rng() % ( std::size_t( 1 ) << n ) );
      if ( v == 0 || gf2::in_span( v, rows, n ) )
        continue;
      generators.push_back( v );
      rows = gf2::rref(
          [&] {
            auto r = rows;
            r.push_back( gf2::make_row( v, 0, n ) );
            return r;
          }(),
          n );
    }

    // the greedy sees the whole span, matching the Pi2A candidate pool
    std::vector<std::uint32_t> span;
    for ( std::uint32_t combo = 1; combo < ( std::uint32_t( 1 ) << dim ); ++combo )
    {
      std::uint32_t v = 0;
      for ( int i = 0; i < dim; ++i )
      {
        if ( ( combo >> i ) & 1u )
          v ^= generators[i];
      }
      span.push_back( v );
    }

    const auto greedy = gf2::min_weight_basis( span, n );
    int greedy_weight = 0;
    for ( auto v : greedy )
      greedy_weight += std::popcount( v );
    const int exhaustive = oracles::min_weight_basis_exhaustive( generators, n );
    ++report.checked;
    if ( greedy_weight != exhaustive )
      report.failures.push_back( "greedy weight " + std::to_string( greedy_weight ) +
                                 " != exhaustive " + std::to_string( exhaustive ) +
                                 " (n=" + std::to_string( n ) + ", dim=" + std::to_string( dim ) +
                                 ")" );
  }
  return report;
}

// --- criterion 9 ------------------------------------------------------------

SuiteReport check_uf2_f2a_oracle( const SuiteOptions& opts )
{
  SuiteReport report;
  report.name = "uf2-f2a-oracle";
  (void)opts;
  const auto unate = oracles::enumerate_unate_leaves( 3 );
  const auto arith = oracles::enumerate_arithmetic_leaves( 3 );

  for ( std::size_t f = 0; f < 256; ++f )
  {
    const auto tt = table_from_bits( 3, f );
    report.checked += 2;

    const auto uf2 = minimize_uf2( tt );
    const int expected_uf2 = unate.uf2[f];
    if ( uf2.ok() != ( expected_uf2 >= 0 ) ||
         ( uf2.ok() && uf2->size != expected_uf2 ) )
      report.failures.push_back(
          "uf2 " + ( uf2.ok() ? std::to_string( uf2->size ) : std::string( "reject" ) ) +
          " != oracle " +
          ( expected_uf2 >= 0 ? std::to_string( expected_uf2 ) : std::string( "none" ) ) +
          " on " + to_string( tt ) );

    const auto f2a = minimize_f2a( tt );
    if ( f2a.size != arith.f2a[f] )
      report.failures.push_back( "f2a " + std::to_string( f2a.size ) + " != oracle " +
                                 std::to_string( arith.f2a[f] ) + " on " + to_string( tt ) );

    // depth-2 building blocks against the same enumeration
    const auto dnf = minimize_unate_dnf( tt );
    if ( dnf.ok() != ( unate.udnf[f] >= 0 ) ||
         ( dnf.ok() && leaf_count( dnf->formula ) != unate.udnf[f] ) )
      report.failures.push_back( "unate DNF leaves mismatch on " + to_string( tt ) );
    const auto pi = minimize_pi2a( tt );
    const bool oracle_pi = arith.pi2a[f] >= 0 && f != 0; // the zero function has no product form
    if ( pi.ok() != oracle_pi || ( pi.ok() && pi->size != arith.pi2a[f] ) )
      report.failures.push_back( "pi2a mismatch on " + to_string( tt ) );
    if ( sigma2a( tt ).size != arith.sigma2a[f] )
      report.failures.push_back( "sigma2a mismatch on " + to_string( tt ) );
  }
  return report;
}

// --- criterion 10 -----------------------------------------------------------

SuiteReport check_obdd_ordering( const SuiteOptions& opts )
{
  SuiteReport report;
  report.name = "obdd-orders";
  std::mt19937_64 rng( opts.seed );
  for ( int n = 1; n <= 5; ++n )
  {
    for ( int trial = 0; trial < 50; ++trial )
    {
      const auto tt = random_table( rng, n );
      ++report.checked;
      const auto optimal = obdd_optimal_order( tt );
      const int brute = oracles::min_obdd_size_all_orders( tt );
      if ( optimal.size != brute )
      {
        report.failures.push_back( "optimal order size " + std::to_string( optimal.size ) +
                                   " != brute force " + std::to_string( brute ) + " on " +
                                   to_string( tt ) );
        continue;
      }
      const auto built = obdd_build( tt, optimal.order );
      if ( built.size() != optimal.size )
        report.failures.push_back( "reported size does not match the built diagram on " +
                                   to_string( tt ) );
    }
  }
  return report;
}

// --- criterion 11 -----------------------------------------------------------

SuiteReport check_mubp_characterization( const SuiteOptions& opts )
{
  SuiteReport report;
  report.name = "mubp-characterization";
  for ( int n = 1; n <= 4; ++n )
  {
    SuiteReport partial;
    parallel_sweep(
        std::size_t( 1 ) << ( 1 << n ), resolve_threads( opts ), partial,
        [n]( std::size_t f, std::vector<std::string>& failures ) {
          const auto tt = table_from_bits( n, std::uint64_t( f ) );
          const auto mubp = mubp_construct( tt );
          const bool width1 = oracles::width1_obdd_exists( tt );
          if ( mubp.ok() != width1 )
          {
            failures.push_back( "mubp " + std::string( mubp.ok() ? "accepts" : "rejects" ) +
                                " but width-1 OBDD " + ( width1 ? "exists" : "does not exist" ) +
                                " on " + to_string( tt ) );
            return;
          }
          if ( !mubp.ok() )
            return;
          const auto support = reduce_to_support( tt ).support;
          if ( mubp->size() != static_cast<int>( support.size() ) )
          {
            failures.push_back( "mubp node count != support size on " + to_string( tt ) );
            return;
          }
          for ( std::uint32_t a = 0; a < tt.bits.size(); ++a )
          {
            if ( evaluate( *mubp.value, a ) != ( tt.bits[a] != 0 ) )
            {
              failures.push_back( "mubp does not reproduce the table on " + to_string( tt ) );
              return;
            }
          }
        } );
    report.checked += partial.checked;
    for ( auto& f : partial.failures )
      report.failures.push_back( std::move( f ) );
  }
  return report;
}

// --- criterion 12 -----------------------------------------------------------

SuiteReport check_reductions( const SuiteOptions& opts )
{
  SuiteReport report;
  report.name = "reductions";
  const auto tree = verify_tree_reduction_batch( opts.seed, 50 );
  report.checked += tree.checks;
  for ( const auto& f : tree.failures )
    report.failures.push_back( "tree reduction: " + f );
  const auto dnf = verify_dnf_reduction_all( 6 );
  report.checked += dnf.checks;
  for ( const auto& f : dnf.failures )
    report.failures.push_back( "dnf reduction: " + f );
  return report;
}

// --- dispatch ----------------------------------------------------------------

std::vector<std::string> suite_names()
{
  return { "trichotomy", "oracles", "reductions", "obdd-orders" };
}

SuiteReport run_suite( const std::string& name, const SuiteOptions& opts )
{
  if ( name == "trichotomy" )
    return check_trichotomy( opts );
  if ( name == "oracles" )
  {
    SuiteReport report;
    report.name = "oracles";
    for ( const auto& sub :
          { check_tree_oracles( opts ), check_ldt_c_degeneration( opts ),
            check_ldl_size_law( opts ) } )
    {
      report.checked += sub.checked;
      for ( const auto& f : sub.failures )
        report.failures.push_back( sub.name + ": " + f );
    }
    return report;
  }
  if ( name == "reductions" )
    return check_reductions( opts );
  if ( name == "obdd-orders" )
    return check_obdd_ordering( opts );
  throw std::invalid_argument( "unknown suite: " + name );
}

} // namespace ttmin
