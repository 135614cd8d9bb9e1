#include <doctest.h>

#include <stdexcept>

#include "ttmin/formulas.hpp"
#include "ttmin/oracles.hpp"

#include <bit>
#include <random>

using namespace ttmin;

namespace
{

const TruthTable and2 = parse_truth_table( "0001" );
const TruthTable or2 = parse_truth_table( "0111" );
const TruthTable parity2 = parse_truth_table( "0110" );
const TruthTable nand2 = parse_truth_table( "1110" );
const TruthTable maj3 = parse_truth_table( "00010111" );
const TruthTable parity3 = parse_truth_table( "01101001" );

TruthTable table_of( int n, std::uint64_t bits )
{
  std::vector<std::uint8_t> v( std::size_t( 1 ) << n );
  for ( std::size_t i = 0; i < v.size(); ++i )
    v[i] = std::uint8_t( ( bits >> i ) & 1 );
  return TruthTable( n, std::move( v ) );
}

} // namespace

TEST_CASE( "monotone DNF minimization" )
{
  auto maj = minimize_monotone_dnf( maj3 );
  REQUIRE( maj.ok() );
  CHECK( maj->size == 3 );
  CHECK( to_algebraic( maj->formula ) == "x1*x2 + x1*x3 + x2*x3" );

  auto a = minimize_monotone_dnf( and2 );
  REQUIRE( a.ok() );
  CHECK( a->size == 1 );

  CHECK_FALSE( minimize_monotone_dnf( parity2 ).ok() );

  // constants: empty DNF and the empty term
  auto zero = minimize_monotone_dnf( parse_truth_table( "0000" ) );
  REQUIRE( zero.ok() );
  CHECK( zero->size == 0 );
  auto one = minimize_monotone_dnf( parse_truth_table( "1111" ) );
  REQUIRE( one.ok() );
  CHECK( one->size == 1 );
  CHECK( leaf_count( one->formula ) == 0 );
}

TEST_CASE( "unate orientation" )
{
  // !x1 & x2
  const auto f = parse_truth_table( "0010" );
  auto orientation = find_unate_orientation( f );
  REQUIRE( orientation.ok() );
  CHECK( orientation->shift == 0b01 );

  auto maj = find_unate_orientation( maj3 );
  REQUIRE( maj.ok() );
  CHECK( maj->shift == 0 );

  CHECK_FALSE( find_unate_orientation( parity2 ).ok() );
}

TEST_CASE( "unate DNF and CNF" )
{
  auto f = minimize_unate_dnf( parse_truth_table( "0010" ) );
  REQUIRE( f.ok() );
  CHECK( f->size == 1 );
  CHECK( to_algebraic( f->formula ) == "!x1*x2" );

  auto or_cnf = minimize_unate_cnf( or2 );
  REQUIRE( or_cnf.ok() );
  CHECK( or_cnf->size == 1 );
  CHECK( to_algebraic( or_cnf->formula ) == "x1 + x2" );

  auto maj_cnf = minimize_unate_cnf( maj3 );
  REQUIRE( maj_cnf.ok() );
  CHECK( maj_cnf->size == 3 );

  CHECK_FALSE( minimize_unate_dnf( parity2 ).ok() );
}

TEST_CASE( "read-once over and/or/xor" )
{
  auto p3 = minimize_rof_xor( parity3 );
  REQUIRE( p3.ok() );
  CHECK( p3->size == 1 );
  CHECK( equal_functional( to_truth_table( p3->formula ), parity3 ) );

  // (x1 & x2) ^ x3  ->  "00011110"... computed: x3=0 half is AND2, x3=1 half is NAND2
  const auto mixed = parse_truth_table( "00011110" );
  auto m = minimize_rof_xor( mixed );
  REQUIRE( m.ok() );
  CHECK( m->size == 2 );
  CHECK( equal_functional( to_truth_table( m->formula ), mixed ) );

  auto rejected = minimize_rof_xor( maj3 );
  CHECK_FALSE( rejected.ok() );
  CHECK( rejected.reason == "indecomposable" );

  CHECK_FALSE( minimize_rof_xor( parse_truth_table( "11" ) ).ok() );
}

TEST_CASE( "boolean read-once formulas" )
{
  // (x1 | x2) & x3
  auto f = minimize_boolean_rof( parse_truth_table( "00000111" ) );
  REQUIRE( f.ok() );
  CHECK( to_string( f->formula ) == "(and (or x1 x2) x3)" );

  CHECK_FALSE( minimize_boolean_rof( parity2 ).ok() );

  auto literal = minimize_boolean_rof( parse_truth_table( "10" ) );
  REQUIRE( literal.ok() );
  CHECK( to_string( literal->formula ) == "!x1" );
  CHECK( literal->size == 0 );
}

namespace
{

/// random read-once formula over {and, or, xor}
Formula::Node random_rof_xor_node( std::mt19937_64& rng, const std::vector<int>& vars,
                                   int forbidden )
{
  using Node = Formula::Node;
  if ( vars.size() == 1 )
    return Node::leaf( vars[0], ( rng() & 1u ) != 0 );
  int op_index;
  do
  {
    op_index = int( rng() % 3 );
  } while ( op_index == forbidden );
  auto shuffled = vars;
  for ( std::size_t i = shuffled.size(); i > 1; --i )
    std::swap( shuffled[i - 1], shuffled[rng() % i] );
  const int children = 2 + int( rng() % int( std::min<std::size_t>( shuffled.size(), 3 ) - 1 ) );
  std::vector<std::vector<int>> groups( children );
  for ( int c = 0; c < children; ++c )
    groups[c].push_back( shuffled[c] );
  for ( std::size_t i = children; i < shuffled.size(); ++i )
    groups[rng() % children].push_back( shuffled[i] );
  std::vector<Node> nodes;
  for ( auto& g : groups )
  {
    std::sort( g.begin(), g.end() );
    nodes.push_back( random_rof_xor_node( rng, g, op_index ) );
  }
  const auto op = op_index == 0 ? Formula::Op::And : op_index == 1 ? Formula::Op::Or
                                                                   : Formula::Op::Xor;
  return Node::gate( op, std::move( nodes ) );
}

/// random read-once formula over {and, or}; every variable labels one leaf
Formula::Node random_bool_rof( std::mt19937_64& rng, const std::vector<int>& vars,
                               int forbidden )
{
  using Node = Formula::Node;
  if ( vars.size() == 1 )
    return Node::leaf( vars[0], ( rng() & 1u ) != 0 );
  const int op_index = forbidden < 0 ? int( rng() % 2 ) : 1 - forbidden;
  auto shuffled = vars;
  for ( std::size_t i = shuffled.size(); i > 1; --i )
    std::swap( shuffled[i - 1], shuffled[rng() % i] );
  const int children = 2 + int( rng() % int( std::min<std::size_t>( shuffled.size(), 3 ) - 1 ) );
  std::vector<std::vector<int>> groups( children );
  for ( int c = 0; c < children; ++c )
    groups[c].push_back( shuffled[c] );
  for ( std::size_t i = children; i < shuffled.size(); ++i )
    groups[rng() % children].push_back( shuffled[i] );
  std::vector<Node> nodes;
  for ( auto& g : groups )
  {
    std::sort( g.begin(), g.end() );
    nodes.push_back( random_bool_rof( rng, g, op_index ) );
  }
  return Node::gate( op_index == 0 ? Formula::Op::And : Formula::Op::Or, std::move( nodes ) );
}

} // namespace

TEST_CASE( "read-once canonicity round trip" )
{
  std::mt19937_64 rng( 5 );
  for ( int trial = 0; trial < 500; ++trial )
  {
    const int n = 2 + int( rng() % 7 );
    std::vector<int> vars( n );
    for ( int i = 0; i < n; ++i )
      vars[i] = i;
    Formula generated;
    generated.n = n;
    generated.root = random_bool_rof( rng, vars, -1 );
    const auto tt = to_truth_table( generated );

    auto first = minimize_boolean_rof( tt );
    REQUIRE( first.ok() );
    CHECK( equal_functional( to_truth_table( first->formula ), tt ) );
    auto again = minimize_boolean_rof( to_truth_table( first->formula ) );
    REQUIRE( again.ok() );
    CHECK( to_string( again->formula ) == to_string( first->formula ) );
  }
}

TEST_CASE( "flip is a function-preserving involution" )
{
  auto rof = minimize_boolean_rof( parse_truth_table( "00000111" ) );
  REQUIRE( rof.ok() );
  const auto base = rof->formula; // (and (or x1 x2) x3)

  const auto flipped_root = flip( base, 0 );
  CHECK( to_string( flipped_root ) == "(not (or (not (or x1 x2)) !x3))" );
  CHECK( equal_functional( to_truth_table( flipped_root ), to_truth_table( base ) ) );
  // flipping the same gate again (now at preorder index 1) restores the formula
  CHECK( to_string( flip( flipped_root, 1 ) ) == to_string( base ) );

  const auto flipped_inner = flip( base, 1 );
  CHECK( equal_functional( to_truth_table( flipped_inner ), to_truth_table( base ) ) );

  CHECK_THROWS_AS( flip( base, 2 ), std::invalid_argument ); // a leaf

  // random formulas: flips preserve the function and undo themselves
  std::mt19937_64 rng( 31 );
  int trials = 0;
  while ( trials < 1000 )
  {
    const int n = 2 + int( rng() % 5 );
    const auto tt = table_of( n, rng() );
    auto r = minimize_boolean_rof( tt );
    if ( !r.ok() || gate_count( r->formula ) == 0 )
      continue;
    const std::string original = to_string( r->formula );
    for ( int node = 0; node < gate_count( r->formula ) + leaf_count( r->formula ); ++node )
    {
      Formula flipped;
      try
      {
        flipped = flip( r->formula, node );
      }
      catch ( const std::invalid_argument& )
      {
        continue;
      }
      ++trials;
      CHECK( equal_functional( to_truth_table( flipped ), tt ) );
      // the gate moved by at most one preorder slot (a not appeared or vanished)
      bool undone = false;
      for ( int back : { node - 1, node, node + 1 } )
      {
        if ( back < 0 )
          continue;
        try
        {
          if ( to_string( flip( flipped, back ) ) == original )
          {
            undone = true;
            break;
          }
        }
        catch ( const std::invalid_argument& )
        {
        }
      }
      CHECK( undone );
    }
  }
}

TEST_CASE( "costly negations for boolean read-once" )
{
  // !x1 & !x2: one flip beats two leaf negations
  auto f = minimize_rof_neg( parse_truth_table( "1000" ) );
  REQUIRE( f.ok() );
  CHECK( f->size == 2 ); // one gate + one negation
  CHECK( to_string( f->formula ) == "(not (or x1 x2))" );

  auto clean = minimize_rof_neg( and2 );
  REQUIRE( clean.ok() );
  CHECK( clean->size == 1 );
  CHECK( not_count( clean->formula ) == 0 );

  auto literal = minimize_rof_neg( parse_truth_table( "10" ) );
  REQUIRE( literal.ok() );
  CHECK( literal->size == 1 );
  CHECK( to_string( literal->formula ) == "(not x1)" );
}

TEST_CASE( "fixed negation pattern read-once" )
{
  // complement of parity needs one negated input
  const auto nparity = parse_truth_table( "1001" );
  auto withneg = minimize_rof_xor_a( nparity, 0b01 );
  REQUIRE( withneg.ok() );
  CHECK( equal_functional( to_truth_table( withneg->formula ), nparity ) );
  CHECK_FALSE( minimize_rof_xor_a( nparity, 0 ).ok() );
  CHECK_FALSE( minimize_rof_xor_a( parity2, 0b01 ).ok() );
  CHECK( minimize_rof_xor_a( parity2, 0 ).ok() );

  auto a = minimize_rof_xor_a( and2, 0 );
  REQUIRE( a.ok() );
  CHECK( to_string( a->formula ) == "(and x1 x2)" );

  CHECK_FALSE( minimize_rof_xor_a( nand2, 0 ).ok() );
}

TEST_CASE( "costly negations over and/or/xor" )
{
  auto nand = minimize_rof_xor_neg( nand2 );
  REQUIRE( nand.ok() );
  CHECK( nand->size == 2 );
  CHECK( not_count( nand->formula ) == 1 );
  CHECK( equal_functional( to_truth_table( nand->formula ), nand2 ) );

  auto p = minimize_rof_xor_neg( parity2 );
  REQUIRE( p.ok() );
  CHECK( p->size == 1 );
  CHECK( not_count( p->formula ) == 0 );

  CHECK_FALSE( minimize_rof_xor_neg( maj3 ).ok() );
}

TEST_CASE( "unate formulas of order two" )
{
  // (x1 | x2) & (x3 | x4)
  std::vector<std::uint8_t> bits( 16 );
  for ( std::uint32_t x = 0; x < 16; ++x )
  {
    const int left = ( x & 1 ) || ( x & 2 );
    const int right = ( x & 4 ) || ( x & 8 );
    bits[x] = std::uint8_t( left && right );
  }
  auto layered = minimize_uf2( TruthTable( 4, std::move( bits ) ) );
  REQUIRE( layered.ok() );
  CHECK( layered->size == 4 );

  auto maj = minimize_uf2( maj3 );
  REQUIRE( maj.ok() );
  CHECK( maj->size == 6 );

  auto a = minimize_uf2( and2 );
  REQUIRE( a.ok() );
  CHECK( a->size == 2 );

  CHECK_FALSE( minimize_uf2( parity2 ).ok() );
  CHECK_FALSE( minimize_uf2( parse_truth_table( "1111" ) ).ok() );
}

TEST_CASE( "products of affine forms" )
{
  auto a = minimize_pi2a( and2 );
  REQUIRE( a.ok() );
  CHECK( a->size == 2 );
  CHECK( to_algebraic( a->formula ) == "x1*x2" );

  auto xor_ind = minimize_pi2a( parity2 );
  REQUIRE( xor_ind.ok() );
  CHECK( xor_ind->size == 2 );
  CHECK( to_algebraic( xor_ind->formula ) == "x1 + x2" );

  CHECK_FALSE( minimize_pi2a( or2 ).ok() );
  CHECK_FALSE( minimize_pi2a( parse_truth_table( "0000" ) ).ok() );
  auto one = minimize_pi2a( parse_truth_table( "1111" ) );
  REQUIRE( one.ok() );
  CHECK( one->size == 0 );
}

TEST_CASE( "sums of monomials" )
{
  CHECK( sigma2a( or2 ).size == 4 );
  CHECK( sigma2a( parity3 ).size == 3 );
  CHECK( sigma2a( TruthTable( 0, { 1 } ) ).size == 0 );
}

TEST_CASE( "second-order arithmetic formulas" )
{
  // x1 x2 + x3
  const auto f = parse_truth_table( "00011110" );
  auto r = minimize_f2a( f );
  CHECK( r.size == 3 );
  CHECK( equal_functional( to_truth_table( r.formula ), f ) );

  auto nand = minimize_f2a( nand2 );
  CHECK( nand.size == 2 );
  CHECK( equal_functional( to_truth_table( nand.formula ), nand2 ) );

  CHECK( minimize_f2a( parity3 ).size == 3 );
  CHECK( minimize_f2a( parse_truth_table( "0000" ) ).size == 0 );
}

TEST_CASE( "every accepted formula reproduces its table" )
{
  std::mt19937_64 rng( 17 );
  for ( int trial = 0; trial < 300; ++trial )
  {
    const int n = 1 + int( rng() % 4 );
    const auto tt = table_of( n, rng() );
    for ( const auto& r :
          { minimize_monotone_dnf( tt ), minimize_unate_dnf( tt ), minimize_unate_cnf( tt ),
            minimize_rof_xor( tt ), minimize_boolean_rof( tt ), minimize_uf2( tt ),
            minimize_pi2a( tt ), minimize_rof_neg( tt ), minimize_rof_xor_neg( tt ) } )
    {
      if ( r.ok() )
        CHECK( equal_functional( to_truth_table( r->formula ), tt ) );
    }
    CHECK( equal_functional( to_truth_table( sigma2a( tt ).formula ), tt ) );
    CHECK( equal_functional( to_truth_table( minimize_f2a( tt ).formula ), tt ) );
  }
}

namespace
{

/// Leaf positions and gate count of a read-once skeleton, preorder.
void collect_skeleton( const Formula::Node& node, std::vector<int>& leaves, int& gates )
{
  if ( node.op == Formula::Op::Leaf )
  {
    leaves.push_back( node.var );
    return;
  }
  ++gates;
  for ( const auto& c : node.children )
    collect_skeleton( c, leaves, gates );
}

/// Applies a label choice (and/or per gate, preorder) and negation bits
/// (per leaf, preorder, plus one root bit) to a read-once skeleton.
Formula::Node relabel( const Formula::Node& node, const std::vector<int>& labels, int& gate_i,
                       const std::vector<int>& leaf_neg, int& leaf_i )
{
  using Node = Formula::Node;
  if ( node.op == Formula::Op::Leaf )
    return Node::leaf( node.var, leaf_neg[leaf_i++] != 0 );
  const auto op = labels[gate_i++] ? Formula::Op::Or : Formula::Op::And;
  std::vector<Node> children;
  for ( const auto& c : node.children )
    children.push_back( relabel( c, labels, gate_i, leaf_neg, leaf_i ) );
  return Node::gate( op, std::move( children ) );
}

} // namespace

TEST_CASE( "costly negation sweep matches skeleton enumeration" )
{
  // every costed-negation formula shares the read-once skeleton; enumerate
  // all and/or labelings and all leaf/root negation placements directly
  std::mt19937_64 rng( 97 );
  int trials = 0;
  while ( trials < 150 )
  {
    const int n = 2 + int( rng() % 5 );
    std::vector<int> vars( n );
    for ( int i = 0; i < n; ++i )
      vars[i] = i;
    Formula generated;
    generated.n = n;
    generated.root = random_bool_rof( rng, vars, -1 );
    const auto tt = to_truth_table( generated );
    ++trials;

    auto minimized = minimize_rof_neg( tt );
    REQUIRE( minimized.ok() );

    std::vector<int> leaves;
    int gates = 0;
    collect_skeleton( generated.root, leaves, gates );

    int best = -1;
    for ( std::uint32_t labels = 0; labels < ( 1u << gates ); ++labels )
    {
      std::vector<int> label_bits( gates );
      for ( int g = 0; g < gates; ++g )
        label_bits[g] = int( ( labels >> g ) & 1u );
      for ( std::uint32_t negs = 0; negs < ( 1u << ( leaves.size() + 1 ) ); ++negs )
      {
        std::vector<int> leaf_neg( leaves.size() );
        for ( std::size_t l = 0; l < leaves.size(); ++l )
          leaf_neg[l] = int( ( negs >> l ) & 1u );
        const bool root_neg = ( negs >> leaves.size() ) & 1u;

        int gate_i = 0, leaf_i = 0;
        Formula cand;
        cand.n = n;
        cand.root = relabel( generated.root, label_bits, gate_i, leaf_neg, leaf_i );
        if ( root_neg )
          cand.root = Formula::Node::gate( Formula::Op::Not, { std::move( cand.root ) } );
        if ( !equal_functional( to_truth_table( cand ), tt ) )
          continue;
        const int size = gates + not_count( cand ) +
                         [&] {
                           int negated_leaves = 0;
                           for ( auto b : leaf_neg )
                             negated_leaves += b;
                           return negated_leaves;
                         }();
        if ( best < 0 || size < best )
          best = size;
      }
    }
    REQUIRE( best >= 0 );
    CHECK( minimized->size == best );
  }
}

namespace
{

struct XorNegSkeleton
{
  struct SkNode
  {
    bool leaf = false;
    int var = -1;
    int parent = -1;
    std::vector<int> children;
  };
  std::vector<SkNode> nodes;
  std::vector<int> gates;

  int build( const Formula::Node& n, int parent )
  {
    const int id = static_cast<int>( nodes.size() );
    nodes.push_back( {} );
    nodes[id].parent = parent;
    if ( n.op == Formula::Op::Leaf )
    {
      nodes[id].leaf = true;
      nodes[id].var = n.var;
    }
    else
    {
      gates.push_back( id );
      for ( const auto& c : n.children )
      {
        const int child = build( c, id );
        nodes[id].children.push_back( child );
      }
    }
    return id;
  }

  // label: 0 and, 1 or, 2 xor per gate; neg: bit per node = its parent edge
  bool eval( const std::vector<int>& label, std::uint32_t neg, std::uint32_t a, int id ) const
  {
    const auto& node = nodes[id];
    bool v;
    if ( node.leaf )
    {
      v = ( ( a >> node.var ) & 1u ) != 0;
    }
    else
    {
      int gate_index = 0;
      while ( gates[gate_index] != id )
        ++gate_index;
      const int op = label[gate_index];
      v = op == 0;
      for ( int c : node.children )
      {
        const bool cv = eval( label, neg, a, c );
        if ( op == 0 )
          v = v && cv;
        else if ( op == 1 )
          v = v || cv;
        else
          v = v != cv;
      }
    }
    if ( ( neg >> id ) & 1u )
      v = !v;
    return v;
  }
};

} // namespace

TEST_CASE( "xor costly negation sweep matches skeleton enumeration" )
{
  // enumerate every and/or/xor labeling of the read-once skeleton and
  // every negation placement that keeps negations away from edges between
  // two boolean gates; compare minimum sizes
  std::mt19937_64 rng( 271 );
  int trials = 0;
  while ( trials < 60 )
  {
    const int n = 2 + int( rng() % 3 );
    std::vector<int> vars( n );
    for ( int i = 0; i < n; ++i )
      vars[i] = i;
    Formula generated;
    generated.n = n;
    generated.root = random_rof_xor_node( rng, vars, -1 );
    const auto tt = to_truth_table( generated );

    const auto skeleton_source = minimize_rof_xor( tt );
    REQUIRE( skeleton_source.ok() );
    const auto minimized = minimize_rof_xor_neg( tt );
    REQUIRE( minimized.ok() );
    ++trials;

    XorNegSkeleton sk;
    sk.build( skeleton_source->formula.root, -1 );
    const int gate_count_sk = static_cast<int>( sk.gates.size() );

    std::vector<int> label( gate_count_sk, 0 );
    int best = -1;
    while ( true )
    {
      for ( std::uint32_t neg = 0; neg < ( 1u << sk.nodes.size() ); ++neg )
      {
        // negations may not sit between two and/or gates
        bool valid = true;
        for ( std::size_t id = 0; id < sk.nodes.size() && valid; ++id )
        {
          if ( !( ( neg >> id ) & 1u ) || sk.nodes[id].leaf )
            continue;
          int gi = 0;
          while ( sk.gates[gi] != static_cast<int>( id ) )
            ++gi;
          const int parent = sk.nodes[id].parent;
          if ( label[gi] == 2 || parent < 0 )
            continue;
          int pi = 0;
          while ( sk.gates[pi] != parent )
            ++pi;
          if ( label[pi] != 2 )
            valid = false;
        }
        if ( !valid )
          continue;

        bool computes = true;
        for ( std::uint32_t a = 0; a < tt.bits.size() && computes; ++a )
        {
          if ( sk.eval( label, neg, a, 0 ) != ( tt.bits[a] != 0 ) )
            computes = false;
        }
        if ( !computes )
          continue;
        const int size = gate_count_sk + std::popcount( neg );
        if ( best < 0 || size < best )
          best = size;
      }
      int g = 0;
      for ( ; g < gate_count_sk; ++g )
      {
        if ( ++label[g] < 3 )
          break;
        label[g] = 0;
      }
      if ( g == gate_count_sk )
        break;
    }

    REQUIRE( best >= 0 );
    CHECK( minimized->size == best );
  }
}
