#include "ttmin/formulas.hpp"
#include "ttmin/gf2.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace ttmin
{

Formula::Node Formula::Node::leaf( int v, bool neg )
{
  Node n;
  n.op = Op::Leaf;
  n.var = v;
  n.negated = neg;
  return n;
}

Formula::Node Formula::Node::constant( bool b )
{
  Node n;
  n.op = Op::Const;
  n.value = b;
  return n;
}

Formula::Node Formula::Node::gate( Op o, std::vector<Node> cs )
{
  Node n;
  n.op = o;
  n.children = std::move( cs );
  return n;
}

namespace
{

using Node = Formula::Node;
using Op = Formula::Op;

bool eval_node( const Node& node, std::uint32_t a )
{
  switch ( node.op )
  {
  case Op::Leaf:
    return ( ( a >> node.var ) & 1u ) != std::uint32_t( node.negated );
  case Op::Const:
    return node.value;
  case Op::Not:
    return !eval_node( node.children.front(), a );
  case Op::And:
  {
    for ( const auto& c : node.children )
      if ( !eval_node( c, a ) )
        return false;
    return true;
  }
  case Op::Or:
  {
    for ( const auto& c : node.children )
      if ( eval_node( c, a ) )
        return true;
    return false;
  }
  case Op::Xor:
  {
    bool acc = false;
    for ( const auto& c : node.children )
      acc ^= eval_node( c, a );
    return acc;
  }
  }
  return false;
}

template <typename Pred>
int count_nodes( const Node& node, Pred pred )
{
  int c = pred( node ) ? 1 : 0;
  for ( const auto& ch : node.children )
    c += count_nodes( ch, pred );
  return c;
}

void print_node( const Node& node, std::string& out )
{
  switch ( node.op )
  {
  case Op::Leaf:
    if ( node.negated )
      out += '!';
    out += 'x';
    out += std::to_string( node.var + 1 );
    return;
  case Op::Const:
    out += node.value ? '1' : '0';
    return;
  case Op::Not:
    out += "(not ";
    print_node( node.children.front(), out );
    out += ')';
    return;
  default:
    out += '(';
    out += node.op == Op::And ? "and" : node.op == Op::Or ? "or" : "xor";
    for ( const auto& c : node.children )
    {
      out += ' ';
      print_node( c, out );
    }
    out += ')';
    return;
  }
}

std::string leaf_text( const Node& n )
{
  std::string s;
  if ( n.negated )
    s += '!';
  s += 'x';
  s += std::to_string( n.var + 1 );
  return s;
}

void remap_leaf_vars( Node& node, const std::vector<int>& map )
{
  if ( node.op == Op::Leaf )
    node.var = map[node.var];
  for ( auto& c : node.children )
    remap_leaf_vars( c, map );
}

TruthTable shift_table( const TruthTable& tt, std::uint32_t a )
{
  std::vector<std::uint8_t> bits( tt.bits.size() );
  for ( std::uint32_t x = 0; x < bits.size(); ++x )
    bits[x] = tt.bits[x ^ a];
  return TruthTable( tt.n, std::move( bits ) );
}

TruthTable complement_table( const TruthTable& tt )
{
  TruthTable c = tt;
  for ( auto& b : c.bits )
    b ^= 1;
  return c;
}

} // namespace

bool evaluate( const Formula& f, std::uint32_t assignment )
{
  return eval_node( f.root, assignment );
}

TruthTable to_truth_table( const Formula& f )
{
  std::vector<std::uint8_t> bits( std::size_t( 1 ) << f.n );
  for ( std::uint32_t a = 0; a < bits.size(); ++a )
    bits[a] = eval_node( f.root, a );
  return TruthTable( f.n, std::move( bits ) );
}

int leaf_count( const Formula& f )
{
  return count_nodes( f.root, []( const Node& n ) { return n.op == Op::Leaf; } );
}

int gate_count( const Formula& f )
{
  return count_nodes( f.root, []( const Node& n ) {
    return n.op == Op::And || n.op == Op::Or || n.op == Op::Xor;
  } );
}

int not_count( const Formula& f )
{
  return count_nodes( f.root, []( const Node& n ) { return n.op == Op::Not; } );
}

int gate_count_with_not( const Formula& f )
{
  return gate_count( f ) + not_count( f );
}

std::string to_string( const Formula& f )
{
  std::string s;
  print_node( f.root, s );
  return s;
}

std::string to_algebraic( const Formula& f )
{
  const Node& r = f.root;
  if ( r.op == Op::Const )
    return r.value ? "1" : "0";
  if ( r.op == Op::Leaf )
    return leaf_text( r );

  auto term_text = [&]( const Node& t, char sep ) {
    if ( t.op == Op::Leaf )
      return leaf_text( t );
    if ( t.op == Op::Const )
      return std::string( t.value ? "1" : "0" );
    std::string s;
    for ( const auto& l : t.children )
    {
      if ( !s.empty() )
        s += sep;
      s += l.op == Op::Const ? std::string( l.value ? "1" : "0" ) : leaf_text( l );
    }
    return s;
  };

  std::string s;
  if ( r.op == Op::Or || r.op == Op::Xor )
  {
    for ( const auto& t : r.children )
    {
      if ( !s.empty() )
        s += " + ";
      s += term_text( t, '*' );
    }
    return s;
  }
  // a single term renders as a product of literals
  if ( std::all_of( r.children.begin(), r.children.end(), []( const Node& c ) {
         return c.op == Op::Leaf || c.op == Op::Const;
       } ) )
  {
    return term_text( r, '*' );
  }
  // product of clauses / affine forms
  for ( const auto& c : r.children )
  {
    if ( !s.empty() )
      s += "*";
    s += "(" + term_text( c, '+' ) + ")";
  }
  return s;
}

// ---------------------------------------------------------------------------
// depth-2 unate forms
// ---------------------------------------------------------------------------

namespace
{

bool is_monotone( const TruthTable& tt )
{
  for ( std::uint32_t a = 0; a < tt.bits.size(); ++a )
  {
    for ( int i = 0; i < tt.n; ++i )
    {
      const std::uint32_t b = a | ( std::uint32_t( 1 ) << i );
      if ( b != a && tt.bits[a] == 1 && tt.bits[b] == 0 )
        return false;
    }
  }
  return true;
}

/// Minimal true points of a monotone function, ascending.
std::vector<std::uint32_t> minimal_true_points( const TruthTable& tt )
{
  std::vector<std::uint32_t> points;
  for ( std::uint32_t a = 0; a < tt.bits.size(); ++a )
  {
    if ( !tt.bits[a] )
      continue;
    bool minimal = true;
    for ( int i = 0; i < tt.n && minimal; ++i )
    {
      const std::uint32_t bit = std::uint32_t( 1 ) << i;
      if ( ( a & bit ) && tt.bits[a ^ bit] )
        minimal = false;
    }
    if ( minimal )
      points.push_back( a );
  }
  return points;
}

Node dnf_from_terms( const std::vector<std::uint32_t>& terms, std::uint32_t shift, int n )
{
  std::vector<Node> term_nodes;
  for ( auto t : terms )
  {
    std::vector<Node> leaves;
    for ( int i = 0; i < n; ++i )
    {
      if ( ( t >> i ) & 1u )
        leaves.push_back( Node::leaf( i, ( ( shift >> i ) & 1u ) != 0 ) );
    }
    if ( leaves.empty() )
      term_nodes.push_back( Node::constant( true ) );
    else if ( leaves.size() == 1 )
      term_nodes.push_back( leaves.front() );
    else
      term_nodes.push_back( Node::gate( Op::And, std::move( leaves ) ) );
  }
  if ( term_nodes.empty() )
    return Node::constant( false );
  if ( term_nodes.size() == 1 )
    return term_nodes.front();
  return Node::gate( Op::Or, std::move( term_nodes ) );
}

} // namespace

Rejectable<MinimizedFormula> minimize_monotone_dnf( const TruthTable& tt )
{
  if ( !is_monotone( tt ) )
    return Rejectable<MinimizedFormula>::reject( "not monotone" );
  const auto terms = minimal_true_points( tt );
  MinimizedFormula out;
  out.formula.n = tt.n;
  out.formula.root = dnf_from_terms( terms, 0, tt.n );
  out.size = static_cast<int>( terms.size() );
  out.measure = "terms";
  return Rejectable<MinimizedFormula>::accept( std::move( out ) );
}

Rejectable<UnateOrientation> find_unate_orientation( const TruthTable& tt )
{
  std::uint32_t a = 0;
  for ( std::uint32_t x = 0; x < tt.bits.size(); ++x )
  {
    for ( int i = 0; i < tt.n; ++i )
    {
      const std::uint32_t bit = std::uint32_t( 1 ) << i;
      if ( !( x & bit ) && tt.bits[x] == 1 && tt.bits[x | bit] == 0 )
        a |= bit;
    }
  }
  if ( !is_monotone( shift_table( tt, a ) ) )
    return Rejectable<UnateOrientation>::reject( "not unate" );
  return Rejectable<UnateOrientation>::accept( UnateOrientation{ a } );
}

Rejectable<MinimizedFormula> minimize_unate_dnf( const TruthTable& tt )
{
  auto orientation = find_unate_orientation( tt );
  if ( !orientation.ok() )
    return Rejectable<MinimizedFormula>::reject( orientation.reason );
  const std::uint32_t a = orientation->shift;
  const auto terms = minimal_true_points( shift_table( tt, a ) );
  MinimizedFormula out;
  out.formula.n = tt.n;
  out.formula.root = dnf_from_terms( terms, a, tt.n );
  out.size = static_cast<int>( terms.size() );
  out.measure = "terms";
  return Rejectable<MinimizedFormula>::accept( std::move( out ) );
}

Rejectable<MinimizedFormula> minimize_unate_cnf( const TruthTable& tt )
{
  auto dnf = minimize_unate_dnf( complement_table( tt ) );
  if ( !dnf.ok() )
    return Rejectable<MinimizedFormula>::reject( dnf.reason );

  // De Morgan: or-of-ands over the complement becomes and-of-ors
  auto negate_literal = []( Node leaf ) {
    leaf.negated = !leaf.negated;
    return leaf;
  };
  const Node& root = dnf->formula.root;
  std::vector<Node> clauses;
  auto term_to_clause = [&]( const Node& term ) {
    if ( term.op == Op::Leaf )
      return negate_literal( term );
    if ( term.op == Op::Const )
      return Node::constant( !term.value );
    std::vector<Node> lits;
    for ( const auto& l : term.children )
      lits.push_back( negate_literal( l ) );
    return Node::gate( Op::Or, std::move( lits ) );
  };
  if ( root.op == Op::And || root.op == Op::Leaf || root.op == Op::Const )
    clauses.push_back( term_to_clause( root ) );
  else
    for ( const auto& t : root.children )
      clauses.push_back( term_to_clause( t ) );

  MinimizedFormula out;
  out.formula.n = tt.n;
  if ( clauses.size() == 1 )
    out.formula.root = clauses.front();
  else
    out.formula.root = Node::gate( Op::And, std::move( clauses ) );
  out.size = dnf->size;
  out.measure = "clauses";
  return Rejectable<MinimizedFormula>::accept( std::move( out ) );
}

// ---------------------------------------------------------------------------
// read-once formulas over {and, or} and {and, or, xor}
// ---------------------------------------------------------------------------

namespace
{

struct RofBuild
{
  bool ok = false;
  Node node;
  std::string reason;
};

/// Recursive read-once construction; tt must be non-constant and depend on
/// all of its variables.  Leaf variables are local and remapped by callers.
RofBuild rof_build( const TruthTable& tt, bool allow_xor )
{
  if ( tt.n == 1 )
  {
    RofBuild r;
    r.ok = true;
    r.node = Node::leaf( 0, tt.bits[0] == 1 );
    return r;
  }

  auto da = and_decompose( tt );
  auto dov = or_decompose( tt );
  auto dx = allow_xor ? xor_decompose( tt ) : std::nullopt;
  if ( int( da.has_value() ) + int( dov.has_value() ) + int( dx.has_value() ) > 1 )
    throw std::logic_error( "more than one decomposition fired" );

  const Decomposition* d = da ? &*da : dov ? &*dov : dx ? &*dx : nullptr;
  if ( !d )
  {
    RofBuild r;
    r.reason = "indecomposable";
    return r;
  }

  std::vector<Node> children;
  for ( std::size_t i = 0; i < d->factors.size(); ++i )
  {
    TruthTable factor = d->factors[i];
    if ( d->op == DecompOp::Xor && i == 0 && d->constant )
      factor = complement_table( factor );
    auto sub = rof_build( factor, allow_xor );
    if ( !sub.ok )
      return sub;
    remap_leaf_vars( sub.node, d->blocks[i] );
    children.push_back( std::move( sub.node ) );
  }
  const Op op = d->op == DecompOp::And ? Op::And : d->op == DecompOp::Or ? Op::Or : Op::Xor;
  RofBuild r;
  r.ok = true;
  r.node = Node::gate( op, std::move( children ) );
  return r;
}

Rejectable<MinimizedFormula> rof_minimize( const TruthTable& tt, bool allow_xor )
{
  if ( is_constant( tt ) )
    return Rejectable<MinimizedFormula>::reject( "constant" );
  auto reduced = reduce_to_support( tt );
  auto built = rof_build( reduced.table, allow_xor );
  if ( !built.ok )
    return Rejectable<MinimizedFormula>::reject( built.reason );
  remap_leaf_vars( built.node, reduced.support );
  MinimizedFormula out;
  out.formula.n = tt.n;
  out.formula.root = std::move( built.node );
  out.size = gate_count( out.formula );
  out.measure = "gates";
  return Rejectable<MinimizedFormula>::accept( std::move( out ) );
}

} // namespace

Rejectable<MinimizedFormula> minimize_rof_xor( const TruthTable& tt )
{
  return rof_minimize( tt, true );
}

Rejectable<MinimizedFormula> minimize_boolean_rof( const TruthTable& tt )
{
  return rof_minimize( tt, false );
}

// ---------------------------------------------------------------------------
// flips and costed negations
// ---------------------------------------------------------------------------

namespace
{

struct NodeLocation
{
  Node* node = nullptr;
  Node* parent = nullptr;
};

NodeLocation find_preorder( Node& node, Node* parent, int& counter, int target )
{
  if ( counter == target )
    return { &node, parent };
  ++counter;
  for ( auto& c : node.children )
  {
    if ( auto hit = find_preorder( c, &node, counter, target ); hit.node )
      return hit;
  }
  return {};
}

/// Toggle the negation on the edge to `child`.
Node toggle_edge( Node child )
{
  if ( child.op == Op::Leaf )
  {
    child.negated = !child.negated;
    return child;
  }
  if ( child.op == Op::Const )
  {
    child.value = !child.value;
    return child;
  }
  if ( child.op == Op::Not )
    return std::move( child.children.front() );
  return Node::gate( Op::Not, { std::move( child ) } );
}

} // namespace

Formula flip( const Formula& f, int node_index )
{
  Formula out = f;
  int counter = 0;
  auto found = find_preorder( out.root, nullptr, counter, node_index );
  Node* v = found.node;
  if ( !v )
    throw std::invalid_argument( "node index out of range" );
  if ( v->op != Op::And && v->op != Op::Or )
    throw std::invalid_argument( "flip applies to and/or nodes only" );

  v->op = ( v->op == Op::And ) ? Op::Or : Op::And;
  for ( auto& c : v->children )
    c = toggle_edge( std::move( c ) );

  // toggle the node's own outgoing edge
  if ( found.parent && found.parent->op == Op::Not )
  {
    // cancel the negation above: splice v into the not gate's place
    Node lifted = std::move( *v );
    *found.parent = std::move( lifted );
  }
  else if ( !found.parent )
  {
    out.root = toggle_edge( std::move( out.root ) );
  }
  else
  {
    Node copy = std::move( *v );
    *v = toggle_edge( std::move( copy ) );
  }
  return out;
}

namespace
{

/*! \brief Edge-list view of a read-once formula for flip-subset sweeps.
 *
 * Node 0 is the root; `edge_neg[i]` is the negation on the edge from node
 * i to its parent (for the root: its outgoing edge).  Leaves are positive;
 * their original polarity is folded into edge_neg.
 */
struct FlipSkeleton
{
  struct SkNode
  {
    Op op;          // Leaf, And, Or, Xor
    int var = -1;   // leaves
    int parent = -1;
    std::vector<int> children;
  };
  std::vector<SkNode> nodes;
  std::vector<std::uint8_t> base_neg; // per node: negation on its parent edge
  std::vector<int> bool_gates;        // indices of and/or nodes

  int build( const Node& n, int parent )
  {
    const int id = static_cast<int>( nodes.size() );
    nodes.push_back( SkNode{} );
    base_neg.push_back( 0 );
    nodes[id].parent = parent;
    if ( n.op == Op::Leaf )
    {
      nodes[id].op = Op::Leaf;
      nodes[id].var = n.var;
      base_neg[id] = n.negated ? 1 : 0;
    }
    else
    {
      nodes[id].op = n.op;
      if ( n.op == Op::And || n.op == Op::Or )
        bool_gates.push_back( id );
      for ( const auto& c : n.children )
      {
        const int cid = build( c, id );
        nodes[id].children.push_back( cid );
      }
    }
    return id;
  }
};

/// Re-assemble a formula from the skeleton under a flip subset.
/// `neg` holds the post-flip negation per parent edge; residual negations
/// around xor nodes have already been paired away by the caller.
Node materialize( const FlipSkeleton& sk, const std::vector<std::uint8_t>& label_flip,
                  const std::vector<std::uint8_t>& neg, int id )
{
  const auto& node = sk.nodes[id];
  Node out;
  if ( node.op == Op::Leaf )
  {
    out = Node::leaf( node.var );
  }
  else
  {
    Op op = node.op;
    if ( label_flip[id] )
      op = ( op == Op::And ) ? Op::Or : Op::And;
    std::vector<Node> children;
    for ( int c : node.children )
      children.push_back( materialize( sk, label_flip, neg, c ) );
    out = Node::gate( op, std::move( children ) );
  }
  if ( neg[id] )
    out = Node::gate( Op::Not, { std::move( out ) } );
  return out;
}

/// Negation on node i's parent edge after flipping the gates in `in_set`.
std::uint8_t base_negation( const FlipSkeleton& sk, const std::vector<std::uint8_t>& in_set, int i )
{
  std::uint8_t v = sk.base_neg[i] ^ in_set[i];
  if ( sk.nodes[i].parent >= 0 )
    v ^= in_set[sk.nodes[i].parent];
  return v;
}

struct FlipSweepResult
{
  bool found = false;
  int size = 0;
  std::string serial;
  Formula formula;
};

/*! \brief Enumerates flip subsets of the and/or gates and keeps the best
 * valid costed-negation formula.
 *
 * Negations between two and/or gates are illegal; pairs of negations
 * around each xor node cancel, a residual moves to the xor's parent edge.
 */
void flip_sweep( const Formula& f, FlipSweepResult& best )
{
  FlipSkeleton sk;
  sk.build( f.root, -1 );
  const int gates = static_cast<int>( sk.bool_gates.size() );
  const int total_gate_nodes = count_nodes( f.root, []( const Node& n ) {
    return n.op == Op::And || n.op == Op::Or || n.op == Op::Xor;
  } );

  for ( std::uint64_t subset = 0; subset < ( std::uint64_t( 1 ) << gates ); ++subset )
  {
    std::vector<std::uint8_t> in_set( sk.nodes.size(), 0 );
    std::vector<std::uint8_t> label_flip( sk.nodes.size(), 0 );
    for ( int g = 0; g < gates; ++g )
    {
      if ( ( subset >> g ) & 1u )
      {
        in_set[sk.bool_gates[g]] = 1;
        label_flip[sk.bool_gates[g]] = 1;
      }
    }

    // post-flip negation on each parent edge
    std::vector<std::uint8_t> neg( sk.nodes.size() );
    bool valid = true;
    for ( std::size_t i = 0; i < sk.nodes.size() && valid; ++i )
    {
      std::uint8_t v = base_negation( sk, in_set, static_cast<int>( i ) );
      neg[i] = v;
      const int parent = sk.nodes[i].parent;
      const bool child_bool = sk.nodes[i].op == Op::And || sk.nodes[i].op == Op::Or;
      const bool parent_bool =
          parent >= 0 && ( sk.nodes[parent].op == Op::And || sk.nodes[parent].op == Op::Or );
      if ( v && child_bool && parent_bool )
        valid = false;
    }
    if ( !valid )
      continue;

    // cancel negation pairs around xor nodes
    for ( std::size_t i = 0; i < sk.nodes.size(); ++i )
    {
      if ( sk.nodes[i].op != Op::Xor )
        continue;
      int parity = neg[i];
      for ( int c : sk.nodes[i].children )
        parity ^= neg[c];
      for ( int c : sk.nodes[i].children )
        neg[c] = 0;
      neg[i] = std::uint8_t( parity );
    }

    int negations = 0;
    for ( auto v : neg )
      negations += v;
    const int size = total_gate_nodes + negations;
    if ( best.found && size > best.size )
      continue;

    Formula cand;
    cand.n = f.n;
    cand.root = materialize( sk, label_flip, neg, 0 );
    std::string serial = to_string( cand );
    if ( !best.found || size < best.size || ( size == best.size && serial < best.serial ) )
    {
      best.found = true;
      best.size = size;
      best.serial = std::move( serial );
      best.formula = std::move( cand );
    }
  }
}

/*! \brief Negation-free read-once construction over {and, or, xor}.
 *
 * In the xor case each factor may absorb one constant; the parities of the
 * absorbed constants must add up to the canonical constant.
 */
RofBuild rof_build_noneg( const TruthTable& tt )
{
  if ( tt.n == 1 )
  {
    RofBuild r;
    if ( tt.bits[0] == 0 )
    {
      r.ok = true;
      r.node = Node::leaf( 0 );
    }
    else
    {
      r.reason = "no negation-free read-once form";
    }
    return r;
  }

  auto da = and_decompose( tt );
  auto dov = or_decompose( tt );
  auto dx = xor_decompose( tt );
  if ( int( da.has_value() ) + int( dov.has_value() ) + int( dx.has_value() ) > 1 )
    throw std::logic_error( "more than one decomposition fired" );

  if ( da || dov )
  {
    const Decomposition& d = da ? *da : *dov;
    std::vector<Node> children;
    for ( std::size_t i = 0; i < d.factors.size(); ++i )
    {
      auto sub = rof_build_noneg( d.factors[i] );
      if ( !sub.ok )
        return sub;
      remap_leaf_vars( sub.node, d.blocks[i] );
      children.push_back( std::move( sub.node ) );
    }
    RofBuild r;
    r.ok = true;
    r.node = Node::gate( da ? Op::And : Op::Or, std::move( children ) );
    return r;
  }

  if ( dx )
  {
    std::vector<Node> children;
    int absorbed = 0;
    for ( std::size_t i = 0; i < dx->factors.size(); ++i )
    {
      auto plain = rof_build_noneg( dx->factors[i] );
      auto flipped = rof_build_noneg( complement_table( dx->factors[i] ) );
      if ( plain.ok && flipped.ok )
        throw std::logic_error( "both polarities admit a negation-free form" );
      if ( !plain.ok && !flipped.ok )
      {
        RofBuild r;
        r.reason = "no negation-free read-once form";
        return r;
      }
      RofBuild& sub = plain.ok ? plain : flipped;
      absorbed ^= plain.ok ? 0 : 1;
      remap_leaf_vars( sub.node, dx->blocks[i] );
      children.push_back( std::move( sub.node ) );
    }
    RofBuild r;
    if ( absorbed != int( dx->constant ) )
    {
      r.reason = "no negation-free read-once form";
      return r;
    }
    r.ok = true;
    r.node = Node::gate( Op::Xor, std::move( children ) );
    return r;
  }

  RofBuild r;
  r.reason = "indecomposable";
  return r;
}

/// Negates every leaf whose variable bit is set in the pattern.
void apply_negation_pattern( Node& node, std::uint32_t pattern )
{
  if ( node.op == Op::Leaf )
  {
    if ( ( pattern >> node.var ) & 1u )
      node.negated = !node.negated;
    return;
  }
  for ( auto& c : node.children )
    apply_negation_pattern( c, pattern );
}

} // namespace

Rejectable<MinimizedFormula> minimize_rof_neg( const TruthTable& tt )
{
  auto rof = minimize_boolean_rof( tt );
  if ( !rof.ok() )
    return Rejectable<MinimizedFormula>::reject( rof.reason );

  FlipSweepResult best;
  flip_sweep( rof->formula, best );
  if ( !best.found )
    throw std::logic_error( "flip sweep found no valid form" );

  MinimizedFormula out;
  out.formula = std::move( best.formula );
  out.size = best.size;
  out.measure = "gates";
  return Rejectable<MinimizedFormula>::accept( std::move( out ) );
}

Rejectable<MinimizedFormula> minimize_rof_xor_a( const TruthTable& tt, std::uint32_t shift )
{
  if ( is_constant( tt ) )
    return Rejectable<MinimizedFormula>::reject( "constant" );
  if ( tt.n < 32 && shift >= ( std::uint32_t( 1 ) << tt.n ) )
    throw std::invalid_argument( "negation pattern out of range" );

  auto reduced = reduce_to_support( shift_table( tt, shift ) );
  auto built = rof_build_noneg( reduced.table );
  if ( !built.ok )
    return Rejectable<MinimizedFormula>::reject( built.reason );
  remap_leaf_vars( built.node, reduced.support );
  apply_negation_pattern( built.node, shift );

  MinimizedFormula out;
  out.formula.n = tt.n;
  out.formula.root = std::move( built.node );
  out.size = gate_count( out.formula );
  out.measure = "gates";
  return Rejectable<MinimizedFormula>::accept( std::move( out ) );
}

Rejectable<MinimizedFormula> minimize_rof_xor_neg( const TruthTable& tt )
{
  if ( is_constant( tt ) )
    return Rejectable<MinimizedFormula>::reject( "constant" );
  auto reduced = reduce_to_support( tt );
  if ( reduced.table.n > 12 )
    throw std::invalid_argument( "rof_xor_neg supports at most 12 support variables" );

  FlipSweepResult best;
  for ( std::uint32_t a = 0; a < ( std::uint32_t( 1 ) << reduced.table.n ); ++a )
  {
    auto shifted = reduce_to_support( shift_table( reduced.table, a ) );
    auto built = rof_build_noneg( shifted.table );
    if ( !built.ok )
      continue;
    remap_leaf_vars( built.node, shifted.support );
    apply_negation_pattern( built.node, a );

    Formula fa;
    fa.n = reduced.table.n;
    fa.root = std::move( built.node );
    flip_sweep( fa, best );
  }
  if ( !best.found )
    return Rejectable<MinimizedFormula>::reject( "no negation pattern admits a read-once form" );

  remap_leaf_vars( best.formula.root, reduced.support );
  MinimizedFormula out;
  out.formula.n = tt.n;
  out.formula.root = std::move( best.formula.root );
  out.size = best.size;
  out.measure = "gates";
  return Rejectable<MinimizedFormula>::accept( std::move( out ) );
}

// ---------------------------------------------------------------------------
// unate formulas of order 2
// ---------------------------------------------------------------------------

namespace
{

/// Splice children whose top gate equals `op`; keeps gates alternating.
Node collapsing_gate( Op op, std::vector<Node> children )
{
  std::vector<Node> flat;
  for ( auto& c : children )
  {
    if ( c.op == op )
    {
      for ( auto& gc : c.children )
        flat.push_back( std::move( gc ) );
    }
    else
    {
      flat.push_back( std::move( c ) );
    }
  }
  if ( flat.size() == 1 )
    return std::move( flat.front() );
  return Node::gate( op, std::move( flat ) );
}

struct Uf2Candidate
{
  Node node;
  int leaves = 0;
  int rank = 0; // dnf < cnf < decomposition
};

int count_leaves_node( const Node& n )
{
  return count_nodes( n, []( const Node& x ) { return x.op == Op::Leaf; } );
}

/// tt is unate, non-constant and depends on all of its variables.
Node uf2_build( const TruthTable& tt )
{
  if ( tt.n == 1 )
    return Node::leaf( 0, tt.bits[0] == 1 );

  std::vector<Uf2Candidate> candidates;

  auto dnf = minimize_unate_dnf( tt );
  candidates.push_back( { dnf->formula.root, count_leaves_node( dnf->formula.root ), 0 } );
  auto cnf = minimize_unate_cnf( tt );
  candidates.push_back( { cnf->formula.root, count_leaves_node( cnf->formula.root ), 1 } );

  auto da = and_decompose( tt );
  auto dov = or_decompose( tt );
  if ( da || dov )
  {
    const Decomposition& d = da ? *da : *dov;
    std::vector<Node> children;
    int leaves = 0;
    for ( std::size_t i = 0; i < d.factors.size(); ++i )
    {
      Node sub = uf2_build( d.factors[i] );
      leaves += count_leaves_node( sub );
      remap_leaf_vars( sub, d.blocks[i] );
      children.push_back( std::move( sub ) );
    }
    candidates.push_back(
        { collapsing_gate( da ? Op::And : Op::Or, std::move( children ) ), leaves, 2 } );
  }

  const Uf2Candidate* best = nullptr;
  std::string best_serial;
  for ( const auto& c : candidates )
  {
    std::string serial;
    print_node( c.node, serial );
    if ( !best || c.leaves < best->leaves ||
         ( c.leaves == best->leaves && c.rank < best->rank ) ||
         ( c.leaves == best->leaves && c.rank == best->rank && serial < best_serial ) )
    {
      best = &c;
      best_serial = std::move( serial );
    }
  }
  return best->node;
}

} // namespace

Rejectable<MinimizedFormula> minimize_uf2( const TruthTable& tt )
{
  if ( is_constant( tt ) )
    return Rejectable<MinimizedFormula>::reject( "constant" );
  auto orientation = find_unate_orientation( tt );
  if ( !orientation.ok() )
    return Rejectable<MinimizedFormula>::reject( "not unate" );

  auto reduced = reduce_to_support( tt );
  Node node = uf2_build( reduced.table );
  remap_leaf_vars( node, reduced.support );

  MinimizedFormula out;
  out.formula.n = tt.n;
  out.formula.root = std::move( node );
  out.size = leaf_count( out.formula );
  out.measure = "leaves";
  return Rejectable<MinimizedFormula>::accept( std::move( out ) );
}

// ---------------------------------------------------------------------------
// arithmetic depth-2 and second-order formulas over GF(2)
// ---------------------------------------------------------------------------

namespace
{

/// Affine form sum_{i in u} x_i + c as a formula node.
Node affine_form_node( std::uint32_t u, bool c )
{
  std::vector<Node> leaves;
  for ( int i = 0; i < 32; ++i )
  {
    if ( ( u >> i ) & 1u )
      leaves.push_back( Node::leaf( i ) );
  }
  if ( c )
    leaves.push_back( Node::constant( true ) );
  if ( leaves.size() == 1 )
    return std::move( leaves.front() );
  return Node::gate( Op::Xor, std::move( leaves ) );
}

Node monomial_node( std::uint32_t mono )
{
  std::vector<Node> leaves;
  for ( int i = 0; i < 32; ++i )
  {
    if ( ( mono >> i ) & 1u )
      leaves.push_back( Node::leaf( i ) );
  }
  if ( leaves.size() == 1 )
    return std::move( leaves.front() );
  return Node::gate( Op::And, std::move( leaves ) );
}

Node sigma2a_node( const MultilinearPoly& p )
{
  std::vector<Node> terms;
  bool constant = p.coeffs[0] != 0;
  for ( std::size_t mono = 1; mono < p.coeffs.size(); ++mono )
  {
    if ( p.coeffs[mono] )
      terms.push_back( monomial_node( std::uint32_t( mono ) ) );
  }
  if ( terms.empty() )
    return Node::constant( constant );
  if ( constant )
    terms.push_back( Node::constant( true ) );
  if ( terms.size() == 1 )
    return std::move( terms.front() );
  return Node::gate( Op::Xor, std::move( terms ) );
}

/// Sum of addends with a constant folded in; splices top xor gates and
/// cancels constant pairs.
Node make_sum( std::vector<Node> addends, bool constant )
{
  std::vector<Node> flat;
  auto absorb = [&]( Node&& x ) {
    if ( x.op == Op::Const )
      constant ^= x.value;
    else
      flat.push_back( std::move( x ) );
  };
  for ( auto& a : addends )
  {
    if ( a.op == Op::Xor )
    {
      for ( auto& c : a.children )
        absorb( std::move( c ) );
    }
    else
    {
      absorb( std::move( a ) );
    }
  }
  if ( flat.empty() )
    return Node::constant( constant );
  if ( constant )
    flat.push_back( Node::constant( true ) );
  if ( flat.size() == 1 )
    return std::move( flat.front() );
  return Node::gate( Op::Xor, std::move( flat ) );
}

struct F2aCandidate
{
  Node node;
  int leaves = 0;
  int rank = 0; // sigma < pi < mul < add
};

Node f2a_build( const TruthTable& tt );

/// Recursion helper returning the minimal node and its leaf count.
std::pair<Node, int> f2a_min_of( const TruthTable& tt )
{
  Node node = f2a_build( tt );
  return { node, count_leaves_node( node ) };
}

Node f2a_build( const TruthTable& tt )
{
  if ( tt.n == 1 )
  {
    if ( tt.bits[0] == 0 )
      return Node::leaf( 0 );                                  // x
    return make_sum( { Node::leaf( 0 ) }, true );              // x + 1
  }

  std::vector<F2aCandidate> candidates;

  const auto poly = to_multilinear( tt );
  candidates.push_back( { sigma2a_node( poly ), 0, 0 } );
  candidates.back().leaves = count_leaves_node( candidates.back().node );

  auto pi = minimize_pi2a( tt );
  if ( pi.ok() )
    candidates.push_back( { pi->formula.root, pi->size, 1 } );

  // product route: f or f + 1 factors, the constant reattached for free
  for ( int b = 0; b < 2; ++b )
  {
    const TruthTable g = b ? complement_table( tt ) : tt;
    auto d = and_decompose( g );
    if ( !d )
      continue;
    std::vector<Node> children;
    int leaves = 0;
    for ( std::size_t i = 0; i < d->factors.size(); ++i )
    {
      auto [sub, cnt] = f2a_min_of( d->factors[i] );
      leaves += cnt;
      remap_leaf_vars( sub, d->blocks[i] );
      children.push_back( std::move( sub ) );
    }
    Node prod = collapsing_gate( Op::And, std::move( children ) );
    Node node = b ? make_sum( { std::move( prod ) }, true ) : std::move( prod );
    candidates.push_back( { std::move( node ), leaves, 2 } );
    break; // at most one b yields a factorization
  }

  // sum route: per factor the cheaper of the factor and its complement
  if ( auto d = xor_decompose( tt ) )
  {
    bool constant = d->constant;
    std::vector<Node> children;
    int leaves = 0;
    for ( std::size_t i = 0; i < d->factors.size(); ++i )
    {
      auto [plain, plain_cnt] = f2a_min_of( d->factors[i] );
      auto [flipped, flipped_cnt] = f2a_min_of( complement_table( d->factors[i] ) );
      Node sub;
      if ( flipped_cnt < plain_cnt )
      {
        sub = std::move( flipped );
        leaves += flipped_cnt;
        constant ^= true;
      }
      else
      {
        sub = std::move( plain );
        leaves += plain_cnt;
      }
      remap_leaf_vars( sub, d->blocks[i] );
      children.push_back( std::move( sub ) );
    }
    candidates.push_back( { make_sum( std::move( children ), constant ), leaves, 3 } );
  }

  const F2aCandidate* best = nullptr;
  std::string best_serial;
  for ( const auto& c : candidates )
  {
    std::string serial;
    print_node( c.node, serial );
    if ( !best || c.leaves < best->leaves ||
         ( c.leaves == best->leaves && c.rank < best->rank ) ||
         ( c.leaves == best->leaves && c.rank == best->rank && serial < best_serial ) )
    {
      best = &c;
      best_serial = std::move( serial );
    }
  }
  return best->node;
}

} // namespace

Rejectable<MinimizedFormula> minimize_pi2a( const TruthTable& tt )
{
  std::vector<std::uint32_t> ones;
  for ( std::uint32_t x = 0; x < tt.bits.size(); ++x )
  {
    if ( tt.bits[x] )
      ones.push_back( x );
  }
  if ( ones.empty() )
    return Rejectable<MinimizedFormula>::reject( "support not affine" );

  // constraints <alpha, x> = c + 1 satisfied by the whole 1-set
  std::vector<std::uint32_t> candidates;
  std::vector<std::uint8_t> rhs( std::size_t( 1 ) << tt.n, 0 );
  for ( std::uint32_t alpha = 1; alpha < ( std::uint32_t( 1 ) << tt.n ); ++alpha )
  {
    const int first = std::popcount( alpha & ones.front() ) & 1;
    bool consistent = true;
    for ( auto x : ones )
    {
      if ( ( std::popcount( alpha & x ) & 1 ) != first )
      {
        consistent = false;
        break;
      }
    }
    if ( consistent )
    {
      candidates.push_back( alpha );
      rhs[alpha] = std::uint8_t( first );
    }
  }

  // the 1-set must equal the intersection of all candidate constraints
  std::size_t solutions = 0;
  for ( std::uint32_t x = 0; x < tt.bits.size(); ++x )
  {
    bool inside = true;
    for ( auto alpha : candidates )
    {
      if ( ( std::popcount( alpha & x ) & 1 ) != rhs[alpha] )
      {
        inside = false;
        break;
      }
    }
    if ( inside )
      ++solutions;
  }
  if ( solutions != ones.size() )
    return Rejectable<MinimizedFormula>::reject( "support not affine" );

  const auto basis = gf2::min_weight_basis( candidates, tt.n );
  std::vector<Node> factors;
  int total_weight = 0;
  for ( auto alpha : basis )
  {
    total_weight += std::popcount( alpha );
    factors.push_back( affine_form_node( alpha, rhs[alpha] == 0 ) ); // c with <a,x> = c+1
  }

  MinimizedFormula out;
  out.formula.n = tt.n;
  if ( factors.empty() )
    out.formula.root = Node::constant( true );
  else if ( factors.size() == 1 )
    out.formula.root = std::move( factors.front() );
  else
    out.formula.root = Node::gate( Op::And, std::move( factors ) );
  out.size = total_weight;
  out.measure = "leaves";
  return Rejectable<MinimizedFormula>::accept( std::move( out ) );
}

MinimizedFormula sigma2a( const TruthTable& tt )
{
  MinimizedFormula out;
  out.formula.n = tt.n;
  out.formula.root = sigma2a_node( to_multilinear( tt ) );
  out.size = leaf_count( out.formula );
  out.measure = "leaves";
  return out;
}

MinimizedFormula minimize_f2a( const TruthTable& tt )
{
  MinimizedFormula out;
  out.formula.n = tt.n;
  out.measure = "leaves";
  if ( is_constant( tt ) )
  {
    out.formula.root = Node::constant( tt.bits[0] != 0 );
    out.size = 0;
    return out;
  }
  auto reduced = reduce_to_support( tt );
  Node node = f2a_build( reduced.table );
  remap_leaf_vars( node, reduced.support );
  out.formula.root = std::move( node );
  out.size = leaf_count( out.formula );
  return out;
}

} // namespace ttmin
