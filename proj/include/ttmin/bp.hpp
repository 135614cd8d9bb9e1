#pragma once

#include "ttmin/core.hpp"
#include "ttmin/formulas.hpp" // Rejectable

#include <cstdint>
#include <string>
#include <vector>

namespace ttmin
{

/*! \brief Reduced ordered binary decision diagram under a fixed order.
 *
 * Edge values 0 and 1 are the terminals; values >= 2 index `nodes`.
 * The diagram is canonical for (function, order): no node has equal
 * children and equal (var, lo, hi) triples are shared.
 */
struct Obdd
{
  static constexpr int terminal_0 = 0;
  static constexpr int terminal_1 = 1;

  struct Node
  {
    int var = -1;
    int lo = 0;
    int hi = 0;
  };

  int n = 0;
  std::vector<int> order; ///< order[k] = variable tested at level k
  std::vector<Node> nodes;
  int root = 0;

  int size() const { return static_cast<int>( nodes.size() ); }
  static bool is_terminal( int edge ) { return edge < 2; }
};

bool evaluate( const Obdd& d, std::uint32_t a );
/// Node list "(id, var, lo, hi)" with terminals T0/T1.
std::string to_string( const Obdd& d );
std::string to_dot( const Obdd& d );

Obdd obdd_build( const TruthTable& tt, const std::vector<int>& order );

struct OptimalOrder
{
  std::vector<int> order;
  int size = 0;
};

/*! \brief Variable order minimizing the reduced OBDD size, by DP over
 * variable subsets; ties resolved to the lexicographically least order.
 * n <= 16.
 */
OptimalOrder obdd_optimal_order( const TruthTable& tt );

/*! \brief Branching program reading every variable at most once in the
 * whole program, in width-1 OBDD normal form.
 *
 * Nodes are ordered top to bottom, one per support variable; every edge
 * targets a later node (index + 2) or a terminal (0/1).  For a constant
 * function the chain is empty and root is the terminal.
 */
struct MuBp
{
  struct Node
  {
    int var = -1;
    int lo = 0;
    int hi = 0;
  };

  int n = 0;
  std::vector<Node> chain;
  int root = 0;

  int size() const { return static_cast<int>( chain.size() ); }
};

bool evaluate( const MuBp& p, std::uint32_t a );
std::string to_string( const MuBp& p );

/*! \brief Width-1 construction after support reduction.
 *
 * A function on m support variables has a mu branching program iff its
 * best reduced OBDD has exactly m nodes, i.e. width 1 in every layer;
 * rejects otherwise.  Support size <= 16.
 */
Rejectable<MuBp> mubp_construct( const TruthTable& tt );

} // namespace ttmin
