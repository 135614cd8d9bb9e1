#pragma once

// Brute-force reference implementations, kept independent of the
// minimizers they validate.  They enumerate models semantically instead of
// running the production dynamic programs, and are only suitable for desk
// scale (n <= 3 or 4).

#include "ttmin/core.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ttmin::oracles
{

/// Smallest decision-tree node count, by tree-existence enumeration.
int min_dt_size( const TruthTable& tt );

/// Smallest linear-decision-tree node count.
int min_ldt_size( const TruthTable& tt );

/// Smallest LDT node count with tests of Hamming weight <= c.
int min_ldt_c_size( const TruthTable& tt, int c );

/// Smallest symmetric read-once tree node count.
int min_srodt_size( const TruthTable& tt );

/// Smallest linear-decision-list size, or nullopt when no list exists.
std::optional<int> min_ldl_size( const TruthTable& tt );

/*! \brief Minimal leaf counts of depth-2 and second-order unate formulas,
 * for every function on n variables (n <= 3); -1 encodes "no formula".
 *
 * Depth-2 counts come from enumerating all monotone DNFs/CNFs and all 2^n
 * orientation shifts; the second-order count adds exhaustive read-once
 * splits over variable-disjoint blocks.
 */
struct UnateLeafTables
{
  int n = 0;
  std::vector<int> udnf;
  std::vector<int> ucnf;
  std::vector<int> uf2;
};

UnateLeafTables enumerate_unate_leaves( int n );

/*! \brief Minimal leaf counts of arithmetic depth-2 and second-order
 * formulas over GF(2) for every function on n variables (n <= 3); -1 for
 * "no formula" (products only; sums always exist).
 */
struct ArithmeticLeafTables
{
  int n = 0;
  std::vector<int> sigma2a;
  std::vector<int> pi2a;
  std::vector<int> f2a;
};

ArithmeticLeafTables enumerate_arithmetic_leaves( int n );

/// Minimum total Hamming weight over all bases of span(generators).
int min_weight_basis_exhaustive( const std::vector<std::uint32_t>& generators, int n );

/// True iff some variable order gives a reduced OBDD of width <= 1 everywhere.
bool width1_obdd_exists( const TruthTable& tt );

/// Minimum reduced-OBDD size over every variable order.
int min_obdd_size_all_orders( const TruthTable& tt );

} // namespace ttmin::oracles
