#pragma once

#include "ttmin/core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ttmin
{

/*! \brief Multilinear polynomial over GF(2) (algebraic normal form).
 *
 * `coeffs[S]` is the coefficient of the monomial prod_{i in S} x_i, where
 * the subset S is encoded like a truth-table index (bit i set iff variable
 * i occurs).  coeffs[0] is the constant term.
 */
struct MultilinearPoly
{
  int n = 0;
  std::vector<std::uint8_t> coeffs;

  MultilinearPoly() : coeffs( 1, 0 ) {}
  MultilinearPoly( int num_vars, std::vector<std::uint8_t> cs );

  bool is_zero() const;
  friend bool operator==( const MultilinearPoly& a, const MultilinearPoly& b ) = default;
};

/// Unique multilinear representation of tt, via the subset (Moebius) transform.
MultilinearPoly to_multilinear( const TruthTable& tt );

/// Inverse transform; to_truth_table(to_multilinear(tt)) == tt.
TruthTable to_truth_table( const MultilinearPoly& p );

/// Discrete partial derivative p|_{x_i=1} + p|_{x_i=0}; drops variable i.
MultilinearPoly partial_derivative( const MultilinearPoly& p, int var );

/*! \brief Multilinear commutator Delta_ij.
 *
 * P|_{11} * P|_{00} - P|_{10} * P|_{01}, computed pointwise on the truth
 * tables of the four restrictions and re-interpolated, which equals the
 * multilinear reduction of the polynomial product.  The result is a
 * polynomial on the same n variables that mentions neither x_i nor x_j.
 */
MultilinearPoly commutator_delta( const MultilinearPoly& p, int i, int j );

/*! \brief True iff no irreducible factor of p depends on both x_i and x_j.
 *
 * Equivalent to the commutator vanishing as a ring polynomial (before
 * multilinear reduction); decided exactly by comparing the two restriction
 * products on a three-point grid over GF(4).  Supports n <= 14.
 */
bool is_pair_decomposable( const MultilinearPoly& p, int i, int j );

enum class DecompOp
{
  And,
  Or,
  Xor
};

/*! \brief Variable-disjoint decomposition of a boolean function.
 *
 * Factors are truth tables on their own block variables; blocks list the
 * original variable indices of each factor, in increasing order.  For Xor
 * the canonical constant is split off so every factor has zero constant
 * term.
 */
struct Decomposition
{
  DecompOp op;
  std::vector<std::vector<int>> blocks;
  std::vector<TruthTable> factors;
  bool constant = false; ///< Xor only

  TruthTable recombine( int n ) const;
};

/*! \brief Maximal and-decomposition, or nullopt when f^ML is irreducible.
 *
 * The input must be non-constant and depend on all of its >= 2 variables.
 * Blocks are the connected components of the graph with an edge (i,j) iff
 * Delta_ij(f^ML) != 0.
 */
std::optional<Decomposition> and_decompose( const TruthTable& tt );

/// Maximal or-decomposition, via the complement.
std::optional<Decomposition> or_decompose( const TruthTable& tt );

/*! \brief Canonical xor-decomposition, or nullopt when the monomial
 * co-occurrence graph of f^ML is connected.
 */
std::optional<Decomposition> xor_decompose( const TruthTable& tt );

/// "c + x1*x2 + x3" style rendering, terms sorted by monomial index.
std::string to_string( const MultilinearPoly& p );

} // namespace ttmin
