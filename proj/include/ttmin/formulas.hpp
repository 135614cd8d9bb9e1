#pragma once

#include "ttmin/core.hpp"
#include "ttmin/mlpoly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ttmin
{

/// Outcome of a minimizer for a partial model class: a value, or a reject
/// reason when the function lies outside the class.  Distinct from errors,
/// which are thrown.
template <typename T>
struct Rejectable
{
  std::optional<T> value;
  std::string reason;

  bool ok() const { return value.has_value(); }
  const T& operator*() const { return *value; }
  const T* operator->() const { return &*value; }

  static Rejectable accept( T v )
  {
    Rejectable r;
    r.value = std::move( v );
    return r;
  }
  static Rejectable reject( std::string why )
  {
    Rejectable r;
    r.reason = std::move( why );
    return r;
  }
};

struct Formula
{
  enum class Op : std::uint8_t
  {
    Leaf,  ///< a variable, possibly negated
    Const, ///< 0 or 1
    And,
    Or,
    Xor,
    Not
  };

  struct Node
  {
    Op op = Op::Const;
    int var = -1;
    bool negated = false; ///< leaf polarity
    bool value = false;   ///< constant value
    std::vector<Node> children;

    static Node leaf( int v, bool neg = false );
    static Node constant( bool b );
    static Node gate( Op o, std::vector<Node> cs );
  };

  int n = 0; ///< variable universe
  Node root;
};

bool evaluate( const Formula& f, std::uint32_t assignment );
TruthTable to_truth_table( const Formula& f );

int leaf_count( const Formula& f );      ///< number of variable leaves
int gate_count( const Formula& f );      ///< and/or/xor nodes
int not_count( const Formula& f );       ///< negation gates
int gate_count_with_not( const Formula& f );

/// S-expression, e.g. (and x1 (or !x2 x3)).
std::string to_string( const Formula& f );
/// Algebraic rendering for two-level forms, e.g. "x1*x2 + !x3".
std::string to_algebraic( const Formula& f );

struct UnateOrientation
{
  std::uint32_t shift = 0; ///< bit i set iff variable i appears negated
};

struct MinimizedFormula
{
  Formula formula;
  int size = 0;
  std::string measure; ///< e.g. "terms", "clauses", "gates", "leaves"
};

/*! \brief Minimal monotone DNF, whose terms are the minimal true points.
 *
 * Rejects when some hypercube edge decreases the function.  Size is the
 * number of terms; the empty DNF renders as the constant 0.
 */
Rejectable<MinimizedFormula> minimize_monotone_dnf( const TruthTable& tt );

/// Orientation a with f(x ^ a) monotone, from the violating edges.
Rejectable<UnateOrientation> find_unate_orientation( const TruthTable& tt );

Rejectable<MinimizedFormula> minimize_unate_dnf( const TruthTable& tt );
Rejectable<MinimizedFormula> minimize_unate_cnf( const TruthTable& tt );

/*! \brief Minimal read-once formula over {and, or, xor}.
 *
 * Negations live at the leaves and cost nothing; constants are not part of
 * the model.  Size is the gate count.  Rejects constants and functions
 * with an indecomposable non-literal part.
 */
Rejectable<MinimizedFormula> minimize_rof_xor( const TruthTable& tt );

/// Minimal (unique) read-once formula over {and, or}.
Rejectable<MinimizedFormula> minimize_boolean_rof( const TruthTable& tt );

/*! \brief De Morgan flip of the and/or node with the given preorder index.
 *
 * Swaps the label and toggles the negation on every incident edge; the
 * function is preserved and the operation is an involution.
 */
Formula flip( const Formula& f, int node_index );

/*! \brief Minimal read-once formula with costed negation gates.
 *
 * Leaves are positive, negation gates sit on edges and never between two
 * and/or gates.  Size counts all gates including negations.
 */
Rejectable<MinimizedFormula> minimize_rof_neg( const TruthTable& tt );

/*! \brief The unique read-once {and,or,xor} formula whose variable i is
 * negated exactly when bit i of `shift` is set, or reject.
 */
Rejectable<MinimizedFormula> minimize_rof_xor_a( const TruthTable& tt, std::uint32_t shift );

/// Minimal read-once {and,or,xor,not} formula with costed negations.
Rejectable<MinimizedFormula> minimize_rof_xor_neg( const TruthTable& tt );

/*! \brief Minimal unate formula of order 2, by leaf count.
 *
 * Candidates are the decomposition recursion and the two depth-2 forms;
 * rejects non-unate functions and constants.
 */
Rejectable<MinimizedFormula> minimize_uf2( const TruthTable& tt );

/*! \brief Minimal product of affine GF(2) forms, or reject when the
 * 1-set is not a nonempty affine subspace.
 *
 * Size is the leaf count excluding constants, i.e. the minimum total
 * Hamming weight over bases of the constraint space.
 */
Rejectable<MinimizedFormula> minimize_pi2a( const TruthTable& tt );

/// The multilinear polynomial as a depth-2 sum of monomials; always exists.
MinimizedFormula sigma2a( const TruthTable& tt );

/// Minimal second-order arithmetic formula over GF(2); always exists.
MinimizedFormula minimize_f2a( const TruthTable& tt );

} // namespace ttmin
