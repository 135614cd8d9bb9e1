#pragma once

#include "ttmin/core.hpp"
#include "ttmin/formulas.hpp" // Rejectable
#include "ttmin/gf2.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace ttmin
{

/*! \brief Affine subspace of GF(2)^n as a canonical constraint system.
 *
 * Rows are the reduced row echelon form of [A|b]; two subspaces are equal
 * iff their canonical rows are equal.  dim = n - #rows.
 */
struct AffineSubspace
{
  int n = 0;
  std::vector<gf2::row_t> rows;

  static AffineSubspace whole( int n );

  int dim() const { return n - static_cast<int>( rows.size() ); }
  bool contains( std::uint32_t x ) const;
  bool test_independent( std::uint32_t u ) const;
  /// Adds the constraint <u,x> = b; u must be independent of the rows.
  AffineSubspace with_constraint( std::uint32_t u, int b ) const;

  friend bool operator==( const AffineSubspace& a, const AffineSubspace& b ) = default;
  std::size_t hash() const;
};

struct LinearTest
{
  std::uint32_t u = 0;
  int b = 0;

  bool is_const_true() const { return u == 0 && b == 0; }
  friend bool operator==( const LinearTest& a, const LinearTest& b ) = default;
};

// --- decision trees -------------------------------------------------------

struct DtNode;
using DtRef = std::shared_ptr<const DtNode>;

struct DtNode
{
  bool leaf = false;
  bool value = false;
  int var = -1;
  DtRef lo, hi;
  int size = 1;
  std::string serial;
};

struct DecisionTree
{
  int n = 0;
  DtRef root;
  int size() const { return root ? root->size : 0; }
};

bool evaluate( const DecisionTree& t, std::uint32_t a );
std::string to_string( const DecisionTree& t );

struct LdtNode;
using LdtRef = std::shared_ptr<const LdtNode>;

struct LdtNode
{
  bool leaf = false;
  bool value = false;
  std::uint32_t form = 0; ///< the tested linear form
  LdtRef lo, hi;          ///< children for <u,x> = 0 and 1
  int size = 1;
  std::string serial;
  std::vector<std::uint8_t> table; ///< global function of this (sub)tree
};

struct LinearDecisionTree
{
  int n = 0;
  LdtRef root;
  int size() const { return root ? root->size : 0; }
};

bool evaluate( const LinearDecisionTree& t, std::uint32_t a );
std::string to_string( const LinearDecisionTree& t );

struct SymNode;
using SymRef = std::shared_ptr<const SymNode>;

struct SymNode
{
  bool leaf = false;
  bool value = false;
  std::vector<std::uint8_t> sym; ///< value per Hamming weight 0..|vars|
  std::vector<int> vars;
  SymRef lo, hi;
  int size = 1;
  std::string serial;
};

struct SymmetricTree
{
  int n = 0;
  SymRef root;
  int size() const { return root ? root->size : 0; }
};

bool evaluate( const SymmetricTree& t, std::uint32_t a );
std::string to_string( const SymmetricTree& t );

/// Ordered (test, value) pairs; the final pair carries the constant-1 test.
struct LinearDecisionList
{
  int n = 0;
  std::vector<std::pair<LinearTest, int>> pairs;
  int size() const { return static_cast<int>( pairs.size() ) - 1; }
};

bool evaluate( const LinearDecisionList& l, std::uint32_t a );
std::string to_string( const LinearDecisionList& l );

/// Tree over explicitly given tests, labelled by test index.
struct FixedTestNode;
using FixedTestRef = std::shared_ptr<const FixedTestNode>;

struct FixedTestNode
{
  bool leaf = false;
  bool value = false;
  int test = -1;
  FixedTestRef lo, hi;
  int size = 1;
  std::string serial;
};

struct TestFamilyTree
{
  int n = 0;
  std::vector<TruthTable> tests;
  FixedTestRef root;
  int size() const { return root ? root->size : 0; }
};

bool evaluate( const TestFamilyTree& t, std::uint32_t a );
std::string to_string( const TestFamilyTree& t );

// --- the affine lattice ---------------------------------------------------

/*! \brief The layered graph of affine subspaces.
 *
 * layers[d] holds all subspaces cut out by d independent tests of Hamming
 * weight at most max_weight (all weights when max_weight >= n), deduped by
 * canonical form.  Edges are implied: test (u, b) maps a node to the node
 * extending its constraints, found via the layer index.
 */
class LatticeGraph
{
public:
  LatticeGraph( int n, int max_weight, std::size_t node_budget = 2'000'000 );

  int n() const { return n_; }
  int max_weight() const { return max_weight_; }
  const std::vector<std::vector<AffineSubspace>>& layers() const { return layers_; }
  std::vector<std::size_t> layer_sizes() const;

  /// Index of a subspace inside its layer, or -1.
  int find( const AffineSubspace& s ) const;

private:
  int n_;
  int max_weight_;
  std::vector<std::vector<AffineSubspace>> layers_;
  std::vector<std::unordered_map<std::size_t, std::vector<int>>> index_;
};

/// unbounded test weight; caps: n <= 6 unbounded, n <= 12 for weight <= 2
LatticeGraph build_affine_lattice( int n );
LatticeGraph build_affine_lattice( int n, int max_weight );

// --- minimizers -----------------------------------------------------------

/// Minimum-node-count decision tree via the cube DP; n <= 12.
DecisionTree minimize_dt( const TruthTable& tt );

LinearDecisionTree minimize_ldt( const TruthTable& tt );
LinearDecisionTree minimize_ldt( const TruthTable& tt, const LatticeGraph& lattice );

/// LDT whose tests have Hamming weight at most c; c = 1 degenerates to DT.
LinearDecisionTree minimize_ldt_c( const TruthTable& tt, int c );

/// Minimum symmetric read-once decision tree; n <= 4.
SymmetricTree minimize_srodt( const TruthTable& tt );

/*! \brief Minimum tree over an explicit test family (meta-algorithm).
 *
 * Rejects when two points with different values are indistinguishable by
 * every test.  Size is the node count, as for the other tree models.
 */
Rejectable<TestFamilyTree> minimize_fixed_tests( const TruthTable& tt,
                                                 const std::vector<TruthTable>& tests );

/// Minimum linear decision list, or reject when none exists.
Rejectable<LinearDecisionList> minimize_ldl( const TruthTable& tt );

/// Smallest k with 2^(n-k) dividing |f^-1(1)|; a lower bound on LDL size.
int ldl_size_lower_bound( const TruthTable& tt );

/// Removes linearly dependent tests and merges identical trailing leaves.
LinearDecisionList model_minimize_ldl( const LinearDecisionList& list );

/*! \brief Decides whether some tree using at most k distinct tests from the
 * family computes f.  Exhaustive over test subsets; |tests| <= 16, k <= 8.
 */
bool decide_test_family_tree( const TruthTable& tt,
                              const std::vector<std::vector<std::uint32_t>>& tests, int k );

} // namespace ttmin
