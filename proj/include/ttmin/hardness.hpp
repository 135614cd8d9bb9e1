#pragma once

#include "ttmin/core.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ttmin
{

/// Set cover over the universe [m] with 1-based elements.
struct SetCoverInstance
{
  int m = 0;
  std::vector<std::vector<int>> sets;
  int k = 0;
};

/// 3-partite set cover: every set has exactly one element per block.
struct ThreePscInstance
{
  int n = 0;
  std::vector<int> block_of; ///< block index 0..2 per element, 0-based positions
  std::vector<std::vector<int>> sets;
  int k = 0;
};

struct ReducedTreeInstance
{
  TruthTable tt;
  std::vector<std::vector<std::uint32_t>> tests; ///< table positions per set
  int k = 0;
};

struct ReducedDnfInstance
{
  PartialTruthTable ptt;
  int k = 0;
  int q = 0;
  int t = 0;
  std::vector<std::uint32_t> v_vectors; ///< per element of [n]
  std::vector<std::uint32_t> w_vectors; ///< per set
};

/*! \brief Set cover to tree-with-given-tests.
 *
 * The table is u zeros then m ones with u the smallest positive complement
 * of m to a power of two; element d maps to table position d - 1 + u.
 */
ReducedTreeInstance reduce_sc_to_tree( const SetCoverInstance& inst );

/*! \brief 3-partite set cover to monotone-DNF consistency for a partial
 * table, via constant-weight vector families.  n <= 9.
 */
ReducedDnfInstance reduce_3psc_to_mondnf_star( const ThreePscInstance& inst );

/// Minimum cover size; nullopt when no cover exists.  |sets| <= 20, m <= 20.
std::optional<int> brute_set_cover( const SetCoverInstance& inst );

/*! \brief Minimum number of monotone terms consistent with the partial
 * table; nullopt when none exists.  Exact branch-and-bound over usable
 * terms; bounded search (t <= 18, at most 18 one-entries).
 */
std::optional<std::int64_t> brute_min_mondnf_partial( const PartialTruthTable& ptt );

struct ReductionReport
{
  long long instances = 0;
  long long checks = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

struct ReductionCheckOptions
{
  int shift_delta = 0; ///< perturbs the tree reduction's position shift (negative control)
};

/// Cover-of-size-k exists iff the reduced tree instance accepts, for every k.
std::optional<std::string> check_tree_reduction( const SetCoverInstance& inst,
                                                 const ReductionCheckOptions& opts = {} );

/// Minimum cover equals the brute monotone-DNF minimum of the reduced table.
std::optional<std::string> check_dnf_reduction( const ThreePscInstance& inst );

/// Random small set-cover instances against the tree reduction.
ReductionReport verify_tree_reduction_batch( std::uint64_t seed, int instances );

/// Every valid 3-partite instance with n <= max_n against the DNF reduction.
ReductionReport verify_dnf_reduction_all( int max_n );

/// All valid 3-partite instances on n elements (canonical block order).
std::vector<ThreePscInstance> enumerate_3psc_instances( int n );

std::string to_string( const SetCoverInstance& inst );
SetCoverInstance parse_set_cover( const std::string& text );

} // namespace ttmin
