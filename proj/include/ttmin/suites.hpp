#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ttmin
{

struct SuiteReport
{
  std::string name;
  long long checked = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Canonical JSON rendering: counts plus up to 10 counterexamples.
std::string to_json( const SuiteReport& report );

struct SuiteOptions
{
  std::uint64_t seed = 0x5eed1e5;
  unsigned threads = 0; ///< 0 = TTMIN_THREADS env or hardware default
};

/// Names accepted by run_suite: trichotomy, oracles, reductions, obdd-orders.
std::vector<std::string> suite_names();
SuiteReport run_suite( const std::string& name, const SuiteOptions& opts = {} );

// individual acceptance checks
SuiteReport check_trichotomy( const SuiteOptions& opts = {} );
SuiteReport check_tree_oracles( const SuiteOptions& opts = {} );
SuiteReport check_ldt_c_degeneration( const SuiteOptions& opts = {} );
SuiteReport check_ldl_size_law( const SuiteOptions& opts = {} );
SuiteReport check_commutator_identities( const SuiteOptions& opts = {} );
SuiteReport check_rof_round_trip( const SuiteOptions& opts = {} );
SuiteReport check_direct_products( const SuiteOptions& opts = {} );
SuiteReport check_pi2a_basis( const SuiteOptions& opts = {} );
SuiteReport check_uf2_f2a_oracle( const SuiteOptions& opts = {} );
SuiteReport check_obdd_ordering( const SuiteOptions& opts = {} );
SuiteReport check_mubp_characterization( const SuiteOptions& opts = {} );
SuiteReport check_reductions( const SuiteOptions& opts = {} );

} // namespace ttmin
