// Acceptance suite: runs every acceptance criterion at its stated
// tolerance and prints one pass/fail line per criterion.  Exit status is
// nonzero when any criterion fails.

#include "ttmin/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

namespace
{

struct Criterion
{
  std::string label;
  double time_limit_seconds; // 0 = untimed
  std::function<ttmin::SuiteReport()> run;
};

} // namespace

int main()
{
  using namespace ttmin;
  SuiteOptions opts;

  const std::vector<Criterion> criteria = {
      { "1 trichotomy sweep over all 2^16 functions on 4 variables", 60.0,
        [&] { return check_trichotomy( opts ); } },
      { "2 tree minimizers match brute-force oracles on 3 variables", 600.0,
        [&] { return check_tree_oracles( opts ); } },
      { "3 weight-1 LDTs degenerate to ordinary decision trees", 0.0,
        [&] { return check_ldt_c_degeneration( opts ); } },
      { "4 LDL size equals the divisibility bound", 0.0,
        [&] { return check_ldl_size_law( opts ); } },
      { "5 commutator and derivative identities on random polynomials", 0.0,
        [&] { return check_commutator_identities( opts ); } },
      { "6 read-once round trip on 500 random formulas", 0.0,
        [&] { return check_rof_round_trip( opts ); } },
      { "7 direct-product laws for depth-2 sizes", 0.0,
        [&] { return check_direct_products( opts ); } },
      { "8 greedy minimum-weight basis is exact", 0.0,
        [&] { return check_pi2a_basis( opts ); } },
      { "9 UF2/F2A leaf counts match formula enumeration", 900.0,
        [&] { return check_uf2_f2a_oracle( opts ); } },
      { "10 OBDD ordering DP matches all-orders brute force", 0.0,
        [&] { return check_obdd_ordering( opts ); } },
      { "11 mu-BP accepts exactly the width-1 functions", 0.0,
        [&] { return check_mubp_characterization( opts ); } },
      { "12 reduction soundness and completeness", 600.0,
        [&] { return check_reductions( opts ); } },
  };

  int failures = 0;
  for ( const auto& criterion : criteria )
  {
    const auto start = std::chrono::steady_clock::now();
    const auto report = criterion.run();
    const double elapsed =
        std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();

    bool ok = report.passed();
    std::string note;
    if ( criterion.time_limit_seconds > 0 && elapsed > criterion.time_limit_seconds )
    {
      ok = false;
      note = " [exceeded " + std::to_string( criterion.time_limit_seconds ) + "s target]";
    }
    std::printf( "%s  criterion %s: %lld checks, %zu failures (%.2fs)%s\n",
                 ok ? "PASS" : "FAIL", criterion.label.c_str(), report.checked,
                 report.failures.size(), elapsed, note.c_str() );
    for ( std::size_t i = 0; i < report.failures.size() && i < 5; ++i )
      std::printf( "      %s\n", report.failures[i].c_str() );
    if ( !ok )
      ++failures;
  }

  // criterion 13: every suite run twice produces byte-identical reports
  {
    bool ok = true;
    long long checked = 0;
    for ( const auto& name : suite_names() )
    {
      const auto first = to_json( run_suite( name, opts ) );
      const auto second = to_json( run_suite( name, opts ) );
      ++checked;
      if ( first != second )
      {
        ok = false;
        std::printf( "      suite %s differs between runs\n", name.c_str() );
      }
    }
    std::printf( "%s  criterion 13 determinism: %lld suites compared\n", ok ? "PASS" : "FAIL",
                 checked );
    if ( !ok )
      ++failures;
  }

  return failures == 0 ? 0 : 1;
}
