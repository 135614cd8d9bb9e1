#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ttmin/bp.hpp"
#include "ttmin/core.hpp"
#include "ttmin/formulas.hpp"
#include "ttmin/hardness.hpp"
#include "ttmin/mlpoly.hpp"
#include "ttmin/suites.hpp"
#include "ttmin/trees.hpp"

namespace py = pybind11;

namespace
{

ttmin::TruthTable table_from_string( const std::string& s )
{
  return ttmin::parse_truth_table( s );
}

py::object formula_dict( const ttmin::Rejectable<ttmin::MinimizedFormula>& r )
{
  if ( !r.ok() )
  {
    py::dict d;
    d["reject"] = r.reason;
    return d;
  }
  py::dict d;
  d["size"] = r->size;
  d["measure"] = r->measure;
  d["repr"] = ttmin::to_string( r->formula );
  d["algebraic"] = ttmin::to_algebraic( r->formula );
  d["leaves"] = ttmin::leaf_count( r->formula );
  return d;
}

py::dict formula_dict( const ttmin::MinimizedFormula& f )
{
  py::dict d;
  d["size"] = f.size;
  d["measure"] = f.measure;
  d["repr"] = ttmin::to_string( f.formula );
  d["algebraic"] = ttmin::to_algebraic( f.formula );
  d["leaves"] = ttmin::leaf_count( f.formula );
  return d;
}

} // namespace

PYBIND11_MODULE( ttmin, m )
{
  m.doc() = "exact truth-table minimization toolkit";

  py::class_<ttmin::TruthTable>( m, "TruthTable" )
      .def( py::init( &table_from_string ), py::arg( "bits" ) )
      .def_readonly( "n", &ttmin::TruthTable::n )
      .def( "__len__", []( const ttmin::TruthTable& t ) { return t.bits.size(); } )
      .def( "__str__", []( const ttmin::TruthTable& t ) { return ttmin::to_string( t ); } )
      .def( "__eq__", []( const ttmin::TruthTable& a, const ttmin::TruthTable& b ) {
        return a.n == b.n && a.bits == b.bits;
      } );

  m.def( "evaluate", []( const ttmin::TruthTable& tt, const std::string& a ) {
    return ttmin::evaluate( tt, ttmin::parse_assignment( a, tt.n ) );
  } );
  m.def( "count_ones",
         []( const ttmin::TruthTable& tt ) { return ttmin::count_ones( tt ); } );
  m.def( "restrict", []( const ttmin::TruthTable& tt, const std::string& cube ) {
    return ttmin::restrict_table( tt, ttmin::CubeRestriction::from_string( cube ) );
  } );
  m.def( "reduce_to_support", []( const ttmin::TruthTable& tt ) {
    auto r = ttmin::reduce_to_support( tt );
    std::vector<int> support;
    for ( int v : r.support )
      support.push_back( v + 1 );
    return py::make_tuple( r.table, support );
  } );
  m.def( "anf", []( const ttmin::TruthTable& tt ) {
    return ttmin::to_string( ttmin::to_multilinear( tt ) );
  } );

  m.def( "minimize_dt", []( const ttmin::TruthTable& tt ) {
    auto t = ttmin::minimize_dt( tt );
    py::dict d;
    d["size"] = t.size();
    d["repr"] = ttmin::to_string( t );
    return d;
  } );
  m.def( "minimize_ldt", []( const ttmin::TruthTable& tt ) {
    auto t = ttmin::minimize_ldt( tt );
    py::dict d;
    d["size"] = t.size();
    d["repr"] = ttmin::to_string( t );
    return d;
  } );
  m.def( "minimize_ldt_c", []( const ttmin::TruthTable& tt, int c ) {
    auto t = ttmin::minimize_ldt_c( tt, c );
    py::dict d;
    d["size"] = t.size();
    d["repr"] = ttmin::to_string( t );
    return d;
  } );
  m.def( "minimize_srodt", []( const ttmin::TruthTable& tt ) {
    auto t = ttmin::minimize_srodt( tt );
    py::dict d;
    d["size"] = t.size();
    d["repr"] = ttmin::to_string( t );
    return d;
  } );
  m.def( "minimize_ldl", []( const ttmin::TruthTable& tt ) -> py::object {
    auto r = ttmin::minimize_ldl( tt );
    py::dict d;
    if ( !r.ok() )
    {
      d["reject"] = r.reason;
      return d;
    }
    d["size"] = r->size();
    d["repr"] = ttmin::to_string( *r );
    d["lower_bound"] = ttmin::ldl_size_lower_bound( tt );
    return d;
  } );

  m.def( "minimize_monotone_dnf",
         []( const ttmin::TruthTable& tt ) { return formula_dict( ttmin::minimize_monotone_dnf( tt ) ); } );
  m.def( "minimize_unate_dnf",
         []( const ttmin::TruthTable& tt ) { return formula_dict( ttmin::minimize_unate_dnf( tt ) ); } );
  m.def( "minimize_unate_cnf",
         []( const ttmin::TruthTable& tt ) { return formula_dict( ttmin::minimize_unate_cnf( tt ) ); } );
  m.def( "minimize_rof",
         []( const ttmin::TruthTable& tt ) { return formula_dict( ttmin::minimize_boolean_rof( tt ) ); } );
  m.def( "minimize_rof_xor",
         []( const ttmin::TruthTable& tt ) { return formula_dict( ttmin::minimize_rof_xor( tt ) ); } );
  m.def( "minimize_rof_neg",
         []( const ttmin::TruthTable& tt ) { return formula_dict( ttmin::minimize_rof_neg( tt ) ); } );
  m.def( "minimize_rof_xor_neg",
         []( const ttmin::TruthTable& tt ) { return formula_dict( ttmin::minimize_rof_xor_neg( tt ) ); } );
  m.def( "minimize_rof_xor_a", []( const ttmin::TruthTable& tt, const std::string& a ) {
    return formula_dict( ttmin::minimize_rof_xor_a( tt, ttmin::parse_assignment( a, tt.n ) ) );
  } );
  m.def( "minimize_uf2",
         []( const ttmin::TruthTable& tt ) { return formula_dict( ttmin::minimize_uf2( tt ) ); } );
  m.def( "minimize_pi2a",
         []( const ttmin::TruthTable& tt ) { return formula_dict( ttmin::minimize_pi2a( tt ) ); } );
  m.def( "sigma2a", []( const ttmin::TruthTable& tt ) { return formula_dict( ttmin::sigma2a( tt ) ); } );
  m.def( "minimize_f2a",
         []( const ttmin::TruthTable& tt ) { return formula_dict( ttmin::minimize_f2a( tt ) ); } );

  m.def( "obdd_build", []( const ttmin::TruthTable& tt, const std::vector<int>& order ) {
    std::vector<int> zero_based;
    for ( int v : order )
      zero_based.push_back( v - 1 );
    auto d = ttmin::obdd_build( tt, zero_based );
    py::dict out;
    out["size"] = d.size();
    out["repr"] = ttmin::to_string( d );
    out["dot"] = ttmin::to_dot( d );
    return out;
  } );
  m.def( "obdd_optimal_order", []( const ttmin::TruthTable& tt ) {
    auto best = ttmin::obdd_optimal_order( tt );
    std::vector<int> one_based;
    for ( int v : best.order )
      one_based.push_back( v + 1 );
    return py::make_tuple( one_based, best.size );
  } );
  m.def( "mubp_construct", []( const ttmin::TruthTable& tt ) -> py::object {
    auto r = ttmin::mubp_construct( tt );
    py::dict d;
    if ( !r.ok() )
    {
      d["reject"] = r.reason;
      return d;
    }
    d["size"] = r->size();
    d["repr"] = ttmin::to_string( *r );
    return d;
  } );

  m.def( "run_suite", []( const std::string& name, std::uint64_t seed ) {
    ttmin::SuiteOptions opts;
    opts.seed = seed;
    const auto report = ttmin::run_suite( name, opts );
    py::dict d;
    d["checked"] = report.checked;
    d["failures"] = report.failures;
    d["passed"] = report.passed();
    return d;
  }, py::arg( "name" ), py::arg( "seed" ) = 0x5eed1e5 );
}
