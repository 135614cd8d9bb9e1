#include "ttmin/bp.hpp"
#include "ttmin/core.hpp"
#include "ttmin/formulas.hpp"
#include "ttmin/hardness.hpp"
#include "ttmin/mlpoly.hpp"
#include "ttmin/oracles.hpp"
#include "ttmin/suites.hpp"
#include "ttmin/trees.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace
{

using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_reject = 2;

std::string read_file( const std::string& path )
{
  std::ifstream in( path );
  if ( !in )
    throw std::invalid_argument( "cannot open " + path );
  std::ostringstream oss;
  oss << in.rdbuf();
  return oss.str();
}

struct TableInput
{
  std::string inline_text;
  std::string file;
  int max_n = ttmin::max_variables;

  ttmin::ParsedTable load() const
  {
    ttmin::ParsedTable parsed = file.empty() ? ttmin::from_text( inline_text )
                                             : ttmin::parse_table_text( read_file( file ) );
    const int n = std::holds_alternative<ttmin::TruthTable>( parsed )
                      ? std::get<ttmin::TruthTable>( parsed ).n
                      : std::get<ttmin::PartialTruthTable>( parsed ).n;
    if ( n > max_n )
      throw std::invalid_argument( "table exceeds --max-n" );
    return parsed;
  }

  ttmin::TruthTable load_full() const
  {
    auto parsed = load();
    if ( auto* tt = std::get_if<ttmin::TruthTable>( &parsed ) )
      return std::move( *tt );
    throw std::invalid_argument( "this command needs a full truth table" );
  }

  ttmin::PartialTruthTable load_partial() const
  {
    auto parsed = load();
    if ( auto* p = std::get_if<ttmin::PartialTruthTable>( &parsed ) )
      return std::move( *p );
    auto& tt = std::get<ttmin::TruthTable>( parsed );
    return ttmin::parse_partial_truth_table( ttmin::to_string( tt ) );
  }
};

void add_table_options( CLI::App* cmd, TableInput& input )
{
  auto* tt = cmd->add_option( "--tt", input.inline_text, "inline truth table row" );
  auto* file = cmd->add_option( "--file", input.file, "table file (optional n=<k> header line)" );
  tt->excludes( file );
  cmd->add_option( "--max-n", input.max_n, "reject larger inputs before dispatch" );
}

void emit( bool as_json, const json& payload, const std::string& text )
{
  if ( as_json )
    std::cout << payload.dump() << "\n";
  else
    std::cout << text << "\n";
}

int emit_reject( bool as_json, const std::string& model, const std::string& reason )
{
  json payload = { { "model", model }, { "reject", reason } };
  if ( as_json )
    std::cout << payload.dump() << "\n";
  else
    std::cout << "reject: " << reason << "\n";
  return exit_reject;
}

int emit_model( bool as_json, const std::string& model, int size, const std::string& measure,
                const std::string& repr, const json& extra = json::object() )
{
  json payload = { { "model", model }, { "size", size }, { "measure", measure },
                   { "repr", repr } };
  for ( auto it = extra.begin(); it != extra.end(); ++it )
    payload[it.key()] = it.value();
  emit( as_json, payload, model + " size=" + std::to_string( size ) + " (" + measure + ")\n" + repr );
  return exit_ok;
}

int run_min( const std::string& model, const TableInput& input, std::optional<int> c_flag,
             std::optional<std::string> a_flag, std::optional<std::string> order_flag,
             bool as_json )
{
  using namespace ttmin;
  const TruthTable tt = input.load_full();

  auto formula_result = [&]( const Rejectable<MinimizedFormula>& r ) {
    if ( !r.ok() )
      return emit_reject( as_json, model, r.reason );
    json extra;
    extra["leaves"] = leaf_count( r->formula );
    extra["algebraic"] = to_algebraic( r->formula );
    return emit_model( as_json, model, r->size, r->measure, to_string( r->formula ), extra );
  };

  if ( model == "dt" )
  {
    auto t = minimize_dt( tt );
    return emit_model( as_json, model, t.size(), "nodes", to_string( t ) );
  }
  if ( model == "ldt" )
  {
    auto t = minimize_ldt( tt );
    return emit_model( as_json, model, t.size(), "nodes", to_string( t ) );
  }
  if ( model == "ldt_c" )
  {
    if ( !c_flag )
      throw std::invalid_argument( "--c is required for ldt_c" );
    auto t = minimize_ldt_c( tt, *c_flag );
    return emit_model( as_json, model, t.size(), "nodes", to_string( t ) );
  }
  if ( model == "srodt" )
  {
    auto t = minimize_srodt( tt );
    return emit_model( as_json, model, t.size(), "nodes", to_string( t ) );
  }
  if ( model == "ldl" )
  {
    auto r = minimize_ldl( tt );
    if ( !r.ok() )
      return emit_reject( as_json, model, r.reason );
    json extra;
    extra["lower_bound"] = ldl_size_lower_bound( tt );
    return emit_model( as_json, model, r->size(), "inner nodes", to_string( *r ), extra );
  }
  if ( model == "mono_dnf" )
    return formula_result( minimize_monotone_dnf( tt ) );
  if ( model == "unate_dnf" )
    return formula_result( minimize_unate_dnf( tt ) );
  if ( model == "unate_cnf" )
    return formula_result( minimize_unate_cnf( tt ) );
  if ( model == "rof" )
    return formula_result( minimize_boolean_rof( tt ) );
  if ( model == "rof_xor" )
    return formula_result( minimize_rof_xor( tt ) );
  if ( model == "rof_neg" )
    return formula_result( minimize_rof_neg( tt ) );
  if ( model == "rof_xor_neg" )
    return formula_result( minimize_rof_xor_neg( tt ) );
  if ( model == "rof_xor_a" )
  {
    if ( !a_flag )
      throw std::invalid_argument( "--a is required for rof_xor_a" );
    const std::uint32_t shift = ttmin::parse_assignment( *a_flag, tt.n );
    return formula_result( minimize_rof_xor_a( tt, shift ) );
  }
  if ( model == "uf2" )
    return formula_result( minimize_uf2( tt ) );
  if ( model == "pi2a" )
    return formula_result( minimize_pi2a( tt ) );
  if ( model == "sigma2a" )
  {
    auto r = sigma2a( tt );
    json extra;
    extra["algebraic"] = to_algebraic( r.formula );
    return emit_model( as_json, model, r.size, r.measure, to_string( r.formula ), extra );
  }
  if ( model == "f2a" )
  {
    auto r = minimize_f2a( tt );
    json extra;
    extra["algebraic"] = to_algebraic( r.formula );
    return emit_model( as_json, model, r.size, r.measure, to_string( r.formula ), extra );
  }
  if ( model == "anf" )
  {
    auto p = to_multilinear( tt );
    return emit_model( as_json, model, sigma2a( tt ).size, "leaves", to_string( p ) );
  }
  if ( model == "mubp" )
  {
    auto r = mubp_construct( tt );
    if ( !r.ok() )
      return emit_reject( as_json, model, r.reason );
    return emit_model( as_json, model, r->size(), "nodes", to_string( *r ) );
  }
  if ( model == "obdd" )
  {
    std::vector<int> order;
    if ( order_flag )
    {
      std::istringstream iss( *order_flag );
      std::string chunk;
      while ( std::getline( iss, chunk, ',' ) )
        order.push_back( std::stoi( chunk ) - 1 );
    }
    else
    {
      order = obdd_optimal_order( tt ).order;
    }
    auto d = obdd_build( tt, order );
    json extra;
    {
      std::string otxt;
      for ( int v : d.order )
      {
        if ( !otxt.empty() )
          otxt += ",";
        otxt += std::to_string( v + 1 );
      }
      extra["order"] = otxt;
      extra["dot"] = to_dot( d );
    }
    return emit_model( as_json, model, d.size(), "nodes", to_string( d ), extra );
  }
  if ( model == "obdd_opt" )
  {
    auto best = obdd_optimal_order( tt );
    std::string otxt;
    for ( int v : best.order )
    {
      if ( !otxt.empty() )
        otxt += ",";
      otxt += std::to_string( v + 1 );
    }
    json extra;
    extra["order"] = otxt;
    return emit_model( as_json, model, best.size, "nodes", otxt, extra );
  }
  throw std::invalid_argument( "unknown model: " + model );
}

int run_oracle( const std::string& model, const TableInput& input, bool as_json )
{
  using namespace ttmin;
  auto emit_size = [&]( const std::string& name, std::optional<long long> size ) {
    json payload = { { "oracle", name } };
    if ( size )
      payload["size"] = *size;
    else
      payload["size"] = nullptr;
    emit( as_json, payload,
          name + " minimum: " + ( size ? std::to_string( *size ) : std::string( "none" ) ) );
    return size ? exit_ok : exit_reject;
  };

  if ( model == "dt" )
    return emit_size( model, oracles::min_dt_size( input.load_full() ) );
  if ( model == "ldt" )
    return emit_size( model, oracles::min_ldt_size( input.load_full() ) );
  if ( model == "srodt" )
    return emit_size( model, oracles::min_srodt_size( input.load_full() ) );
  if ( model == "ldl" )
  {
    auto r = oracles::min_ldl_size( input.load_full() );
    return emit_size( model, r ? std::optional<long long>( *r ) : std::nullopt );
  }
  if ( model == "mondnf_star" )
  {
    auto r = brute_min_mondnf_partial( input.load_partial() );
    return emit_size( model, r );
  }
  if ( model == "obdd" )
    return emit_size( model, oracles::min_obdd_size_all_orders( input.load_full() ) );
  if ( model == "set_cover" )
  {
    if ( input.file.empty() )
      throw std::invalid_argument( "set_cover needs --file with an instance" );
    const auto inst = parse_set_cover( read_file( input.file ) );
    auto r = brute_set_cover( inst );
    return emit_size( model, r ? std::optional<long long>( *r ) : std::nullopt );
  }
  throw std::invalid_argument( "unknown oracle: " + model );
}

std::vector<std::vector<int>> parse_sets_flag( const std::string& text )
{
  std::vector<std::vector<int>> sets;
  std::istringstream iss( text );
  std::string chunk;
  while ( std::getline( iss, chunk, ';' ) )
  {
    std::vector<int> set;
    std::istringstream elems( chunk );
    std::string e;
    while ( std::getline( elems, e, ',' ) )
    {
      if ( !e.empty() )
        set.push_back( std::stoi( e ) );
    }
    if ( !set.empty() )
      sets.push_back( std::move( set ) );
  }
  return sets;
}

void write_file( const std::string& path, const std::string& content )
{
  std::ofstream out( path );
  if ( !out )
    throw std::invalid_argument( "cannot write " + path );
  out << content;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "exact truth-table minimization toolkit (TTMIN_THREADS caps suite parallelism)" };
  app.require_subcommand( 1 );
  app.fallthrough();
  bool as_json = false;
  app.add_flag( "--json", as_json, "machine-readable output" );

  // min
  auto* min_cmd = app.add_subcommand( "min", "minimize a model for a full truth table" );
  std::string min_model;
  min_cmd->add_option( "--model", min_model, "target model" )->required();
  TableInput min_input;
  add_table_options( min_cmd, min_input );
  std::optional<int> c_flag;
  min_cmd->add_option( "--c", c_flag, "Hamming weight bound for ldt_c" );
  std::optional<std::string> a_flag;
  min_cmd->add_option( "--a", a_flag, "negation pattern for rof_xor_a (x1 first)" );
  std::optional<std::string> order_flag;
  min_cmd->add_option( "--order", order_flag, "comma-separated 1-based variable order for obdd" );

  // oracle
  auto* oracle_cmd = app.add_subcommand( "oracle", "run a brute-force reference oracle" );
  std::string oracle_model;
  oracle_cmd->add_option( "--model", oracle_model, "oracle name" )->required();
  TableInput oracle_input;
  add_table_options( oracle_cmd, oracle_input );

  // eval
  auto* eval_cmd = app.add_subcommand( "eval", "evaluate a truth table on an assignment" );
  TableInput eval_input;
  add_table_options( eval_cmd, eval_input );
  std::string eval_assignment;
  eval_cmd->add_option( "--a", eval_assignment, "assignment bits, x1 first" )->required();

  // gen
  auto* gen_cmd = app.add_subcommand( "gen", "generate hardness reduction instances" );
  std::string gen_kind;
  gen_cmd->add_option( "kind", gen_kind, "sc2tree or psc2dnf" )->required();
  int gen_m = 0, gen_k = 0, gen_n = 0;
  std::string gen_sets, gen_blocks, gen_out = "instance";
  gen_cmd->add_option( "--m", gen_m, "universe size (sc2tree)" );
  gen_cmd->add_option( "--n", gen_n, "element count (psc2dnf)" );
  gen_cmd->add_option( "--sets", gen_sets, "sets, e.g. 1,2;2,3" );
  gen_cmd->add_option( "--blocks", gen_blocks, "comma-separated block id (0..2) per element" );
  gen_cmd->add_option( "--k", gen_k, "target size" );
  gen_cmd->add_option( "--out", gen_out, "output file prefix" );

  // verify
  auto* verify_cmd = app.add_subcommand( "verify", "fuzz the reductions against brute force" );
  std::string verify_which = "tree";
  verify_cmd->add_option( "which", verify_which, "tree or dnf" );
  std::uint64_t verify_seed = 0x5eed1e5;
  int verify_trials = 50;
  int verify_max_n = 6;
  verify_cmd->add_option( "--seed", verify_seed, "rng seed (recorded in the report)" );
  verify_cmd->add_option( "--trials", verify_trials, "random instances (tree)" );
  verify_cmd->add_option( "--max-n", verify_max_n, "largest n (dnf)" );

  // suite
  auto* suite_cmd = app.add_subcommand( "suite", "run an acceptance suite" );
  std::string suite_name;
  suite_cmd->add_option( "name", suite_name, "trichotomy | oracles | reductions | obdd-orders" )
      ->required();
  std::uint64_t suite_seed = 0x5eed1e5;
  suite_cmd->add_option( "--seed", suite_seed, "rng seed" );

  CLI11_PARSE( app, argc, argv );

  try
  {
    if ( min_cmd->parsed() )
      return run_min( min_model, min_input, c_flag, a_flag, order_flag, as_json );

    if ( oracle_cmd->parsed() )
      return run_oracle( oracle_model, oracle_input, as_json );

    if ( eval_cmd->parsed() )
    {
      const auto tt = eval_input.load_full();
      const auto a = ttmin::parse_assignment( eval_assignment, tt.n );
      const int v = ttmin::evaluate( tt, a ) ? 1 : 0;
      emit( as_json, nlohmann::json{ { "value", v } }, std::to_string( v ) );
      return exit_ok;
    }

    if ( gen_cmd->parsed() )
    {
      if ( gen_kind == "sc2tree" )
      {
        ttmin::SetCoverInstance inst;
        inst.m = gen_m;
        inst.k = gen_k;
        inst.sets = parse_sets_flag( gen_sets );
        const auto reduced = ttmin::reduce_sc_to_tree( inst );

        write_file( gen_out + ".sc", ttmin::to_string( inst ) + "\n" );
        write_file( gen_out + ".tt",
                    "n=" + std::to_string( reduced.tt.n ) + "\n" + ttmin::to_string( reduced.tt ) +
                        "\n" );
        json sidecar;
        sidecar["k"] = reduced.k;
        sidecar["tests"] = reduced.tests;
        write_file( gen_out + ".json", sidecar.dump( 2 ) + "\n" );
        std::cout << gen_out << ".sc " << gen_out << ".tt " << gen_out << ".json\n";
        return exit_ok;
      }
      if ( gen_kind == "psc2dnf" )
      {
        ttmin::ThreePscInstance inst;
        inst.n = gen_n;
        inst.k = gen_k;
        {
          std::istringstream iss( gen_blocks );
          std::string chunk;
          while ( std::getline( iss, chunk, ',' ) )
            inst.block_of.push_back( std::stoi( chunk ) );
        }
        inst.sets = parse_sets_flag( gen_sets );
        const auto reduced = ttmin::reduce_3psc_to_mondnf_star( inst );

        write_file( gen_out + ".tt", "n=" + std::to_string( reduced.ptt.n ) + "\n" +
                                         ttmin::to_string( reduced.ptt ) + "\n" );
        json sidecar;
        sidecar["k"] = reduced.k;
        sidecar["q"] = reduced.q;
        sidecar["t"] = reduced.t;
        sidecar["v_vectors"] = reduced.v_vectors;
        sidecar["w_vectors"] = reduced.w_vectors;
        write_file( gen_out + ".json", sidecar.dump( 2 ) + "\n" );
        std::cout << gen_out << ".tt " << gen_out << ".json\n";
        return exit_ok;
      }
      throw std::invalid_argument( "unknown generator: " + gen_kind );
    }

    if ( verify_cmd->parsed() )
    {
      ttmin::ReductionReport report;
      json payload;
      if ( verify_which == "tree" )
      {
        report = ttmin::verify_tree_reduction_batch( verify_seed, verify_trials );
        payload["seed"] = verify_seed;
        payload["trials"] = verify_trials;
      }
      else if ( verify_which == "dnf" )
      {
        report = ttmin::verify_dnf_reduction_all( verify_max_n );
        payload["max_n"] = verify_max_n;
      }
      else
      {
        throw std::invalid_argument( "unknown verification: " + verify_which );
      }
      payload["which"] = verify_which;
      payload["instances"] = report.instances;
      payload["checks"] = report.checks;
      payload["failures"] = report.failures;
      std::cout << payload.dump() << "\n";
      return report.passed() ? exit_ok : exit_usage;
    }

    if ( suite_cmd->parsed() )
    {
      ttmin::SuiteOptions opts;
      opts.seed = suite_seed;
      const auto report = ttmin::run_suite( suite_name, opts );
      std::cout << ttmin::to_json( report ) << "\n";
      return report.passed() ? exit_ok : exit_usage;
    }
  }
  catch ( const std::invalid_argument& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  catch ( const std::exception& e )
  {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
