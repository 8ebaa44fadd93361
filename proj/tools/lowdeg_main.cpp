#include <CLI11.hpp>

#include <lowdeg/boolfn.hpp>
#include <lowdeg/embedding.hpp>
#include <lowdeg/enumeration.hpp>
#include <lowdeg/errors.hpp>
#include <lowdeg/family.hpp>
#include <lowdeg/io.hpp>
#include <lowdeg/protocol.hpp>
#include <lowdeg/rng.hpp>
#include <lowdeg/spectrum.hpp>
#include <lowdeg/verify.hpp>
#include <lowdeg/yao.hpp>

#include <nlohmann/json.hpp>

#include <bit>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace
{

using namespace lowdeg;
namespace fs = std::filesystem;

std::ofstream open_out( const fs::path& path )
{
  std::ofstream os( path );
  if ( !os )
  {
    throw error( "cannot open " + path.string() + " for writing" );
  }
  return os;
}

int run_transform( const std::string& in, const std::string& out )
{
  const auto f = read_function_file( in );
  auto os = open_out( out );
  write_spectrum_csv( os, walsh_hadamard( f ) );
  return 0;
}

int run_degree( const std::string& in )
{
  const auto f = read_function_file( in );
  std::cout << fourier_degree( walsh_hadamard( f ) ) << '\n';
  return 0;
}

int run_distance( const std::string& a, const std::string& b )
{
  const auto fa = read_function_file( a );
  const auto fb = read_function_file( b );
  std::cout << hamming_distance( fa, fb ).str() << '\n';
  return 0;
}

int run_construct( const std::string& family_path, const std::string& out,
                   const std::string& certify, int m, const std::string& cert_out )
{
  const auto fam = read_family_file( family_path );
  const auto f = build_block_function( fam );
  if ( !out.empty() )
  {
    write_function_file( out, f );
  }
  if ( !certify.empty() )
  {
    const auto mode = certify == "prop2" ? farness_mode::heavy_set : farness_mode::top_degree;
    certificate_record record{ farness_certificate( fam, m, mode ), std::nullopt };
    if ( fam.n <= max_oracle_arity )
    {
      record.oracle_min =
          brute_force_min_distance( f, record.certificate.degree_threshold );
    }
    const certificate_record rows[] = { record };
    if ( cert_out.empty() )
    {
      write_certificates_csv( std::cout, rows );
    }
    else
    {
      auto os = open_out( cert_out );
      write_certificates_csv( os, rows );
    }
  }
  return 0;
}

int run_embed_disj( const std::string& instance_path, int n,
                    const std::string& function_out, const std::string& verdict_out )
{
  const auto inst = read_block_instance_file( instance_path );
  if ( ( inst.l_blocks & ( inst.l_blocks - 1 ) ) != 0 )
  {
    throw invalid_argument( "block count must be a power of two" );
  }
  const int l = std::countr_zero( inst.l_blocks );
  const int k = n - int( inst.m );

  const auto ci = families_from_block_instance( inst, n, k, l );
  const auto verdict = classify_h( ci );
  if ( !function_out.empty() )
  {
    write_function_file( function_out, combine_h( ci ) );
  }

  nlohmann::json j;
  j["classification"] = verdict.classification == h_class::far ? "far" : "low_degree";
  j["degree"] = verdict.degree;
  j["tail"] = verdict.tail.str();
  if ( verdict_out.empty() )
  {
    std::cout << j.dump() << '\n';
  }
  else
  {
    open_out( verdict_out ) << j.dump() << '\n';
  }
  return 0;
}

int run_simulate_protocol( const std::string& f_path, const std::string& g_path, int n,
                           int k, int l, int rounds, int seeds, std::uint64_t seed_base,
                           const std::string& out )
{
  const auto f = read_function_file( f_path );
  const auto g = read_function_file( g_path );
  if ( n != 0 && n != f.arity() )
  {
    throw invalid_argument( "--n disagrees with the arity of the function files" );
  }
  const derivative_tester t( f.arity(), k, std::uint64_t( rounds ) );

  std::vector<transcript> transcripts;
  transcripts.reserve( std::size_t( seeds ) );
  for ( int i = 0; i < seeds; ++i )
  {
    transcripts.push_back( compile_and_run( t, f, g, l, seed_base + std::uint64_t( i ) ) );
  }
  if ( out.empty() )
  {
    write_transcripts_csv( std::cout, transcripts );
  }
  else
  {
    auto os = open_out( out );
    write_transcripts_csv( os, transcripts );
  }
  return 0;
}

int run_experiment_yao( int n, int k, int l, int d, std::uint64_t samples,
                        std::uint64_t seed, const std::string& decision,
                        const std::string& out )
{
  distribution_params params;
  params.n = n;
  params.k = k;
  params.l = l;
  params.mode = distribution_mode::negative;
  params.seed = seed;
  params.validate();

  splitmix64 rng( seed );
  query_plan plan;
  plan.n = n;
  for ( int q = 0; q < d; ++q )
  {
    plan.points.push_back( std::uint32_t( rng.below( std::uint64_t( 1 ) << n ) ) );
  }

  const bool accept_all = decision == "accept-all";
  const decision_rule rule = [accept_all]( const std::vector<int>& ) {
    return accept_all;
  };
  const auto est = estimate_tester_error( plan, rule, params, samples, rng.next() );

  const auto covered = covered_prefixes( plan, l );
  nlohmann::json j;
  j["seed"] = seed;
  j["plan_points"] = plan.points;
  j["covered"] = std::vector<std::uint32_t>( covered.begin(), covered.end() );
  j["analytic_floor"] = est.analytic_floor.str();
  j["mc_estimate"] = est.estimate;
  j["ci95"] = { est.ci95_low, est.ci95_high };
  j["consistent_with_floor"] = est.consistent_with_floor;
  if ( out.empty() )
  {
    std::cout << j.dump() << '\n';
  }
  else
  {
    open_out( out ) << j.dump() << '\n';
  }
  return 0;
}

int run_verify( const std::string& config_path, const std::string& output_dir,
                const std::string& format, std::uint64_t seed, bool seed_given )
{
  grid_config cfg =
      config_path.empty() ? grid_config::defaults() : grid_config::load( config_path );
  if ( seed_given )
  {
    cfg.seed = seed;
  }

  const auto report = run_verification( cfg );

  const fs::path dir( output_dir );
  fs::create_directories( dir );
  if ( format == "csv" || format == "both" )
  {
    auto os = open_out( dir / "report.csv" );
    write_report_csv( os, report );
  }
  if ( format == "json" || format == "both" )
  {
    auto os = open_out( dir / "report.json" );
    write_report_json( os, report );
  }

  for ( const auto& row : report.rows )
  {
    if ( row.status != check_status::pass )
    {
      std::cout << ( row.status == check_status::fail ? "FAIL " : "skip " )
                << row.check_id << " [" << row.parameters << "] expected: " << row.expected
                << " observed: " << row.observed << '\n';
    }
  }
  std::cout << report.passed() << " passed, " << report.failed() << " failed, "
            << report.skipped() << " skipped\n";
  return report.all_passed() ? 0 : 1;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "exact verification toolkit for Boolean-function degree constructions" };
  app.require_subcommand( 1 );

  std::string in, out, a_path, b_path, family_path, cert_mode, cert_out;
  std::string instance_path, function_out, verdict_out, f_path, g_path;
  std::string config_path, output_dir = ".", format = "both", decision = "accept-all";
  int n = 0, k = 0, l = 0, m = 0, d = 0, rounds = 1, seeds = 1;
  std::uint64_t seed = 0, samples = 100000;

  auto* transform = app.add_subcommand( "transform", "function file -> exact spectrum CSV" );
  transform->add_option( "--in", in, "function file" )->required();
  transform->add_option( "--out", out, "spectrum CSV path" )->required();

  auto* degree = app.add_subcommand( "degree", "print the exact Fourier degree" );
  degree->add_option( "--in", in, "function file" )->required();

  auto* distance = app.add_subcommand( "distance", "exact normalized Hamming distance" );
  distance->add_option( "--a", a_path, "function file" )->required();
  distance->add_option( "--b", b_path, "function file" )->required();

  auto* construct =
      app.add_subcommand( "construct", "build a block function from a family file" );
  construct->add_option( "--family", family_path, "family file" )->required();
  construct->add_option( "--out", out, "function file to write" );
  construct->add_option( "--certify", cert_mode, "emit a farness certificate" )
      ->check( CLI::IsMember( { "prop2", "prop3" } ) );
  construct->add_option( "--m", m, "cardinality threshold for the certificate" );
  construct->add_option( "--cert-out", cert_out, "certificate CSV path (default stdout)" );

  auto* embed = app.add_subcommand( "embed-disj",
                                    "embed a block-DISJ instance as a combined function" );
  embed->add_option( "--instance", instance_path, "instance file" )->required();
  embed->add_option( "--n", n, "ambient arity" )->required();
  embed->add_option( "--function-out", function_out, "function file for h" );
  embed->add_option( "--verdict-out", verdict_out, "verdict JSON path (default stdout)" );

  auto* simulate = app.add_subcommand( "simulate-protocol",
                                       "compile a tester into a two-party protocol" );
  std::string tester_kind = "derivative";
  simulate->add_option( "--tester", tester_kind, "tester kind" )
      ->check( CLI::IsMember( { "derivative" } ) );
  simulate->add_option( "--f", f_path, "Alice's function file" )->required();
  simulate->add_option( "--g", g_path, "Bob's function file" )->required();
  simulate->add_option( "--n", n, "arity (validated against the function files)" );
  simulate->add_option( "--k", k, "degree bound under test" )->required();
  simulate->add_option( "--l", l, "prefix dimension of the combining character" )
      ->required();
  simulate->add_option( "--rounds", rounds, "tester rounds" );
  simulate->add_option( "--seeds", seeds, "number of seeds to run" );
  simulate->add_option( "--seed", seed, "first seed" );
  simulate->add_option( "--out", out, "transcript CSV path (default stdout)" );

  auto* yao = app.add_subcommand( "experiment-yao",
                                  "query-plan coverage and mixture error estimate" );
  yao->add_option( "--n", n, "arity" )->required();
  yao->add_option( "--k", k, "degree parameter" )->required();
  yao->add_option( "--l", l, "prefix dimension" )->required();
  yao->add_option( "--d", d, "plan size" )->required();
  yao->add_option( "--samples", samples, "Monte Carlo samples" );
  yao->add_option( "--seed", seed, "seed" );
  yao->add_option( "--decision", decision, "decision rule" )
      ->check( CLI::IsMember( { "accept-all", "reject-all" } ) );
  yao->add_option( "--out", out, "JSON path (default stdout)" );

  auto* verify = app.add_subcommand( "verify", "run the verification grid" );
  verify->add_option( "--config", config_path, "grid config file (defaults when absent)" );
  verify->add_option( "--output-dir", output_dir, "directory for report files" );
  verify->add_option( "--format", format, "report format" )
      ->check( CLI::IsMember( { "csv", "json", "both" } ) );
  auto* verify_seed = verify->add_option( "--seed", seed, "override the grid seed" );

  CLI11_PARSE( app, argc, argv );

  try
  {
    if ( *transform )
    {
      return run_transform( in, out );
    }
    if ( *degree )
    {
      return run_degree( in );
    }
    if ( *distance )
    {
      return run_distance( a_path, b_path );
    }
    if ( *construct )
    {
      return run_construct( family_path, out, cert_mode, m, cert_out );
    }
    if ( *embed )
    {
      return run_embed_disj( instance_path, n, function_out, verdict_out );
    }
    if ( *simulate )
    {
      return run_simulate_protocol( f_path, g_path, n, k, l, rounds, seeds, seed, out );
    }
    if ( *yao )
    {
      return run_experiment_yao( n, k, l, d, samples, seed, decision, out );
    }
    if ( *verify )
    {
      return run_verify( config_path, output_dir, format, seed, verify_seed->count() > 0 );
    }
  }
  catch ( const parse_error& e )
  {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  }
  catch ( const error& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  catch ( const std::exception& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
