#include <doctest.h>

#include <lowdeg/boolfn.hpp>
#include <lowdeg/family.hpp>
#include <lowdeg/io.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

using namespace lowdeg;
namespace fs = std::filesystem;

namespace
{

struct cli_result
{
  int exit_code;
  std::string output;
};

fs::path work_dir()
{
  const auto dir = fs::temp_directory_path() / "lowdeg_cli_tests";
  fs::create_directories( dir );
  return dir;
}

cli_result run_cli( const std::string& args )
{
  const auto out_path = work_dir() / "stdout.txt";
  const std::string cmd = std::string( LOWDEG_CLI_PATH ) + " " + args + " > " +
                          out_path.string() + " 2>&1";
  const int rc = std::system( cmd.c_str() );
  std::ifstream is( out_path );
  std::stringstream ss;
  ss << is.rdbuf();
  return { WIFEXITED( rc ) ? WEXITSTATUS( rc ) : -1, ss.str() };
}

std::string slurp( const fs::path& path )
{
  std::ifstream is( path );
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

} // namespace

TEST_SUITE( "cli" )
{
  TEST_CASE( "degree of the full character" )
  {
    const auto fn = work_dir() / "chi3.json";
    write_function_file( fn, character( 3, 0b111 ) );
    const auto r = run_cli( "degree --in " + fn.string() );
    CHECK( r.exit_code == 0 );
    CHECK( r.output == "3\n" );
  }

  TEST_CASE( "distance between a character and its negation" )
  {
    const auto a = work_dir() / "a.json";
    const auto b = work_dir() / "b.json";
    write_function_file( a, character( 4, 0b0011 ) );
    write_function_file( b, character( 4, 0b0011 ) * character( 4, 0 ) );
    const auto r = run_cli( "distance --a " + a.string() + " --b " + b.string() );
    CHECK( r.exit_code == 0 );
    CHECK( r.output == "0/2^0\n" );
  }

  TEST_CASE( "construct writes the block-function record" )
  {
    const auto fam_path = work_dir() / "fam.json";
    const auto out_path = work_dir() / "fn.json";
    character_family fam{ 3, 1, { 0b110, 0 } };
    write_family_file( fam_path, fam );
    const auto r = run_cli( "construct --family " + fam_path.string() + " --out " +
                            out_path.string() );
    CHECK( r.exit_code == 0 );
    CHECK( slurp( out_path ) == "{\"n\":3,\"table_hex\":\"82\"}\n" );
  }

  TEST_CASE( "construct certifies farness with the oracle column" )
  {
    const auto fam_path = work_dir() / "fam2.json";
    character_family fam{ 3, 1, { 0b110, 0 } };
    write_family_file( fam_path, fam );
    const auto r = run_cli( "construct --family " + fam_path.string() +
                            " --certify prop2 --m 2" );
    CHECK( r.exit_code == 0 );
    CHECK( r.output == "mode,l,m,tail_exact,distance_lb_exact,paper_claimed,oracle_min\n"
                       "prop2,1,2,1/2^1,1/2^3,1/2^2,1/2^2\n" );
  }

  TEST_CASE( "transform emits a parseable exact spectrum" )
  {
    const auto fn = work_dir() / "f.json";
    const auto spec_path = work_dir() / "spec.csv";
    write_function_file( fn, character( 3, 0b101 ) );
    const auto r =
        run_cli( "transform --in " + fn.string() + " --out " + spec_path.string() );
    CHECK( r.exit_code == 0 );
    std::ifstream is( spec_path );
    const auto spec = read_spectrum_csv( is );
    CHECK( spec.coeff( 0b101 ) == 8 );
  }

  TEST_CASE( "embed-disj reports the far verdict on the intersecting instance" )
  {
    /* n=4, k=2, l=1: block 0 disjoint, block 1 intersecting */
    const auto inst_path = work_dir() / "inst.json";
    bitvec x( 4 ), y( 4 );
    x.set( 0 );
    y.set( 1 ); /* block 0: supports {1} vs {2} */
    x.set( 2 );
    y.set( 2 ); /* block 1: both support {1} */
    write_block_instance_file( inst_path, block_disj_instance{ 2, 2, 1, x, y } );

    const auto r = run_cli( "embed-disj --instance " + inst_path.string() + " --n 4" );
    CHECK( r.exit_code == 0 );
    CHECK( r.output == "{\"classification\":\"far\",\"degree\":4,\"tail\":\"1/2^2\"}\n" );
  }

  TEST_CASE( "embed-disj reports low degree on the disjoint instance" )
  {
    const auto inst_path = work_dir() / "inst2.json";
    bitvec x( 4 ), y( 4 );
    x.set( 0 );
    y.set( 1 );
    x.set( 3 );
    y.set( 2 );
    write_block_instance_file( inst_path, block_disj_instance{ 2, 2, 1, x, y } );
    const auto h_path = work_dir() / "h.json";
    const auto r = run_cli( "embed-disj --instance " + inst_path.string() + " --n 4" +
                            " --function-out " + h_path.string() );
    CHECK( r.exit_code == 0 );
    CHECK( r.output.find( "\"classification\":\"low_degree\"" ) != std::string::npos );
    CHECK( read_function_file( h_path ).arity() == 4 );
  }

  TEST_CASE( "simulate-protocol accounts two bits per query" )
  {
    const auto f_path = work_dir() / "pf.json";
    const auto g_path = work_dir() / "pg.json";
    splitmix64 rng( 5150 );
    write_function_file( f_path, random_function( 6, rng ) );
    write_function_file( g_path, random_function( 6, rng ) );
    const auto r = run_cli( "simulate-protocol --tester derivative --f " +
                            f_path.string() + " --g " + g_path.string() +
                            " --k 2 --l 1 --rounds 2 --seeds 3 --seed 11" );
    CHECK( r.exit_code == 0 );
    std::stringstream ss( r.output );
    std::string line;
    std::getline( ss, line );
    CHECK( line == "seed,queries,bits,verdict" );
    int rows = 0;
    while ( std::getline( ss, line ) )
    {
      ++rows;
      std::stringstream fields( line );
      std::string seed_s, queries_s, bits_s;
      std::getline( fields, seed_s, ',' );
      std::getline( fields, queries_s, ',' );
      std::getline( fields, bits_s, ',' );
      CHECK( std::stoull( bits_s ) == 2 * std::stoull( queries_s ) );
      /* full budget is rounds * 2^(k+1) = 16 queries */
      CHECK( std::stoull( queries_s ) <= 16 );
      CHECK( std::stoull( queries_s ) % 8 == 0 );
    }
    CHECK( rows == 3 );
  }

  TEST_CASE( "experiment-yao emits the analytic floor" )
  {
    const auto r = run_cli( "experiment-yao --n 9 --k 6 --l 2 --d 1 "
                            "--samples 2000 --seed 7" );
    CHECK( r.exit_code == 0 );
    CHECK( r.output.find( "\"analytic_floor\":\"3/2^3\"" ) != std::string::npos );
    CHECK( r.output.find( "\"consistent_with_floor\":true" ) != std::string::npos );
  }

  TEST_CASE( "outputs are byte-identical across runs" )
  {
    const auto r1 = run_cli( "experiment-yao --n 9 --k 6 --l 2 --d 2 "
                             "--samples 3000 --seed 99" );
    const auto r2 = run_cli( "experiment-yao --n 9 --k 6 --l 2 --d 2 "
                             "--samples 3000 --seed 99" );
    CHECK( r1.exit_code == 0 );
    CHECK( r1.output == r2.output );
  }

  TEST_CASE( "verify with a tiny config writes both reports and exits zero" )
  {
    const auto dir = work_dir() / "verify_out";
    const auto cfg_path = work_dir() / "grid.cfg";
    std::ofstream cfg( cfg_path );
    cfg << "checks = transform, lemma2\n"
        << "transform.arities = 1..3\n"
        << "transform.functions = 20\n"
        << "lemma2.max_lk = 3\n";
    cfg.close();
    const auto r = run_cli( "verify --config " + cfg_path.string() + " --output-dir " +
                            dir.string() );
    CHECK( r.exit_code == 0 );
    CHECK( fs::exists( dir / "report.csv" ) );
    CHECK( fs::exists( dir / "report.json" ) );
    CHECK( slurp( dir / "report.csv" ).find( ",fail" ) == std::string::npos );
  }

  TEST_CASE( "verify with an empty grid exits zero" )
  {
    const auto cfg_path = work_dir() / "empty.cfg";
    std::ofstream cfg( cfg_path );
    cfg << "checks = none\n";
    cfg.close();
    const auto r = run_cli( "verify --config " + cfg_path.string() + " --output-dir " +
                            ( work_dir() / "empty_out" ).string() );
    CHECK( r.exit_code == 0 );
    CHECK( r.output.find( "0 passed, 0 failed, 0 skipped" ) != std::string::npos );
  }

  TEST_CASE( "malformed inputs yield a parse-error exit code" )
  {
    const auto bad = work_dir() / "bad.json";
    std::ofstream( bad ) << "{\"n\":2}\n";
    const auto r = run_cli( "degree --in " + bad.string() );
    CHECK( r.exit_code == 2 );
    CHECK( r.output.find( "parse error" ) != std::string::npos );
  }
}
