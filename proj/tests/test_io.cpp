#include <doctest.h>

#include "oracles.hpp"

#include <lowdeg/errors.hpp>
#include <lowdeg/io.hpp>
#include <lowdeg/rng.hpp>

#include <sstream>

using namespace lowdeg;

TEST_SUITE( "io" )
{
  TEST_CASE( "function records round trip" )
  {
    splitmix64 rng( 88 );
    for ( int n : { 1, 2, 5, 9 } )
    {
      const auto f = random_function( n, rng );
      std::stringstream ss;
      write_function( ss, f );
      CHECK( read_function( ss ) == f );
    }
  }

  TEST_CASE( "hex packing is nibble-wise, least significant bits first" )
  {
    /* chi_{1,2} on n=2 is -1 at points 1 and 2: nibble 0110 -> "6" */
    const auto f = character( 2, 0b11 );
    std::stringstream ss;
    write_function( ss, f );
    CHECK( ss.str() == "{\"n\":2,\"table_hex\":\"6\"}\n" );

    const auto block = build_block_function( lowdeg::testing::example_family_n3() );
    std::stringstream ss2;
    write_function( ss2, block );
    CHECK( ss2.str() == "{\"n\":3,\"table_hex\":\"82\"}\n" );
  }

  TEST_CASE( "malformed function records carry diagnostics" )
  {
    const auto parse = []( const std::string& text ) {
      std::stringstream ss( text );
      return read_function( ss );
    };
    CHECK_THROWS_AS( parse( "{}" ), parse_error );
    CHECK_THROWS_AS( parse( "{\"n\":2}" ), parse_error );
    CHECK_THROWS_AS( parse( "{\"n\":2,\"table_hex\":\"123\"}" ), parse_error );
    CHECK_THROWS_AS( parse( "{\"n\":2,\"table_hex\":\"g\"}" ), parse_error );
    CHECK_THROWS_AS( parse( "{\"n\":0,\"table_hex\":\"6\"}" ), parse_error );
    CHECK_THROWS_AS( parse( "not json" ), parse_error );
    try
    {
      parse( "{\"n\":2}" );
      FAIL( "expected a parse error" );
    }
    catch ( const parse_error& e )
    {
      CHECK( std::string( e.what() ).find( "table_hex" ) != std::string::npos );
    }
  }

  TEST_CASE( "family records round trip and validate" )
  {
    const auto fam = lowdeg::testing::example_family_n3();
    std::stringstream ss;
    write_family( ss, fam );
    const auto back = read_family( ss );
    CHECK( back.n == fam.n );
    CHECK( back.l == fam.l );
    CHECK( back.sets == fam.sets );

    std::stringstream bad( "{\"n\":3,\"l\":1,\"sets\":[1,0]}" );
    CHECK_THROWS_AS( read_family( bad ), parse_error ); /* set intersects [l] */
  }

  TEST_CASE( "instance records round trip" )
  {
    bitvec x( 4 ), y( 4 );
    x.set( 0 );
    x.set( 3 );
    y.set( 1 );
    y.set( 2 );
    const block_disj_instance inst{ 2, 2, 1, x, y };
    std::stringstream ss;
    write_block_instance( ss, inst );
    CHECK( read_block_instance( ss ) == inst );

    std::stringstream bad( "{\"l_blocks\":2,\"m\":2,\"k\":1,\"x_hex\":\"9\",\"y_hex\":\"7\"}" );
    CHECK_THROWS_AS( read_block_instance( bad ), parse_error ); /* weight broken */
  }

  TEST_CASE( "spectrum csv round trips and is exact" )
  {
    splitmix64 rng( 3 );
    const auto f = random_function( 4, rng );
    const auto spec = walsh_hadamard( f );
    std::stringstream ss;
    write_spectrum_csv( ss, spec );
    CHECK( read_spectrum_csv( ss ) == spec );

    std::stringstream header_only( "subset_mask,c_S,coefficient\n" );
    CHECK_THROWS_AS( read_spectrum_csv( header_only ), parse_error );
    std::stringstream bad_header( "mask,c\n0,1\n" );
    CHECK_THROWS_AS( read_spectrum_csv( bad_header ), parse_error );
    std::stringstream gap( "subset_mask,c_S,coefficient\n1,4,1/2^0\n" );
    CHECK_THROWS_AS( read_spectrum_csv( gap ), parse_error );
  }

  TEST_CASE( "spectrum csv lists exact coefficient fractions" )
  {
    const auto spec = walsh_hadamard( build_block_function(
        lowdeg::testing::example_family_n3() ) );
    std::stringstream ss;
    write_spectrum_csv( ss, spec );
    std::string line;
    std::getline( ss, line );
    CHECK( line == "subset_mask,c_S,coefficient" );
    std::getline( ss, line );
    CHECK( line == "0,4,1/2^1" );
    for ( int skip = 0; skip < 7; ++skip )
    {
      std::getline( ss, line );
    }
    CHECK( line == "7,-4,-1/2^1" );
  }

  TEST_CASE( "certificate csv includes the paper constant and optional oracle" )
  {
    const auto fam = lowdeg::testing::example_family_n3();
    certificate_record with{ farness_certificate( fam, 2, farness_mode::heavy_set ),
                             dyadic( 1, 2 ) };
    certificate_record without{ farness_certificate( fam, 2, farness_mode::top_degree ),
                                std::nullopt };
    const certificate_record rows[] = { with, without };
    std::stringstream ss;
    write_certificates_csv( ss, rows );
    std::string line;
    std::getline( ss, line );
    CHECK( line == "mode,l,m,tail_exact,distance_lb_exact,paper_claimed,oracle_min" );
    std::getline( ss, line );
    CHECK( line == "prop2,1,2,1/2^1,1/2^3,1/2^2,1/2^2" );
    std::getline( ss, line );
    CHECK( line == "prop3,1,2,1/2^2,1/2^4,1/2^3," );
  }

  TEST_CASE( "transcript csv layout" )
  {
    const transcript rows[] = { { 10, 5, true, 42 }, { 0, 0, false, 43 } };
    std::stringstream ss;
    write_transcripts_csv( ss, rows );
    CHECK( ss.str() == "seed,queries,bits,verdict\n42,5,10,accept\n43,0,0,reject\n" );
  }

  TEST_CASE( "file helpers create and read back" )
  {
    const auto path = std::filesystem::temp_directory_path() / "lowdeg_io_test.json";
    const auto f = character( 3, 0b101 );
    write_function_file( path, f );
    CHECK( read_function_file( path ) == f );
    std::filesystem::remove( path );
    CHECK_THROWS_AS( read_function_file( path ), error );
  }
}
