#include <doctest.h>

#include "oracles.hpp"

#include <lowdeg/boolfn.hpp>
#include <lowdeg/errors.hpp>
#include <lowdeg/rng.hpp>

using namespace lowdeg;
using lowdeg::testing::function_from_values;

TEST_SUITE( "boolfn" )
{
  TEST_CASE( "character of the empty set is the constant +1" )
  {
    const auto f = character( 3, 0 );
    for ( std::uint32_t x = 0; x < 8; ++x )
    {
      CHECK( f( x ) == 1 );
    }
  }

  TEST_CASE( "character truth table for two coordinates" )
  {
    /* chi_{1,2} on n=2 is [+1,-1,-1,+1] in index order */
    const auto f = character( 2, 0b11 );
    CHECK( f == function_from_values( 2, { 1, -1, -1, 1 } ) );
  }

  TEST_CASE( "character evaluates the coordinate product" )
  {
    const auto f = character( 3, 0b011 );
    splitmix64 rng( 7 );
    for ( int trial = 0; trial < 50; ++trial )
    {
      const auto x = std::uint32_t( rng.below( 8 ) );
      const int x1 = ( x & 1 ) ? -1 : 1;
      const int x2 = ( x & 2 ) ? -1 : 1;
      CHECK( f( x ) == x1 * x2 );
    }
  }

  TEST_CASE( "subset above the arity is rejected" )
  {
    CHECK_THROWS_AS( character( 3, 0b1000 ), invalid_argument );
    CHECK_THROWS_AS( character( 0, 0 ), invalid_argument );
    CHECK_THROWS_AS( character( 25, 0 ), invalid_argument );
  }

  TEST_CASE( "products of characters multiply into the symmetric difference" )
  {
    CHECK( character( 3, 0b001 ) * character( 3, 0b010 ) == character( 3, 0b011 ) );
    CHECK( character( 3, 0b011 ) * character( 3, 0b110 ) == character( 3, 0b101 ) );
  }

  TEST_CASE( "any function squares to the constant +1" )
  {
    splitmix64 rng( 21 );
    const auto f = random_function( 6, rng );
    CHECK( f * f == boolean_function( 6 ) );
  }

  TEST_CASE( "arity mismatch is rejected" )
  {
    const auto f = character( 3, 0b1 );
    const auto g = character( 4, 0b1 );
    CHECK_THROWS_AS( pointwise_multiply( f, g ), invalid_argument );
    CHECK_THROWS_AS( hamming_distance( f, g ), invalid_argument );
  }

  TEST_CASE( "distance to itself and to its negation" )
  {
    splitmix64 rng( 5 );
    const auto f = random_function( 5, rng );
    CHECK( hamming_distance( f, f ).is_zero() );
    boolean_function minus_f( 5 );
    for ( std::uint32_t x = 0; x < 32; ++x )
    {
      minus_f.set( x, -f( x ) );
    }
    CHECK( hamming_distance( f, minus_f ) == dyadic( 1, 0 ) );
  }

  TEST_CASE( "distance counts differing points exactly" )
  {
    /* the n=3 block example differs from +1 at exactly two points */
    const auto f = build_block_function( lowdeg::testing::example_family_n3() );
    CHECK( hamming_distance( f, boolean_function( 3 ) ) == dyadic( 2, 3 ) );
    CHECK( dyadic( 2, 3 ) == dyadic( 1, 2 ) );
  }

  TEST_CASE( "truth table construction validates the size" )
  {
    CHECK_THROWS_AS( boolean_function( 3, bitvec( 4 ) ), invalid_argument );
    CHECK_NOTHROW( boolean_function( 2, bitvec( 4 ) ) );
  }
}
