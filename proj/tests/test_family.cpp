#include <doctest.h>

#include "oracles.hpp"

#include <lowdeg/distribution.hpp>
#include <lowdeg/enumeration.hpp>
#include <lowdeg/errors.hpp>
#include <lowdeg/family.hpp>
#include <lowdeg/rng.hpp>

using namespace lowdeg;
using lowdeg::testing::example_family_n3;

TEST_SUITE( "family" )
{
  TEST_CASE( "epsilon thresholds are strict" )
  {
    /* 1/8 = 2^-3 exactly, so l=1 fails the strict bound for thm1 */
    CHECK( epsilon_to_l( 1, 8, epsilon_regime::quadratic ) == 0 );
    CHECK( epsilon_to_l( 1, 10, epsilon_regime::quadratic ) == 1 );
    CHECK( epsilon_to_l( 1, 10, epsilon_regime::linear ) == 2 );
    CHECK( epsilon_to_l( 1, 9, epsilon_regime::quadratic ) == 1 );
    CHECK( epsilon_to_l( 1, 1000000, epsilon_regime::linear ) == 18 );
  }

  TEST_CASE( "epsilon domain errors" )
  {
    CHECK_THROWS_AS( epsilon_to_l( 0, 1, epsilon_regime::quadratic ), invalid_argument );
    CHECK_THROWS_AS( epsilon_to_l( -1, 4, epsilon_regime::quadratic ), invalid_argument );
    CHECK_THROWS_AS( epsilon_to_l( 3, 4, epsilon_regime::quadratic ), invalid_argument );
    /* exactly 1/2 never satisfies the strict bound at l = 0 */
    CHECK_THROWS_AS( epsilon_to_l( 1, 2, epsilon_regime::linear ), invalid_argument );
  }

  TEST_CASE( "degenerate families" )
  {
    character_family constant{ 3, 0, { 0 } };
    CHECK( build_block_function( constant ) == boolean_function( 3 ) );

    /* both branches identical: the prefix is irrelevant */
    character_family same{ 3, 1, { 0b010, 0b010 } };
    CHECK( build_block_function( same ) == character( 3, 0b010 ) );
  }

  TEST_CASE( "block example truth table" )
  {
    const auto f = build_block_function( example_family_n3() );
    /* +1 wherever x1 = +1, else x2*x3 */
    for ( std::uint32_t x = 0; x < 8; ++x )
    {
      const int x1 = ( x & 1 ) ? -1 : 1;
      const int expected = x1 == 1 ? 1 : ( ( x & 2 ) ? -1 : 1 ) * ( ( x & 4 ) ? -1 : 1 );
      CHECK( f( x ) == expected );
    }
    CHECK( f.table().to_hex() == "82" );
  }

  TEST_CASE( "family validation" )
  {
    CHECK_THROWS_AS( build_block_function( character_family{ 3, 1, { 0b110 } } ),
                     invalid_argument ); /* wrong set count */
    CHECK_THROWS_AS( build_block_function( character_family{ 3, 1, { 0b001, 0 } } ),
                     invalid_argument ); /* intersects [l] */
    CHECK_THROWS_AS( build_block_function( character_family{ 3, 1, { 0b1000, 0 } } ),
                     invalid_argument ); /* above the arity */
  }

  TEST_CASE( "degree bound holds and is attained on the example" )
  {
    CHECK( verify_degree_bound( example_family_n3(), 2 ) );
    CHECK( verify_degree_bound( character_family{ 3, 0, { 0 } }, 0 ) );
  }

  TEST_CASE( "degree bound rejects families that break the hypothesis" )
  {
    /* |C_a| = 2 > m = 1 */
    CHECK_THROWS_AS( verify_degree_bound( example_family_n3(), 1 ), invalid_argument );
  }

  TEST_CASE( "degree bound over a seeded grid" )
  {
    splitmix64 rng( 52 );
    for ( int i = 0; i < 200; ++i )
    {
      const int n = 2 + int( rng.below( 11 ) );
      const int l = int( rng.below( std::uint64_t( std::min( n, 3 ) ) + 1 ) );
      const int m = int( rng.below( std::uint64_t( n - l ) + 1 ) );
      character_family fam{ n, l, {} };
      fam.sets.resize( std::size_t( 1 ) << l );
      for ( auto& mask : fam.sets )
      {
        mask = sample_subset_mask( rng, n, l, int( rng.below( std::uint64_t( m ) + 1 ) ) );
      }
      CHECK( verify_degree_bound( fam, m ) );
    }
  }

  TEST_CASE( "heavy coefficients of the block example" )
  {
    const auto coeffs = heavy_coefficients( example_family_n3() );
    REQUIRE( coeffs.size() == 2 );
    /* U = {}: subset {2,3} with value +1/2; U = {1}: subset {1,2,3}, -1/2 */
    CHECK( coeffs[0].first == 0b110 );
    CHECK( coeffs[0].second == dyadic( 1, 1 ) );
    CHECK( coeffs[1].first == 0b111 );
    CHECK( coeffs[1].second == dyadic( -1, 1 ) );
  }

  TEST_CASE( "single-block family is its own character" )
  {
    character_family fam{ 4, 0, { 0b0110 } };
    const auto coeffs = heavy_coefficients( fam );
    REQUIRE( coeffs.size() == 1 );
    CHECK( coeffs[0].first == 0b0110 );
    CHECK( coeffs[0].second == dyadic( 1, 0 ) );
  }

  TEST_CASE( "heavy coefficients have magnitude 2^-l on seeded draws" )
  {
    splitmix64 rng( 64 );
    for ( int i = 0; i < 100; ++i )
    {
      const int n = 4 + int( rng.below( 7 ) );
      const int l = 1 + int( rng.below( 2 ) );
      const int m = 1 + int( rng.below( std::uint64_t( n - l ) ) );
      character_family fam{ n, l, {} };
      fam.sets.resize( std::size_t( 1 ) << l );
      const auto b = std::uint32_t( rng.below( fam.prefix_count() ) );
      for ( std::uint32_t key = 0; key < fam.prefix_count(); ++key )
      {
        const int size = key == b ? m + int( rng.below( std::uint64_t( n - l - m ) + 1 ) )
                                  : int( rng.below( std::uint64_t( m ) ) );
        fam.sets[key] = sample_subset_mask( rng, n, l, size );
      }
      for ( const auto& [subset, value] : heavy_coefficients( fam ) )
      {
        CHECK( ( value == dyadic( 1, unsigned( l ) ) ||
                 value == dyadic( -1, unsigned( l ) ) ) );
      }
    }
  }

  TEST_CASE( "ties have no heavy block" )
  {
    character_family tie{ 4, 1, { 0b0110, 0b1010 } };
    CHECK_THROWS_AS( heavy_coefficients( tie ), ambiguous_heavy_block );
    CHECK_THROWS_AS( farness_certificate( tie, 2, farness_mode::heavy_set ),
                     ambiguous_heavy_block );
  }

  TEST_CASE( "farness certificate for the block example" )
  {
    const auto cert2 = farness_certificate( example_family_n3(), 2, farness_mode::heavy_set );
    CHECK( cert2.degree_threshold == 1 );
    CHECK( cert2.claimed_tail == dyadic( 1, 1 ) );
    CHECK( cert2.claimed_distance_lb == dyadic( 1, 3 ) );
    CHECK( cert2.exact_tail == dyadic( 1, 1 ) );
    CHECK( cert2.heavy_prefix_key == 0 );
    CHECK( cert2.heavy_set == 0b110 );
    /* enumeration confirms the instance is strictly farther than the bound */
    const auto f = build_block_function( example_family_n3() );
    CHECK( brute_force_min_distance( f, cert2.degree_threshold ) == dyadic( 1, 2 ) );

    const auto cert3 = farness_certificate( example_family_n3(), 2, farness_mode::top_degree );
    CHECK( cert3.degree_threshold == 2 );
    CHECK( cert3.claimed_tail == dyadic( 1, 2 ) );
    CHECK( cert3.claimed_distance_lb == dyadic( 1, 4 ) );
    CHECK( cert3.exact_tail == dyadic( 1, 2 ) );
  }

  TEST_CASE( "single full-weight character is far from lower degrees" )
  {
    for ( int m = 1; m <= 4; ++m )
    {
      character_family fam{ 4, 0, { ( 1u << m ) - 1 } };
      const auto cert = farness_certificate( fam, m, farness_mode::top_degree );
      CHECK( cert.claimed_distance_lb == dyadic( 1, 2 ) );
      CHECK( cert.exact_tail == dyadic( 1, 0 ) );
    }
  }

  TEST_CASE( "certificate hypothesis is enforced" )
  {
    /* non-heavy set of size m breaks the cardinality hypothesis */
    character_family fam{ 4, 1, { 0b0110, 0b1100 } };
    CHECK_THROWS_AS( farness_certificate( fam, 2, farness_mode::heavy_set ),
                     ambiguous_heavy_block );
    character_family small_heavy{ 4, 1, { 0b0110, 0 } };
    CHECK_THROWS_AS( farness_certificate( small_heavy, 3, farness_mode::heavy_set ),
                     invalid_argument );
  }

  TEST_CASE( "paper constants for the farness modes" )
  {
    CHECK( claimed_farness_constant( farness_mode::heavy_set, 1 ) == dyadic( 1, 2 ) );
    CHECK( claimed_farness_constant( farness_mode::top_degree, 1 ) == dyadic( 1, 3 ) );
    CHECK( claimed_farness_constant( farness_mode::heavy_set, 0 ) == dyadic( 1, 1 ) );
  }
}
