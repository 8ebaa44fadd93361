#include <doctest.h>

#include <lowdeg/embedding.hpp>
#include <lowdeg/errors.hpp>
#include <lowdeg/rng.hpp>
#include <lowdeg/spectrum.hpp>

#include <bit>

using namespace lowdeg;

namespace
{

/* the running n=4, k=2, l=1 pair: C_{+1}={3}, C_{-1}={4}, D_{+1}={4}, D_{-1}={3} */
combined_instance disjoint_example()
{
  character_family fam_f{ 4, 1, { 0b1000, 0b0100 } };
  character_family fam_g{ 4, 1, { 0b0100, 0b1000 } };
  return make_combined_instance( fam_f, fam_g, 2 );
}

/* same but C_{+1} = D_{+1} = {3}: one intersecting block */
combined_instance intersecting_example()
{
  character_family fam_f{ 4, 1, { 0b1000, 0b0100 } };
  character_family fam_g{ 4, 1, { 0b0100, 0b0100 } };
  return make_combined_instance( fam_f, fam_g, 2 );
}

} // namespace

TEST_SUITE( "embedding" )
{
  TEST_CASE( "derived sets follow the symmetric-difference law" )
  {
    const auto ci = disjoint_example();
    const auto es = ci.derived_sets();
    CHECK( es[0] == 0b0010 );
    CHECK( es[1] == 0b0010 );

    const auto ci2 = intersecting_example();
    const auto es2 = ci2.derived_sets();
    CHECK( es2[0] == 0b0010 );  /* disjoint block: size k-l */
    CHECK( es2[1] == 0b1110 );  /* intersecting block: size k-l+2 */
    for ( std::size_t key = 0; key < es2.size(); ++key )
    {
      const int common = std::popcount( ci2.fam_f.sets[key] & ci2.fam_g.sets[key] );
      CHECK( std::popcount( es2[key] ) == ci2.k - ci2.fam_f.l + 2 * common );
    }
  }

  TEST_CASE( "combined function of the disjoint example is a single character" )
  {
    const auto h = combine_h( disjoint_example() );
    CHECK( h == character( 4, 0b0010 ) );
  }

  TEST_CASE( "classification separates the promise cases" )
  {
    const auto low = classify_h( disjoint_example() );
    CHECK( low.classification == h_class::low_degree );
    CHECK( low.degree == 1 );

    const auto far = classify_h( intersecting_example() );
    CHECK( far.classification == h_class::far );
    CHECK( far.tail == dyadic( 1, 2 ) );
    /* heavy coefficient of h sits on the full set with magnitude 1/2 */
    const auto spec = walsh_hadamard( combine_h( intersecting_example() ) );
    CHECK( spec.coefficient_fraction( 0b1111 ) == dyadic( 1, 1 ) );
  }

  TEST_CASE( "the full-intersection case is rejected upstream" )
  {
    character_family fam_f{ 4, 0, { 0b0110 } };
    CHECK_THROWS_AS( make_combined_instance( fam_f, fam_f, 2 ), promise_violation );
  }

  TEST_CASE( "instance invariants are enforced" )
  {
    character_family fam_f{ 4, 1, { 0b1000, 0b0100 } };
    character_family wrong_size{ 4, 1, { 0b1100, 0b0100 } };
    CHECK_THROWS_AS( make_combined_instance( fam_f, wrong_size, 2 ), promise_violation );
    CHECK_THROWS_AS( make_combined_instance( fam_f, fam_f, 3 ), invalid_argument );
  }

  TEST_CASE( "block instances map onto family pairs and back" )
  {
    /* l=0: one block of length n-k becomes a single-set pair */
    block_disj_instance single;
    single.l_blocks = 1;
    single.m = 2;
    single.k = 1;
    single.x = bitvec( 2 );
    single.y = bitvec( 2 );
    single.x.set( 0 );
    single.y.set( 1 );
    const auto ci = families_from_block_instance( single, 4, 2, 0 );
    CHECK( ci.fam_f.sets == std::vector<std::uint32_t>{ 0b0001 } );
    CHECK( ci.fam_g.sets == std::vector<std::uint32_t>{ 0b0010 } );
    CHECK( block_instance_from_families( ci ) == single );
  }

  TEST_CASE( "block coordinates shift past the prefix" )
  {
    /* two blocks of length 2: block 0 support {1}, block 1 support {2};
       prefix key 0 is the all-(-1) prefix */
    block_disj_instance inst;
    inst.l_blocks = 2;
    inst.m = 2;
    inst.k = 1;
    inst.x = bitvec( 4 );
    inst.y = bitvec( 4 );
    inst.x.set( 0 );          /* block 0, coordinate 1 */
    inst.x.set( 2 + 1 );      /* block 1, coordinate 2 */
    inst.y.set( 1 );
    inst.y.set( 2 );
    const auto ci = families_from_block_instance( inst, 4, 2, 1 );
    CHECK( ci.fam_f.sets[0] == 0b0010 ); /* coordinate 2 */
    CHECK( ci.fam_f.sets[1] == 0b0100 ); /* coordinate 3 */
    CHECK( ci.fam_g.sets[0] == 0b0100 );
    CHECK( ci.fam_g.sets[1] == 0b0010 );
    CHECK( block_instance_from_families( ci ) == inst );
  }

  TEST_CASE( "roundtrip holds on seeded instances" )
  {
    splitmix64 rng( 2024 );
    for ( int i = 0; i < 1000; ++i )
    {
      const int n = 6 + 2 * int( rng.below( 2 ) ); /* 6 or 8 */
      const int k = 2 + 2 * int( rng.below( std::uint64_t( n / 2 - 1 ) ) );
      const int l = int( rng.below( std::uint64_t( std::min( 2, k ) ) + 1 ) );
      const int half = ( n - k ) / 2;
      const std::size_t blocks = std::size_t( 1 ) << l;

      block_disj_instance inst;
      inst.l_blocks = blocks;
      inst.m = std::size_t( n - k );
      inst.k = std::size_t( half );
      inst.x = bitvec( blocks * inst.m );
      inst.y = bitvec( blocks * inst.m );
      for ( std::size_t block = 0; block < blocks; ++block )
      {
        /* disjoint support halves keep the promise trivially */
        std::vector<int> pos( inst.m );
        for ( std::size_t j = 0; j < inst.m; ++j )
        {
          pos[j] = int( j );
        }
        for ( std::size_t j = 0; j + 1 < inst.m; ++j )
        {
          std::swap( pos[j], pos[j + rng.below( inst.m - j )] );
        }
        for ( int j = 0; j < half; ++j )
        {
          inst.x.set( block * inst.m + std::size_t( pos[std::size_t( j )] ) );
          inst.y.set( block * inst.m + std::size_t( pos[std::size_t( j + half )] ) );
        }
      }
      const auto ci = families_from_block_instance( inst, n, k, l );
      CHECK( block_instance_from_families( ci ) == inst );
    }
  }

  TEST_CASE( "dimension mismatches are rejected" )
  {
    block_disj_instance inst;
    inst.l_blocks = 2;
    inst.m = 2;
    inst.k = 1;
    inst.x = bitvec( 4 );
    inst.y = bitvec( 4 );
    inst.x.set( 0 );
    inst.x.set( 2 );
    inst.y.set( 1 );
    inst.y.set( 3 );
    CHECK_THROWS_AS( families_from_block_instance( inst, 4, 2, 0 ), invalid_argument );
    CHECK_THROWS_AS( families_from_block_instance( inst, 6, 2, 1 ), invalid_argument );

    /* odd degree gap: blocks of length 3 cannot carry weight (n-k)/2 */
    block_disj_instance odd;
    odd.l_blocks = 1;
    odd.m = 3;
    odd.k = 1;
    odd.x = bitvec( 3 );
    odd.y = bitvec( 3 );
    odd.x.set( 0 );
    odd.y.set( 1 );
    CHECK_THROWS_AS( families_from_block_instance( odd, 5, 2, 0 ), invalid_argument );
  }

  TEST_CASE( "sets outside the block range cannot be rendered as an instance" )
  {
    /* valid pair, but supported above coordinate l+(n-k) = 3 */
    character_family fam_f{ 4, 1, { 0b1000, 0b1000 } };
    character_family fam_g{ 4, 1, { 0b0100, 0b0100 } };
    const auto ci = make_combined_instance( fam_f, fam_g, 2 );
    CHECK( classify_h( ci ).classification == h_class::low_degree );
    CHECK_THROWS_AS( block_instance_from_families( ci ), invalid_argument );
  }

  TEST_CASE( "two intersecting blocks violate the promise" )
  {
    character_family fam_f{ 4, 1, { 0b0100, 0b1000 } };
    const auto ci = make_combined_instance( fam_f, fam_f, 2 );
    CHECK_THROWS_AS( classify_h( ci ), promise_violation );
  }
}
