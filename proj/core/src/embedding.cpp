#include "lowdeg/embedding.hpp"

#include "lowdeg/errors.hpp"
#include "lowdeg/spectrum.hpp"

#include <bit>
#include <string>

namespace lowdeg
{

namespace
{

std::uint32_t space_mask( int n, int l )
{
  /* [n] \ [l] as a bitmask */
  return ( ( std::uint32_t( 1 ) << n ) - 1 ) & ~( ( std::uint32_t( 1 ) << l ) - 1 );
}

} // namespace

std::vector<std::uint32_t> combined_instance::derived_sets() const
{
  const std::uint32_t rest = space_mask( fam_f.n, fam_f.l );
  std::vector<std::uint32_t> es( fam_f.sets.size() );
  for ( std::size_t key = 0; key < es.size(); ++key )
  {
    es[key] = rest ^ ( fam_f.sets[key] ^ fam_g.sets[key] );
  }
  return es;
}

void combined_instance::validate() const
{
  fam_f.validate();
  fam_g.validate();
  if ( fam_f.n != fam_g.n || fam_f.l != fam_g.l )
  {
    throw invalid_argument( "combined instance: families must share n and l" );
  }
  const int n = fam_f.n;
  const int l = fam_f.l;
  if ( k < l || k > n || ( n - k ) % 2 != 0 )
  {
    throw invalid_argument( "combined instance: need l <= k <= n and n-k even" );
  }
  const int half = ( n - k ) / 2;
  for ( std::uint32_t key = 0; key < fam_f.prefix_count(); ++key )
  {
    if ( std::popcount( fam_f.sets[key] ) != half ||
         std::popcount( fam_g.sets[key] ) != half )
    {
      throw promise_violation( "combined instance: |C_a| = |D_a| = (n-k)/2 required" );
    }
    if ( std::popcount( fam_f.sets[key] & fam_g.sets[key] ) > 1 )
    {
      throw promise_violation( "combined instance: |C_a ∩ D_a| <= 1 required" );
    }
  }
}

combined_instance make_combined_instance( character_family fam_f,
                                          character_family fam_g, int k )
{
  combined_instance ci{ std::move( fam_f ), std::move( fam_g ), k };
  ci.validate();
  return ci;
}

combined_instance families_from_block_instance( const block_disj_instance& inst,
                                                int n, int k, int l )
{
  inst.validate();
  if ( l < 0 || l >= 32 || inst.l_blocks != ( std::size_t( 1 ) << l ) )
  {
    throw invalid_argument( "embedding: block count must equal 2^l" );
  }
  if ( ( n - k ) % 2 != 0 )
  {
    throw invalid_argument( "embedding: n-k must be even" );
  }
  if ( inst.m != std::size_t( n - k ) )
  {
    throw invalid_argument( "embedding: block length must equal n-k" );
  }
  if ( inst.m > std::size_t( n - l ) )
  {
    throw invalid_argument( "embedding: block support does not fit in {l+1..n}" );
  }
  if ( inst.k != std::size_t( ( n - k ) / 2 ) )
  {
    throw invalid_argument( "embedding: block weight must equal (n-k)/2" );
  }

  character_family fam_f{ n, l, {} }, fam_g{ n, l, {} };
  fam_f.sets.resize( inst.l_blocks );
  fam_g.sets.resize( inst.l_blocks );
  for ( std::size_t block = 0; block < inst.l_blocks; ++block )
  {
    std::uint32_t cmask = 0, dmask = 0;
    for ( std::size_t j = 0; j < inst.m; ++j )
    {
      /* block coordinate j+1 maps to ambient coordinate l+j+1 */
      const std::uint32_t bit = std::uint32_t( 1 ) << ( std::size_t( l ) + j );
      if ( inst.x.test( block * inst.m + j ) )
      {
        cmask |= bit;
      }
      if ( inst.y.test( block * inst.m + j ) )
      {
        dmask |= bit;
      }
    }
    fam_f.sets[block] = cmask;
    fam_g.sets[block] = dmask;
  }
  return make_combined_instance( std::move( fam_f ), std::move( fam_g ), k );
}

block_disj_instance block_instance_from_families( const combined_instance& ci )
{
  ci.validate();
  const int n = ci.fam_f.n;
  const int l = ci.fam_f.l;

  /* the block encoding covers coordinates {l+1..l+(n-k)} only */
  const std::uint32_t range =
      ( ( std::uint32_t( 1 ) << ( std::size_t( l ) + std::size_t( n - ci.k ) ) ) - 1 ) &
      ~( ( std::uint32_t( 1 ) << l ) - 1 );
  for ( std::size_t key = 0; key < ci.fam_f.sets.size(); ++key )
  {
    if ( ( ci.fam_f.sets[key] & ~range ) || ( ci.fam_g.sets[key] & ~range ) )
    {
      throw invalid_argument(
          "combined instance uses coordinates outside the block range {l+1..l+(n-k)}" );
    }
  }

  block_disj_instance inst;
  inst.l_blocks = ci.fam_f.prefix_count();
  inst.m = std::size_t( n - ci.k );
  inst.k = std::size_t( ( n - ci.k ) / 2 );
  inst.x = bitvec( inst.l_blocks * inst.m );
  inst.y = bitvec( inst.l_blocks * inst.m );
  for ( std::size_t block = 0; block < inst.l_blocks; ++block )
  {
    for ( std::size_t j = 0; j < inst.m; ++j )
    {
      const std::uint32_t bit = std::uint32_t( 1 ) << ( std::size_t( l ) + j );
      if ( ci.fam_f.sets[block] & bit )
      {
        inst.x.set( block * inst.m + j );
      }
      if ( ci.fam_g.sets[block] & bit )
      {
        inst.y.set( block * inst.m + j );
      }
    }
  }
  inst.validate();
  return inst;
}

boolean_function combine_h( const combined_instance& ci )
{
  ci.validate();
  const auto f = build_block_function( ci.fam_f );
  const auto g = build_block_function( ci.fam_g );
  const auto chi = character( ci.fam_f.n, space_mask( ci.fam_f.n, ci.fam_f.l ) );
  const auto h = f * g * chi;

  /* same function through the symmetric-difference identity */
  character_family efam{ ci.fam_f.n, ci.fam_f.l, ci.derived_sets() };
  if ( build_block_function( efam ) != h )
  {
    throw verification_failure( "combine_h: product path and E_a path disagree" );
  }
  return h;
}

h_verdict classify_h( const combined_instance& ci )
{
  ci.validate();
  std::size_t intersecting = 0;
  for ( std::uint32_t key = 0; key < ci.fam_f.prefix_count(); ++key )
  {
    if ( std::popcount( ci.fam_f.sets[key] & ci.fam_g.sets[key] ) != 0 )
    {
      ++intersecting;
    }
  }
  if ( intersecting > 1 )
  {
    throw promise_violation( "classify_h: more than one intersecting block" );
  }

  h_verdict verdict;
  verdict.classification = intersecting == 0 ? h_class::low_degree : h_class::far;

  const auto spec = walsh_hadamard( combine_h( ci ) );
  verdict.degree = fourier_degree( spec );
  verdict.tail = parseval_tail( spec, std::min( ci.k + 1, ci.fam_f.n ) );

  if ( verdict.classification == h_class::low_degree )
  {
    if ( verdict.degree > ci.k )
    {
      throw verification_failure( "classify_h: disjoint instance with degree above k" );
    }
  }
  else
  {
    const dyadic bound = dyadic::pow2_inverse( 2u * unsigned( ci.fam_f.l ) );
    if ( verdict.tail < bound )
    {
      throw verification_failure( "classify_h: intersecting instance with tail below 2^-2l" );
    }
  }
  return verdict;
}

} // namespace lowdeg
