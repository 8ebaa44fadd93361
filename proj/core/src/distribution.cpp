#include "lowdeg/distribution.hpp"

#include "lowdeg/errors.hpp"

#include <numeric>
#include <string>
#include <vector>

namespace lowdeg
{

void distribution_params::validate() const
{
  if ( n < 1 || n > boolean_function::max_arity )
  {
    throw invalid_argument( "distribution: arity out of range" );
  }
  if ( l < 0 || l > n )
  {
    throw invalid_argument( "distribution: l out of range" );
  }
  if ( k < 2 || k % 2 != 0 )
  {
    throw invalid_argument( "distribution: k must be a positive even integer" );
  }
  if ( 2 * l > k )
  {
    throw invalid_argument( "distribution: l <= k/2 required" );
  }
  if ( k / 2 > n - l )
  {
    throw invalid_argument( "distribution: size k/2 does not fit in {l+1..n}" );
  }
  if ( mode == distribution_mode::negative )
  {
    if ( n - k + 1 > n - l )
    {
      throw invalid_argument( "distribution: heavy size n-k+1 does not fit in {l+1..n}" );
    }
    /* non-heavy sets must stay below the heavy one for the farness argument */
    if ( k / 2 > n - k )
    {
      throw invalid_argument( "distribution: need k/2 <= n-k in negative mode" );
    }
  }
}

std::uint32_t sample_subset_mask( splitmix64& rng, int n, int l, int size )
{
  const int pool = n - l;
  if ( size < 0 || size > pool )
  {
    throw invalid_argument( "subset size " + std::to_string( size ) +
                            " does not fit in {l+1..n}" );
  }
  std::vector<int> coords( static_cast<std::size_t>( pool ) );
  std::iota( coords.begin(), coords.end(), l + 1 );
  std::uint32_t mask = 0;
  for ( int i = 0; i < size; ++i )
  {
    const int j = i + int( rng.below( std::uint64_t( pool - i ) ) );
    std::swap( coords[std::size_t( i )], coords[std::size_t( j )] );
    mask |= std::uint32_t( 1 ) << ( coords[std::size_t( i )] - 1 );
  }
  return mask;
}

family_draw sample_family_draw( const distribution_params& params )
{
  params.validate();
  splitmix64 rng( params.seed );

  family_draw draw;
  draw.family.n = params.n;
  draw.family.l = params.l;
  draw.family.sets.resize( std::size_t( 1 ) << params.l );

  if ( params.mode == distribution_mode::negative )
  {
    draw.heavy_prefix_key = std::uint32_t( rng.below( draw.family.prefix_count() ) );
  }
  for ( std::uint32_t key = 0; key < draw.family.prefix_count(); ++key )
  {
    const bool heavy = params.mode == distribution_mode::negative &&
                       key == draw.heavy_prefix_key;
    const int size = heavy ? params.n - params.k + 1 : params.k / 2;
    draw.family.sets[key] = sample_subset_mask( rng, params.n, params.l, size );
  }
  return draw;
}

boolean_function sample_distribution( const distribution_params& params )
{
  return build_block_function( sample_family_draw( params ).family );
}

} // namespace lowdeg
