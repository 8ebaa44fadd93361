#include "lowdeg/spectrum.hpp"

#include "lowdeg/errors.hpp"

#include <bit>
#include <string>

namespace lowdeg
{

namespace
{

/* in-place unnormalized transform: v[S] <- sum_x v[x] (-1)^{popcount(x & S)} */
void butterfly( std::vector<std::int64_t>& v )
{
  const std::size_t size = v.size();
  for ( std::size_t len = 1; len < size; len <<= 1 )
  {
    for ( std::size_t block = 0; block < size; block += len << 1 )
    {
      for ( std::size_t j = block; j < block + len; ++j )
      {
        const std::int64_t a = v[j];
        const std::int64_t b = v[j + len];
        v[j] = a + b;
        v[j + len] = a - b;
      }
    }
  }
}

void check_threshold( const fourier_spectrum& spec, int d )
{
  if ( d < 0 || d > spec.arity() )
  {
    throw invalid_argument( "degree threshold must be in [0, n], got " +
                            std::to_string( d ) );
  }
}

} // namespace

fourier_spectrum::fourier_spectrum( int n, std::vector<std::int64_t> coeffs )
    : n_( n ), coeffs_( std::move( coeffs ) )
{
  if ( n < 1 || n > boolean_function::max_arity )
  {
    throw invalid_argument( "spectrum arity out of range" );
  }
  if ( coeffs_.size() != ( std::size_t( 1 ) << n ) )
  {
    throw invalid_argument( "spectrum must have exactly 2^n coefficients" );
  }
}

dyadic fourier_spectrum::coefficient_fraction( std::uint32_t subset ) const
{
  return dyadic( coeffs_[subset], unsigned( n_ ) );
}

fourier_spectrum walsh_hadamard( const boolean_function& f )
{
  std::vector<std::int64_t> v( f.domain_size() );
  for ( std::uint32_t x = 0; x < f.domain_size(); ++x )
  {
    v[x] = f( x );
  }
  butterfly( v );
  return fourier_spectrum( f.arity(), std::move( v ) );
}

boolean_function inverse_walsh_hadamard( const fourier_spectrum& spec )
{
  std::vector<std::int64_t> v = spec.coeffs();
  butterfly( v );

  const std::int64_t scale = std::int64_t( 1 ) << spec.arity();
  boolean_function f( spec.arity() );
  for ( std::uint32_t x = 0; x < spec.size(); ++x )
  {
    /* v[x] = 2^n f(x); anything else means the spectrum is not Boolean */
    if ( v[x] == scale )
    {
      continue;
    }
    if ( v[x] == -scale )
    {
      f.set( x, -1 );
    }
    else
    {
      throw not_boolean( "reconstructed value at point " + std::to_string( x ) +
                         " is " + std::to_string( v[x] ) + "/" + std::to_string( scale ) +
                         ", not in {-1,+1}" );
    }
  }
  return f;
}

int fourier_degree( const fourier_spectrum& spec )
{
  int degree = -1;
  for ( std::uint32_t s = 0; s < spec.size(); ++s )
  {
    if ( spec.coeff( s ) != 0 )
    {
      degree = std::max( degree, std::popcount( s ) );
    }
  }
  if ( degree < 0 )
  {
    throw invalid_argument( "all-zero spectrum is not that of a +/-1 function" );
  }
  return degree;
}

std::int64_t parseval_sum( const fourier_spectrum& spec )
{
  std::int64_t total = 0;
  for ( std::uint32_t s = 0; s < spec.size(); ++s )
  {
    total += spec.coeff( s ) * spec.coeff( s );
  }
  return total;
}

dyadic parseval_tail( const fourier_spectrum& spec, int degree_threshold )
{
  check_threshold( spec, degree_threshold );
  std::int64_t total = 0;
  for ( std::uint32_t s = 0; s < spec.size(); ++s )
  {
    if ( std::popcount( s ) > degree_threshold )
    {
      total += spec.coeff( s ) * spec.coeff( s );
    }
  }
  return dyadic( total, 2u * unsigned( spec.arity() ) );
}

dyadic lowdeg_distance_lower_bound( const fourier_spectrum& spec, int degree_threshold )
{
  return parseval_tail( spec, degree_threshold ) * dyadic( 1, 2 );
}

} // namespace lowdeg
