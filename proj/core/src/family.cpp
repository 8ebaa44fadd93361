#include "lowdeg/family.hpp"

#include "lowdeg/errors.hpp"

#include <bit>
#include <string>

namespace lowdeg
{

void character_family::validate() const
{
  if ( n < 1 || n > boolean_function::max_arity )
  {
    throw invalid_argument( "family arity out of range" );
  }
  if ( l < 0 || l > n )
  {
    throw invalid_argument( "prefix dimension must satisfy 0 <= l <= n" );
  }
  if ( sets.size() != prefix_count() )
  {
    throw invalid_argument( "family must list exactly 2^l sets, got " +
                            std::to_string( sets.size() ) );
  }
  const std::uint32_t prefix_mask = ( std::uint32_t( 1 ) << l ) - 1;
  const std::uint32_t ambient_mask = ( std::uint32_t( 1 ) << n ) - 1;
  for ( std::uint32_t mask : sets )
  {
    if ( mask & prefix_mask )
    {
      throw invalid_argument( "C_a must be disjoint from [l]" );
    }
    if ( mask & ~ambient_mask )
    {
      throw invalid_argument( "C_a contains an index above the arity" );
    }
  }
}

int evaluate_block_function( const character_family& fam, std::uint32_t x )
{
  const std::uint32_t key = prefix_key_of_point( x, fam.l );
  return std::popcount( x & fam.sets[key] ) & 1 ? -1 : 1;
}

boolean_function build_block_function( const character_family& fam )
{
  fam.validate();
  boolean_function f( fam.n );
  for ( std::uint32_t x = 0; x < f.domain_size(); ++x )
  {
    if ( evaluate_block_function( fam, x ) == -1 )
    {
      f.set( x, -1 );
    }
  }
  return f;
}

int epsilon_to_l( std::int64_t eps_num, std::int64_t eps_den, epsilon_regime variant )
{
  if ( eps_den <= 0 || eps_num <= 0 )
  {
    throw invalid_argument( "epsilon must be positive" );
  }
  /* 0 < eps <= 1/2 */
  if ( 2 * eps_num > eps_den )
  {
    throw invalid_argument( "epsilon must be at most 1/2" );
  }

  const auto holds = [&]( int l ) {
    /* eps < 2^{-cl-1}  <=>  num * 2^{cl+1} < den, strictly */
    const int shift = ( variant == epsilon_regime::quadratic ? 2 * l : l ) + 1;
    if ( shift >= 127 )
    {
      return false;
    }
    return ( __int128( eps_num ) << shift ) < __int128( eps_den );
  };

  if ( !holds( 0 ) )
  {
    throw invalid_argument( "epsilon too large: no l >= 0 satisfies the bound" );
  }
  int l = 0;
  while ( holds( l + 1 ) )
  {
    ++l;
  }
  return l;
}

bool verify_degree_bound( const character_family& fam, int m )
{
  fam.validate();
  if ( m < 0 )
  {
    throw invalid_argument( "degree budget m must be non-negative" );
  }
  for ( std::uint32_t mask : fam.sets )
  {
    if ( std::popcount( mask ) > m )
    {
      throw invalid_argument( "rejected input: a set exceeds |C_a| <= m; "
                              "use the farness path instead" );
    }
  }
  const auto spec = walsh_hadamard( build_block_function( fam ) );
  return fourier_degree( spec ) <= m + fam.l;
}

std::uint32_t heavy_prefix( const character_family& fam )
{
  fam.validate();
  std::uint32_t best = 0;
  bool strict = true;
  for ( std::uint32_t key = 1; key < fam.prefix_count(); ++key )
  {
    const int size = std::popcount( fam.sets[key] );
    const int best_size = std::popcount( fam.sets[best] );
    if ( size > best_size )
    {
      best = key;
      strict = true;
    }
    else if ( size == best_size )
    {
      strict = false;
    }
  }
  if ( fam.prefix_count() > 1 && !strict )
  {
    throw ambiguous_heavy_block( "no unique strict-maximum block in the family" );
  }
  return best;
}

std::vector<std::pair<std::uint32_t, dyadic>> heavy_coefficients( const character_family& fam )
{
  const std::uint32_t b = heavy_prefix( fam );
  const std::uint32_t heavy_set = fam.sets[b];
  const std::uint32_t prefix_mask = ( std::uint32_t( 1 ) << fam.l ) - 1;

  std::vector<std::pair<std::uint32_t, dyadic>> out;
  out.reserve( fam.prefix_count() );
  for ( std::uint32_t u = 0; u < fam.prefix_count(); ++u )
  {
    /* prod_{i in U} b_i = (-1)^{|{i in U : b_i = -1}|}; key bits are +1 */
    const int sign = std::popcount( u & ~b & prefix_mask ) & 1 ? -1 : 1;
    out.emplace_back( u | heavy_set, dyadic( sign, unsigned( fam.l ) ) );
  }

  /* the closed form is never trusted: compare against the exact transform */
  const auto spec = walsh_hadamard( build_block_function( fam ) );
  for ( const auto& [subset, value] : out )
  {
    if ( spec.coefficient_fraction( subset ) != value )
    {
      throw verification_failure( "heavy coefficient mismatch at subset mask " +
                                  std::to_string( subset ) );
    }
  }
  return out;
}

farness_certificate_t farness_certificate( const character_family& fam, int m,
                                           farness_mode mode )
{
  fam.validate();
  if ( m < 1 )
  {
    throw invalid_argument( "farness hypothesis needs m >= 1" );
  }

  const std::uint32_t b = heavy_prefix( fam );
  if ( std::popcount( fam.sets[b] ) < m )
  {
    throw invalid_argument( "heavy set smaller than m" );
  }
  for ( std::uint32_t key = 0; key < fam.prefix_count(); ++key )
  {
    if ( key != b && std::popcount( fam.sets[key] ) > m - 1 )
    {
      throw invalid_argument( "non-heavy set exceeds m-1" );
    }
  }

  farness_certificate_t cert;
  cert.mode = mode;
  cert.l = fam.l;
  cert.m = m;
  cert.heavy_prefix_key = b;
  cert.heavy_set = fam.sets[b];
  if ( mode == farness_mode::heavy_set )
  {
    cert.degree_threshold = m - 1;
    cert.claimed_tail = dyadic::pow2_inverse( unsigned( fam.l ) );
  }
  else
  {
    cert.degree_threshold = m + fam.l - 1;
    cert.claimed_tail = dyadic::pow2_inverse( 2u * unsigned( fam.l ) );
  }
  cert.claimed_distance_lb = cert.claimed_tail * dyadic( 1, 2 );

  const auto spec = walsh_hadamard( build_block_function( fam ) );
  cert.exact_tail = parseval_tail( spec, cert.degree_threshold );
  if ( cert.exact_tail < cert.claimed_tail )
  {
    throw verification_failure( "certificate tail below the claimed bound" );
  }
  return cert;
}

dyadic claimed_farness_constant( farness_mode mode, int l )
{
  const unsigned e = mode == farness_mode::heavy_set ? unsigned( l ) + 1 : 2u * unsigned( l ) + 1;
  return dyadic::pow2_inverse( e );
}

} // namespace lowdeg
