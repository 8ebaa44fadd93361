#include "lowdeg/enumeration.hpp"

#include "lowdeg/errors.hpp"

#include <array>
#include <bit>
#include <string>

namespace lowdeg
{

namespace
{

int degree_by_butterfly( int n, std::uint32_t table )
{
  const std::uint32_t size = std::uint32_t( 1 ) << n;
  std::array<int, 16> v{};
  for ( std::uint32_t x = 0; x < size; ++x )
  {
    v[x] = ( table >> x ) & 1 ? -1 : 1;
  }
  for ( std::uint32_t len = 1; len < size; len <<= 1 )
  {
    for ( std::uint32_t block = 0; block < size; block += len << 1 )
    {
      for ( std::uint32_t j = block; j < block + len; ++j )
      {
        const int a = v[j];
        const int b = v[j + len];
        v[j] = a + b;
        v[j + len] = a - b;
      }
    }
  }
  int degree = 0;
  for ( std::uint32_t s = 0; s < size; ++s )
  {
    if ( v[s] != 0 )
    {
      degree = std::max( degree, std::popcount( s ) );
    }
  }
  return degree;
}

/* degree of every n-variable function, indexed by packed table */
const std::vector<std::int8_t>& degree_table( int n )
{
  static const std::array<std::vector<std::int8_t>, max_oracle_arity + 1> tables = [] {
    std::array<std::vector<std::int8_t>, max_oracle_arity + 1> t;
    for ( int n = 1; n <= max_oracle_arity; ++n )
    {
      const std::uint64_t count = std::uint64_t( 1 ) << ( 1 << n );
      t[n].resize( count );
      for ( std::uint64_t table = 0; table < count; ++table )
      {
        t[n][table] = std::int8_t( degree_by_butterfly( n, std::uint32_t( table ) ) );
      }
    }
    return t;
  }();
  return tables[n];
}

std::uint32_t packed_table( const boolean_function& f )
{
  std::uint32_t packed = 0;
  for ( std::uint32_t x = 0; x < f.domain_size(); ++x )
  {
    if ( f( x ) == -1 )
    {
      packed |= std::uint32_t( 1 ) << x;
    }
  }
  return packed;
}

void check_oracle_arity( const boolean_function& f )
{
  if ( f.arity() > max_oracle_arity )
  {
    throw invalid_argument( "enumeration oracle refuses n = " +
                            std::to_string( f.arity() ) + " (limit " +
                            std::to_string( max_oracle_arity ) +
                            "; 2^{2^n} candidates)" );
  }
}

} // namespace

int small_function_degree( int n, std::uint32_t table )
{
  if ( n < 1 || n > max_oracle_arity )
  {
    throw invalid_argument( "small_function_degree: n out of range" );
  }
  return degree_table( n )[table];
}

std::vector<dyadic> brute_force_min_distance_profile( const boolean_function& f )
{
  check_oracle_arity( f );
  const int n = f.arity();
  const auto& degrees = degree_table( n );
  const std::uint32_t target = packed_table( f );

  /* min differing-point count per exact candidate degree, then prefix-min */
  std::vector<int> min_diff( std::size_t( n ) + 1, 1 << n );
  for ( std::uint64_t g = 0; g < degrees.size(); ++g )
  {
    const int diff = std::popcount( std::uint32_t( g ) ^ target );
    int& slot = min_diff[degrees[g]];
    slot = std::min( slot, diff );
  }
  std::vector<dyadic> profile( std::size_t( n ) + 1 );
  int best = 1 << n;
  for ( int d = 0; d <= n; ++d )
  {
    best = std::min( best, min_diff[d] );
    profile[d] = dyadic( best, unsigned( n ) );
  }
  return profile;
}

dyadic brute_force_min_distance( const boolean_function& f, int d )
{
  check_oracle_arity( f );
  if ( d < 0 || d > f.arity() )
  {
    throw invalid_argument( "degree threshold must be in [0, n]" );
  }
  return brute_force_min_distance_profile( f )[d];
}

} // namespace lowdeg
