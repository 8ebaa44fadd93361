#include "lowdeg/protocol.hpp"

#include "lowdeg/errors.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace lowdeg
{

namespace
{

void check_protocol_inputs( const tester& t, const boolean_function& f,
                            const boolean_function& g, int l )
{
  if ( f.arity() != g.arity() )
  {
    throw invalid_argument( "protocol: Alice and Bob must hold functions of equal arity" );
  }
  if ( t.arity() != f.arity() )
  {
    throw invalid_argument( "protocol: tester arity does not match the inputs" );
  }
  if ( l < 0 || l > f.arity() )
  {
    throw invalid_argument( "protocol: l out of range" );
  }
}

} // namespace

transcript compile_and_run( const tester& t, const boolean_function& f,
                            const boolean_function& g, int l, std::uint64_t seed )
{
  check_protocol_inputs( t, f, g, l );
  const int n = f.arity();
  const std::uint32_t rest_mask =
      ( ( std::uint32_t( 1 ) << n ) - 1 ) & ~( ( std::uint32_t( 1 ) << l ) - 1 );

  transcript tr;
  tr.seed = seed;
  const query_oracle oracle = [&]( std::uint32_t x ) -> int {
    if ( tr.queries_made == t.query_budget() )
    {
      throw protocol_abort( "tester exceeded its declared budget of " +
                            std::to_string( t.query_budget() ) + " queries" );
    }
    const int alice_bit = f( x );
    /* chi is public: both parties evaluate it from x alone */
    const int chi = std::popcount( x & rest_mask ) & 1 ? -1 : 1;
    const int bob_answer = alice_bit * g( x ) * chi;
    tr.queries_made += 1;
    tr.bits_exchanged += 2;
    return bob_answer;
  };

  splitmix64 rng( seed );
  tr.accepted = t.run( oracle, rng );
  return tr;
}

run_result run_direct( const tester& t, const boolean_function& h, std::uint64_t seed )
{
  if ( t.arity() != h.arity() )
  {
    throw invalid_argument( "tester arity does not match the target" );
  }
  run_result result;
  const query_oracle oracle = [&]( std::uint32_t x ) -> int {
    if ( result.queries_made == t.query_budget() )
    {
      throw protocol_abort( "tester exceeded its declared budget of " +
                            std::to_string( t.query_budget() ) + " queries" );
    }
    result.queries_made += 1;
    return h( x );
  };
  splitmix64 rng( seed );
  result.accepted = t.run( oracle, rng );
  return result;
}

derivative_tester::derivative_tester( int n, int k, std::uint64_t rounds )
    : n_( n ), k_( k ), rounds_( rounds )
{
  if ( n < 1 || n > boolean_function::max_arity )
  {
    throw invalid_argument( "derivative tester: arity out of range" );
  }
  if ( k < 0 || k + 1 > n )
  {
    throw invalid_argument( "derivative tester: needs k + 1 <= n" );
  }
  if ( rounds == 0 )
  {
    throw invalid_argument( "derivative tester: needs at least one round" );
  }
}

std::int64_t derivative_tester::signed_subcube_sum( const query_oracle& answer,
                                                    std::span<const int> free_coords,
                                                    std::uint32_t base )
{
  std::uint32_t free_mask = 0;
  for ( int c : free_coords )
  {
    free_mask |= std::uint32_t( 1 ) << ( c - 1 );
  }
  std::int64_t sum = 0;
  const std::uint32_t combos = std::uint32_t( 1 ) << free_coords.size();
  for ( std::uint32_t u = 0; u < combos; ++u )
  {
    std::uint32_t point = base & ~free_mask;
    for ( std::size_t i = 0; i < free_coords.size(); ++i )
    {
      if ( ( u >> i ) & 1 )
      {
        point |= std::uint32_t( 1 ) << ( free_coords[i] - 1 );
      }
    }
    const int sign = std::popcount( point & free_mask ) & 1 ? -1 : 1;
    sum += sign * answer( point );
  }
  return sum;
}

bool derivative_tester::run( const query_oracle& answer, splitmix64& rng ) const
{
  std::vector<int> coords( static_cast<std::size_t>( n_ ) );
  for ( std::uint64_t round = 0; round < rounds_; ++round )
  {
    /* random (k+1)-subset of [n] by partial Fisher-Yates */
    for ( int i = 0; i < n_; ++i )
    {
      coords[std::size_t( i )] = i + 1;
    }
    for ( int i = 0; i <= k_; ++i )
    {
      const int j = i + int( rng.below( std::uint64_t( n_ - i ) ) );
      std::swap( coords[std::size_t( i )], coords[std::size_t( j )] );
    }
    const std::uint32_t base = std::uint32_t( rng.below( std::uint64_t( 1 ) << n_ ) );
    const auto picked = std::span<const int>( coords.data(), std::size_t( k_ ) + 1 );
    if ( signed_subcube_sum( answer, picked, base ) != 0 )
    {
      return false;
    }
  }
  return true;
}

bool derivative_tester_always_accepts( const boolean_function& f, int k )
{
  const int n = f.arity();
  if ( k + 1 > n )
  {
    throw invalid_argument( "needs k + 1 <= n" );
  }
  const query_oracle oracle = [&]( std::uint32_t x ) { return f( x ); };

  /* every (k+1)-subset of [n], every base point */
  std::vector<int> coords;
  const std::uint32_t full = ( std::uint32_t( 1 ) << n ) - 1;
  for ( std::uint32_t mask = 0; mask <= full; ++mask )
  {
    if ( std::popcount( mask ) != k + 1 )
    {
      continue;
    }
    coords.clear();
    for ( int c = 1; c <= n; ++c )
    {
      if ( mask & ( std::uint32_t( 1 ) << ( c - 1 ) ) )
      {
        coords.push_back( c );
      }
    }
    /* base points only need to range over the non-free coordinates */
    for ( std::uint32_t base = 0; base <= full; ++base )
    {
      if ( base & mask )
      {
        continue;
      }
      if ( derivative_tester::signed_subcube_sum( oracle, coords, base ) != 0 )
      {
        return false;
      }
    }
  }
  return true;
}

query_account_summary query_account( const tester& t, const boolean_function& target,
                                     std::span<const std::uint64_t> seeds )
{
  query_account_summary summary;
  summary.rows.reserve( seeds.size() );
  std::uint64_t accepted = 0;
  for ( std::uint64_t seed : seeds )
  {
    const auto result = run_direct( t, target, seed );
    summary.rows.push_back( { seed, result.queries_made, result.accepted } );
    accepted += result.accepted ? 1 : 0;
  }
  if ( !seeds.empty() )
  {
    const double p = double( accepted ) / double( seeds.size() );
    const double sigma = std::sqrt( p * ( 1.0 - p ) / double( seeds.size() ) );
    summary.acceptance_frequency = p;
    summary.ci95_low = std::max( 0.0, p - 1.96 * sigma );
    summary.ci95_high = std::min( 1.0, p + 1.96 * sigma );
  }
  return summary;
}

} // namespace lowdeg
