#include "lowdeg/boolfn.hpp"

#include "lowdeg/errors.hpp"

#include <bit>
#include <string>

namespace lowdeg
{

namespace
{

void check_arity( int n )
{
  if ( n < 1 || n > boolean_function::max_arity )
  {
    throw invalid_argument( "arity must be in [1, " +
                            std::to_string( boolean_function::max_arity ) +
                            "], got " + std::to_string( n ) );
  }
}

void check_same_arity( const boolean_function& f, const boolean_function& g )
{
  if ( f.arity() != g.arity() )
  {
    throw invalid_argument( "arity mismatch: " + std::to_string( f.arity() ) +
                            " vs " + std::to_string( g.arity() ) );
  }
}

} // namespace

boolean_function::boolean_function( int n )
    : n_( n )
{
  check_arity( n );
  table_ = bitvec( std::size_t( 1 ) << n );
}

boolean_function::boolean_function( int n, bitvec table )
    : n_( n ), table_( std::move( table ) )
{
  check_arity( n );
  if ( table_.size() != ( std::size_t( 1 ) << n ) )
  {
    throw invalid_argument( "truth table must have exactly 2^n entries" );
  }
}

void boolean_function::set( std::uint32_t x, int value )
{
  if ( value != 1 && value != -1 )
  {
    throw invalid_argument( "function values must be -1 or +1" );
  }
  table_.set( x, value == -1 );
}

boolean_function character( int n, std::uint32_t subset )
{
  check_arity( n );
  if ( subset >> n )
  {
    throw invalid_argument( "subset contains an index above the arity" );
  }
  boolean_function f( n );
  for ( std::uint32_t x = 0; x < f.domain_size(); ++x )
  {
    /* chi_S(x) = (-1)^{|S ∩ {i : x_i = -1}|} */
    if ( std::popcount( x & subset ) & 1 )
    {
      f.set( x, -1 );
    }
  }
  return f;
}

boolean_function pointwise_multiply( const boolean_function& f, const boolean_function& g )
{
  check_same_arity( f, g );
  return boolean_function( f.arity(), f.table() ^ g.table() );
}

boolean_function operator*( const boolean_function& f, const boolean_function& g )
{
  return pointwise_multiply( f, g );
}

dyadic hamming_distance( const boolean_function& f, const boolean_function& g )
{
  check_same_arity( f, g );
  const std::size_t differing = ( f.table() ^ g.table() ).count();
  return dyadic( static_cast<std::int64_t>( differing ), unsigned( f.arity() ) );
}

boolean_function random_function( int n, splitmix64& rng )
{
  check_arity( n );
  bitvec table( std::size_t( 1 ) << n );
  for ( std::size_t i = 0; i < table.size(); ++i )
  {
    if ( rng.coin() )
    {
      table.set( i );
    }
  }
  return boolean_function( n, std::move( table ) );
}

} // namespace lowdeg
