#include "lowdeg/disj.hpp"

#include "lowdeg/errors.hpp"

#include <string>

namespace lowdeg
{

namespace
{

std::size_t intersections( const bitvec& x, const bitvec& y )
{
  return ( x & y ).count();
}

int any_shared( const bitvec& x, const bitvec& y )
{
  return intersections( x, y ) > 0 ? 1 : 0;
}

} // namespace

void disj_instance::validate() const
{
  if ( x.size() != m || y.size() != m )
  {
    throw invalid_argument( "disj: vectors must have length m" );
  }
  if ( x.count() != k || y.count() != k )
  {
    throw promise_violation( "disj: both sides must have weight exactly k" );
  }
  if ( intersections( x, y ) > 1 )
  {
    throw promise_violation( "disj: more than one common element" );
  }
}

void block_disj_instance::validate() const
{
  const std::size_t len = l_blocks * m;
  if ( x.size() != len || y.size() != len )
  {
    throw invalid_argument( "block disj: vectors must have length l*m" );
  }
  for ( std::size_t block = 0; block < l_blocks; ++block )
  {
    const std::size_t begin = block * m;
    const std::size_t end = begin + m;
    if ( x.count_range( begin, end ) != k || y.count_range( begin, end ) != k )
    {
      throw promise_violation( "block disj: block " + std::to_string( block ) +
                               " does not have weight exactly k on both sides" );
    }
    std::size_t common = 0;
    for ( std::size_t i = begin; i < end; ++i )
    {
      common += ( x.test( i ) && y.test( i ) ) ? 1 : 0;
    }
    if ( common > 1 )
    {
      throw promise_violation( "block disj: block " + std::to_string( block ) +
                               " has more than one common element" );
    }
  }
}

int disj_value( const disj_instance& inst )
{
  inst.validate();
  return any_shared( inst.x, inst.y );
}

int disj_value( const block_disj_instance& inst )
{
  inst.validate();
  return any_shared( inst.x, inst.y );
}

block_disj_instance pad_to_balanced_blocks( const bitvec& x, const bitvec& y,
                                            std::size_t l, std::size_t k,
                                            std::size_t m )
{
  if ( l == 0 || k == 0 )
  {
    throw invalid_argument( "padding: need l >= 1 and k >= 1" );
  }
  if ( x.size() != l * k || y.size() != l * k )
  {
    throw invalid_argument( "padding: inputs must have length l*k" );
  }
  if ( m < 2 * k )
  {
    throw formula_invalid( "padding: m >= 2k required for the pad formula" );
  }
  if ( m < 3 * k )
  {
    throw unsafe_padding( "padding: m >= 3k required so pads can never intersect" );
  }
  if ( intersections( x, y ) > 1 )
  {
    throw promise_violation( "padding: more than one common element in the input" );
  }

  block_disj_instance out;
  out.l_blocks = l;
  out.m = m;
  out.k = k;
  out.x = bitvec( l * m );
  out.y = bitvec( l * m );

  for ( std::size_t block = 0; block < l; ++block )
  {
    const std::size_t in_base = block * k;
    const std::size_t out_base = block * m;
    std::size_t wx = 0, wy = 0;
    for ( std::size_t j = 0; j < k; ++j )
    {
      if ( x.test( in_base + j ) )
      {
        out.x.set( out_base + j );
        ++wx;
      }
      if ( y.test( in_base + j ) )
      {
        out.y.set( out_base + j );
        ++wy;
      }
    }
    /* Alice: k-wx ones right after the chunk, then -1s */
    for ( std::size_t j = 0; j < k - wx; ++j )
    {
      out.x.set( out_base + k + j );
    }
    /* Bob: m-2k+wy minus-ones after the chunk, then k-wy ones at the end */
    for ( std::size_t j = 0; j < k - wy; ++j )
    {
      out.y.set( out_base + m - 1 - j );
    }
  }

  out.validate();
  return out;
}

} // namespace lowdeg
