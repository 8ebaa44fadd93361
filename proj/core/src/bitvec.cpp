#include "lowdeg/bitvec.hpp"

#include "lowdeg/errors.hpp"

#include <bit>

namespace lowdeg
{

namespace
{

constexpr char hex_digit( unsigned v )
{
  return v < 10 ? char( '0' + v ) : char( 'a' + v - 10 );
}

unsigned hex_value( char c )
{
  if ( c >= '0' && c <= '9' )
  {
    return unsigned( c - '0' );
  }
  if ( c >= 'a' && c <= 'f' )
  {
    return unsigned( c - 'a' + 10 );
  }
  if ( c >= 'A' && c <= 'F' )
  {
    return unsigned( c - 'A' + 10 );
  }
  throw parse_error( std::string( "bitvec: invalid hex digit '" ) + c + "'" );
}

} // namespace

bitvec::bitvec( std::size_t len )
    : len_( len ), words_( ( len + 63 ) / 64, 0u )
{
}

bitvec bitvec::from_hex( std::size_t len, std::string_view hex )
{
  const std::size_t digits = ( len + 3 ) / 4;
  if ( hex.size() != digits )
  {
    throw parse_error( "bitvec: expected " + std::to_string( digits ) +
                       " hex digits for " + std::to_string( len ) + " bits, got " +
                       std::to_string( hex.size() ) );
  }
  bitvec v( len );
  for ( std::size_t i = 0; i < digits; ++i )
  {
    const unsigned nibble = hex_value( hex[i] );
    for ( unsigned b = 0; b < 4; ++b )
    {
      const std::size_t pos = 4 * i + b;
      if ( nibble & ( 1u << b ) )
      {
        if ( pos >= len )
        {
          throw parse_error( "bitvec: set bit beyond declared length" );
        }
        v.set( pos );
      }
    }
  }
  return v;
}

std::size_t bitvec::count() const
{
  std::size_t total = 0;
  for ( auto w : words_ )
  {
    total += std::size_t( std::popcount( w ) );
  }
  return total;
}

std::size_t bitvec::count_range( std::size_t begin, std::size_t end ) const
{
  std::size_t total = 0;
  for ( std::size_t i = begin; i < end; ++i )
  {
    total += test( i ) ? 1 : 0;
  }
  return total;
}

bitvec bitvec::operator^( const bitvec& other ) const
{
  bitvec r( len_ );
  for ( std::size_t i = 0; i < words_.size(); ++i )
  {
    r.words_[i] = words_[i] ^ other.words_[i];
  }
  return r;
}

bitvec bitvec::operator&( const bitvec& other ) const
{
  bitvec r( len_ );
  for ( std::size_t i = 0; i < words_.size(); ++i )
  {
    r.words_[i] = words_[i] & other.words_[i];
  }
  return r;
}

std::string bitvec::to_hex() const
{
  const std::size_t digits = ( len_ + 3 ) / 4;
  std::string out( digits, '0' );
  for ( std::size_t i = 0; i < digits; ++i )
  {
    unsigned nibble = 0;
    for ( unsigned b = 0; b < 4; ++b )
    {
      const std::size_t pos = 4 * i + b;
      if ( pos < len_ && test( pos ) )
      {
        nibble |= 1u << b;
      }
    }
    out[i] = hex_digit( nibble );
  }
  return out;
}

} // namespace lowdeg
