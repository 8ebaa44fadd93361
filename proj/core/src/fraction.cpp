#include "lowdeg/fraction.hpp"

#include "lowdeg/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace lowdeg
{

namespace
{

using int128 = __int128;

/* strip common factors of two, then narrow back to 64 bits */
dyadic normalized( int128 num, unsigned den_log2 )
{
  if ( num == 0 )
  {
    return dyadic{};
  }
  while ( den_log2 > 0 && ( num & 1 ) == 0 )
  {
    num >>= 1;
    --den_log2;
  }
  if ( num > INT64_MAX || num < INT64_MIN )
  {
    throw std::overflow_error( "dyadic: numerator out of 64-bit range" );
  }
  return dyadic( static_cast<std::int64_t>( num ), den_log2 );
}

} // namespace

dyadic::dyadic( std::int64_t num, unsigned log2_den )
    : num_( num ), den_log2_( log2_den )
{
  if ( num_ == 0 )
  {
    den_log2_ = 0;
    return;
  }
  while ( den_log2_ > 0 && ( num_ & 1 ) == 0 )
  {
    num_ >>= 1;
    --den_log2_;
  }
}

dyadic dyadic::from_integer( std::int64_t value )
{
  return dyadic( value, 0 );
}

dyadic dyadic::pow2_inverse( unsigned e )
{
  return dyadic( 1, e );
}

dyadic dyadic::operator-() const
{
  dyadic r = *this;
  r.num_ = -r.num_;
  return r;
}

dyadic operator+( const dyadic& a, const dyadic& b )
{
  const unsigned q = std::max( a.den_log2_, b.den_log2_ );
  const int128 na = int128( a.num_ ) << ( q - a.den_log2_ );
  const int128 nb = int128( b.num_ ) << ( q - b.den_log2_ );
  return normalized( na + nb, q );
}

dyadic operator-( const dyadic& a, const dyadic& b )
{
  return a + ( -b );
}

dyadic operator*( const dyadic& a, const dyadic& b )
{
  return normalized( int128( a.num_ ) * int128( b.num_ ), a.den_log2_ + b.den_log2_ );
}

dyadic& dyadic::operator+=( const dyadic& other )
{
  *this = *this + other;
  return *this;
}

dyadic& dyadic::operator-=( const dyadic& other )
{
  *this = *this - other;
  return *this;
}

dyadic& dyadic::operator*=( const dyadic& other )
{
  *this = *this * other;
  return *this;
}

std::strong_ordering operator<=>( const dyadic& a, const dyadic& b )
{
  const unsigned q = std::max( a.den_log2_, b.den_log2_ );
  const int128 na = int128( a.num_ ) << ( q - a.den_log2_ );
  const int128 nb = int128( b.num_ ) << ( q - b.den_log2_ );
  if ( na < nb )
  {
    return std::strong_ordering::less;
  }
  if ( na > nb )
  {
    return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string dyadic::str() const
{
  return std::to_string( num_ ) + "/2^" + std::to_string( den_log2_ );
}

dyadic dyadic::parse( std::string_view text )
{
  const auto fail = [&]() -> dyadic {
    throw parse_error( "dyadic: expected \"p/2^q\", got \"" + std::string( text ) + "\"" );
  };

  std::int64_t num = 0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars( begin, end, num );
  if ( ec != std::errc{} )
  {
    return fail();
  }
  if ( ptr == end )
  {
    return dyadic( num, 0 );
  }
  if ( end - ptr < 3 || ptr[0] != '/' || ptr[1] != '2' || ptr[2] != '^' )
  {
    return fail();
  }
  unsigned den_log2 = 0;
  auto [ptr2, ec2] = std::from_chars( ptr + 3, end, den_log2 );
  if ( ec2 != std::errc{} || ptr2 != end || den_log2 > 126 )
  {
    return fail();
  }
  return dyadic( num, den_log2 );
}

double dyadic::to_double() const
{
  return std::ldexp( static_cast<double>( num_ ), -static_cast<int>( den_log2_ ) );
}

std::ostream& operator<<( std::ostream& os, const dyadic& value )
{
  return os << value.str();
}

} // namespace lowdeg
