#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace lowdeg
{

/*! \brief Exact dyadic rational p / 2^q.

  Values are kept in lowest power-of-two terms: the numerator is odd unless
  the value is zero, in which case the exponent is zero as well.  All
  arithmetic is exact; operations whose normalized numerator would leave the
  64-bit range throw std::overflow_error.
*/
class dyadic
{
public:
  constexpr dyadic() = default;

  /* value num / 2^log2_den, normalized on construction */
  dyadic( std::int64_t num, unsigned log2_den );

  static dyadic from_integer( std::int64_t value );

  /* 2^-e */
  static dyadic pow2_inverse( unsigned e );

  std::int64_t numerator() const { return num_; }
  unsigned log2_denominator() const { return den_log2_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ == 0 ? 0 : ( num_ < 0 ? -1 : 1 ); }

  dyadic operator-() const;
  friend dyadic operator+( const dyadic& a, const dyadic& b );
  friend dyadic operator-( const dyadic& a, const dyadic& b );
  friend dyadic operator*( const dyadic& a, const dyadic& b );
  dyadic& operator+=( const dyadic& other );
  dyadic& operator-=( const dyadic& other );
  dyadic& operator*=( const dyadic& other );

  friend bool operator==( const dyadic& a, const dyadic& b ) = default;
  friend std::strong_ordering operator<=>( const dyadic& a, const dyadic& b );

  /* canonical "p/2^q" rendering, e.g. "1/2^3", "-3/2^1", "0/2^0" */
  std::string str() const;
  static dyadic parse( std::string_view text );

  double to_double() const;

private:
  std::int64_t num_ = 0;
  unsigned den_log2_ = 0;
};

std::ostream& operator<<( std::ostream& os, const dyadic& value );

} // namespace lowdeg
