#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lowdeg
{

/*! \brief Fixed-length packed bit vector.

  Backing store for truth tables and DISJ inputs.  Hex serialization is
  nibble-wise with the least significant bits first: character i of the hex
  string encodes bits 4i..4i+3.
*/
class bitvec
{
public:
  bitvec() = default;
  explicit bitvec( std::size_t len );

  static bitvec from_hex( std::size_t len, std::string_view hex );

  std::size_t size() const { return len_; }

  bool test( std::size_t i ) const
  {
    return ( words_[i >> 6] >> ( i & 63 ) ) & 1u;
  }

  void set( std::size_t i, bool value = true )
  {
    const std::uint64_t mask = std::uint64_t( 1 ) << ( i & 63 );
    if ( value )
    {
      words_[i >> 6] |= mask;
    }
    else
    {
      words_[i >> 6] &= ~mask;
    }
  }

  void flip( std::size_t i )
  {
    words_[i >> 6] ^= std::uint64_t( 1 ) << ( i & 63 );
  }

  std::size_t count() const;
  std::size_t count_range( std::size_t begin, std::size_t end ) const;

  bitvec operator^( const bitvec& other ) const;
  bitvec operator&( const bitvec& other ) const;

  std::string to_hex() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  bool operator==( const bitvec& other ) const = default;

private:
  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;
};

} // namespace lowdeg
