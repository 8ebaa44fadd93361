#pragma once

#include <cstdint>

namespace lowdeg
{

/*! \brief SplitMix64: seeded, splittable 64-bit generator.

  Every sampler in this library takes its randomness from an explicit
  splitmix64 stream, so results are reproducible from the seed alone and
  independent streams can be forked with split().
*/
class splitmix64
{
public:
  explicit constexpr splitmix64( std::uint64_t seed ) : state_( seed ) {}

  constexpr std::uint64_t next()
  {
    std::uint64_t z = ( state_ += 0x9e3779b97f4a7c15ULL );
    z = ( z ^ ( z >> 30 ) ) * 0xbf58476d1ce4e5b9ULL;
    z = ( z ^ ( z >> 27 ) ) * 0x94d049bb133111ebULL;
    return z ^ ( z >> 31 );
  }

  /* fork an independent child stream */
  constexpr splitmix64 split()
  {
    return splitmix64( next() ^ 0x6a09e667f3bcc909ULL );
  }

  /* unbiased uniform value in [0, bound), bound >= 1 */
  std::uint64_t below( std::uint64_t bound )
  {
    const std::uint64_t limit = bound * ( UINT64_MAX / bound );
    std::uint64_t r;
    do
    {
      r = next();
    } while ( r >= limit );
    return r % bound;
  }

  /* uniform -1 / +1 */
  int sign()
  {
    return ( next() & 1 ) ? -1 : 1;
  }

  bool coin()
  {
    return ( next() & 1 ) != 0;
  }

private:
  std::uint64_t state_;
};

} // namespace lowdeg
