#pragma once

#include "lowdeg/bitvec.hpp"

#include <cstddef>

namespace lowdeg
{

/*! \brief Balanced set-disjointness promise instance.

  Vectors are over {-1,+1} with +1 ("element present") stored as a set bit.
  The promise: both sides have exactly k elements and share at most one.
*/
struct disj_instance
{
  std::size_t m = 0; /* universe size */
  std::size_t k = 0; /* weight of each side */
  bitvec x;
  bitvec y;

  void validate() const;
  bool operator==( const disj_instance& other ) const = default;
};

/*! \brief OR of l independent balanced disjointness blocks of length m.

  Every block of x and of y has weight exactly k and at most one
  intersection.
*/
struct block_disj_instance
{
  std::size_t l_blocks = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  bitvec x;
  bitvec y;

  void validate() const;
  bool operator==( const block_disj_instance& other ) const = default;
};

/* 1 iff some coordinate (in some block) has x_i = y_i = +1; the promise is
   checked first and a violation is never silently evaluated */
int disj_value( const disj_instance& inst );
int disj_value( const block_disj_instance& inst );

/* Padding gadget: turns l chunks of length k (arbitrary weights, at most one
   intersection overall) into l balanced blocks of length m and weight k.
   Alice's block i is  x^i || 1^{k-|x^i|} || (-1)^{m-2k+|x^i|};
   Bob's block i is    y^i || (-1)^{m-2k+|y^i|} || 1^{k-|y^i|}.
   Requires m >= 2k for the formula and m >= 3k so that the two pads can
   never intersect each other at any chunk weight. */
block_disj_instance pad_to_balanced_blocks( const bitvec& x, const bitvec& y,
                                            std::size_t l, std::size_t k,
                                            std::size_t m );

} // namespace lowdeg
