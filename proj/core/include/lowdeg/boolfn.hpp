#pragma once

#include "lowdeg/bitvec.hpp"
#include "lowdeg/fraction.hpp"
#include "lowdeg/rng.hpp"

#include <cstdint>

namespace lowdeg
{

/*! \brief Boolean function f : {-1,1}^n -> {-1,1} over a bit-packed truth table.

  Point encoding: coordinate i of a point maps to bit i-1 of its index, with
  bit value (1 - x_i) / 2, so a set index bit means x_i = -1.  A set table bit
  at index x means f(x) = -1.  Subsets S of [n] use the same bit positions.

  Instances are immutable in ordinary use and safe to share across threads.
*/
class boolean_function
{
public:
  static constexpr int max_arity = 24;

  /* constant +1 function */
  explicit boolean_function( int n );

  boolean_function( int n, bitvec table );

  int arity() const { return n_; }
  std::uint32_t domain_size() const { return std::uint32_t( 1 ) << n_; }

  /* f(x) as -1 or +1 */
  int operator()( std::uint32_t x ) const
  {
    return table_.test( x ) ? -1 : 1;
  }

  void set( std::uint32_t x, int value );

  const bitvec& table() const { return table_; }

  bool operator==( const boolean_function& other ) const = default;

private:
  int n_;
  bitvec table_;
};

/* chi_S(x) = prod_{i in S} x_i; throws invalid_argument if S has bits above n */
boolean_function character( int n, std::uint32_t subset );

/* (f*g)(x) = f(x) * g(x); XOR of the packed tables */
boolean_function pointwise_multiply( const boolean_function& f, const boolean_function& g );
boolean_function operator*( const boolean_function& f, const boolean_function& g );

/* Pr_x[f(x) != g(x)] over the uniform distribution, exact */
dyadic hamming_distance( const boolean_function& f, const boolean_function& g );

/* uniformly random truth table */
boolean_function random_function( int n, splitmix64& rng );

} // namespace lowdeg
