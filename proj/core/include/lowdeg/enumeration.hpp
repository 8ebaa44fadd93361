#pragma once

#include "lowdeg/boolfn.hpp"
#include "lowdeg/fraction.hpp"

#include <vector>

namespace lowdeg
{

/*! \brief Exhaustive-enumeration distance oracle.

  Walks all 2^{2^n} truth tables, so it is restricted to n <= 4 (65536
  candidates).  Independent of the Parseval-based bounds it is used to
  check against.
*/

static constexpr int max_oracle_arity = 4;

/* exact min Hamming distance from f to any Boolean g with fourier_degree(g) <= d */
dyadic brute_force_min_distance( const boolean_function& f, int d );

/* min distance for every threshold d = 0..n in a single sweep */
std::vector<dyadic> brute_force_min_distance_profile( const boolean_function& f );

/* Fourier degree of the n-variable function with the given packed table,
   n <= 4; table bit x set means f(x) = -1 */
int small_function_degree( int n, std::uint32_t table );

} // namespace lowdeg
