#pragma once

#include "lowdeg/boolfn.hpp"
#include "lowdeg/fraction.hpp"
#include "lowdeg/spectrum.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace lowdeg
{

/*! \brief Prefix-indexed character family: one set C_a per prefix a in {-1,1}^l.

  Prefix keys are l-bit masks with a_j = +1 exactly when bit j-1 is set.
  This is the opposite polarity from point indices (where a set bit means -1);
  the key of a point's prefix is therefore (~x) & (2^l - 1).  Each C_a lives
  in coordinates {l+1..n} and is stored as an ambient n-bit mask whose low l
  bits are clear.
*/
struct character_family
{
  int n = 0;
  int l = 0;
  std::vector<std::uint32_t> sets; /* 2^l entries, indexed by prefix key */

  std::uint32_t prefix_count() const { return std::uint32_t( 1 ) << l; }
  void validate() const;
};

/* prefix key of a point index */
inline std::uint32_t prefix_key_of_point( std::uint32_t x, int l )
{
  return ~x & ( ( std::uint32_t( 1 ) << l ) - 1 );
}

/* f(x) = chi_{C_{x_[l]}}(x), evaluated pointwise in O(1) */
int evaluate_block_function( const character_family& fam, std::uint32_t x );

/* the full truth table of the block function */
boolean_function build_block_function( const character_family& fam );

enum class epsilon_regime
{
  thm1, /* largest l with eps < 2^{-2l-1} */
  thm2  /* largest l with eps < 2^{-l-1} */
};

/* eps given as a general rational eps_num / eps_den, 0 < eps <= 1/2 */
int epsilon_to_l( std::int64_t eps_num, std::int64_t eps_den, epsilon_regime variant );

/* requires all |C_a| <= m, then confirms degree(f^[l]) <= m + l by exact
   transform; the bound is never taken on faith */
bool verify_degree_bound( const character_family& fam, int m );

/* key of the unique prefix whose set is strictly larger than all others */
std::uint32_t heavy_prefix( const character_family& fam );

/* the 2^l pairs (U ∪ C_b, 2^{-l} prod_{i in U} b_i) for U ⊆ [l], checked
   against the exact spectrum before being returned */
std::vector<std::pair<std::uint32_t, dyadic>> heavy_coefficients( const character_family& fam );

enum class farness_mode
{
  prop2, /* tail above m-1 is at least 2^{-l} */
  prop3  /* tail above m+l-1 is at least 2^{-2l} */
};

struct farness_certificate_t
{
  farness_mode mode;
  int l = 0;
  int m = 0;
  std::uint32_t heavy_prefix_key = 0;
  std::uint32_t heavy_set = 0;
  int degree_threshold = 0;
  dyadic claimed_tail;        /* 2^{-l} or 2^{-2l} */
  dyadic claimed_distance_lb; /* always claimed_tail / 4 */
  dyadic exact_tail;          /* parseval_tail at the threshold, >= claimed */
};

/* builds and validates the certificate; requires the cardinality hypothesis
   (|C_b| >= m for exactly one prefix, all others <= m-1) */
farness_certificate_t farness_certificate( const character_family& fam, int m,
                                           farness_mode mode );

/* paper-claimed farness constant for a mode: 2^{-l-1} resp. 2^{-2l-1} */
dyadic claimed_farness_constant( farness_mode mode, int l );

} // namespace lowdeg
