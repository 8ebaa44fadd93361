#pragma once

#include "lowdeg/boolfn.hpp"
#include "lowdeg/disj.hpp"
#include "lowdeg/family.hpp"
#include "lowdeg/fraction.hpp"

#include <cstdint>
#include <vector>

namespace lowdeg
{

/*! \brief A block-DISJ instance viewed as a pair of character families.

  Alice's blocks become the sets C_a, Bob's the sets D_a, both of size
  (n-k)/2 inside {l+1..n} with at most one intersection per prefix.  The
  combined function h = f * g * chi_{[n]\[l]} is the block function of the
  derived family E_a = ([n]\[l]) Δ (C_a Δ D_a), of size k-l+2|C_a ∩ D_a|.
*/
struct combined_instance
{
  character_family fam_f;
  character_family fam_g;
  int k = 0;

  std::vector<std::uint32_t> derived_sets() const; /* E_a per prefix key */
  void validate() const;
};

combined_instance make_combined_instance( character_family fam_f,
                                          character_family fam_g, int k );

/* block i of Alice's input becomes C_a (shifted to {l+1..n}) for the prefix
   with encoding index i, and Bob's block becomes D_a */
combined_instance families_from_block_instance( const block_disj_instance& inst,
                                                int n, int k, int l );

/* exact inverse of families_from_block_instance */
block_disj_instance block_instance_from_families( const combined_instance& ci );

/* h = f * g * chi_{[n]\[l]}; computed both via pointwise products and as the
   block function of {E_a}, which must agree bit-exactly */
boolean_function combine_h( const combined_instance& ci );

enum class h_class
{
  low_degree, /* all blocks disjoint: degree(h) <= k */
  far         /* one intersecting block: tail above k+1 at least 2^{-2l} */
};

struct h_verdict
{
  h_class classification = h_class::low_degree;
  int degree = 0;  /* exact Fourier degree of h */
  dyadic tail;     /* parseval_tail(h, k+1) */
};

/* classification from the intersection pattern, with the degree and tail
   claims re-proved by exact transform before returning */
h_verdict classify_h( const combined_instance& ci );

} // namespace lowdeg
