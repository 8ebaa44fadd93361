#pragma once

#include "lowdeg/boolfn.hpp"
#include "lowdeg/family.hpp"
#include "lowdeg/rng.hpp"

#include <cstdint>

namespace lowdeg
{

enum class distribution_mode
{
  positive, /* every C_a uniform of size k/2: degree <= k/2 + l <= k */
  negative  /* one uniform heavy prefix of size n-k+1: far from degree <= n-k */
};

struct distribution_params
{
  int n = 0;
  int k = 0;
  int l = 0;
  distribution_mode mode = distribution_mode::positive;
  std::uint64_t seed = 0;

  void validate() const;
};

/* uniform subset of {l+1..n} of the given size, as an ambient mask;
   partial Fisher-Yates over the n-l candidate coordinates */
std::uint32_t sample_subset_mask( splitmix64& rng, int n, int l, int size );

struct family_draw
{
  character_family family;
  std::uint32_t heavy_prefix_key = 0; /* meaningful for negative draws only */
};

/* the family underlying a D_p / D_n draw; deterministic given params.seed */
family_draw sample_family_draw( const distribution_params& params );

/* full truth table of the drawn function */
boolean_function sample_distribution( const distribution_params& params );

} // namespace lowdeg
