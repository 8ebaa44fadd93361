#pragma once

#include "lowdeg/boolfn.hpp"
#include "lowdeg/distribution.hpp"
#include "lowdeg/fraction.hpp"

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace lowdeg
{

/*! \brief Deterministic non-adaptive query plan: all points fixed upfront. */
struct query_plan
{
  int n = 0;
  std::vector<std::uint32_t> points;

  void validate() const;
};

/* distinct l-bit prefixes among the plan's points, as prefix keys */
std::set<std::uint32_t> covered_prefixes( const query_plan& plan, int l );

/* 1/2 * (1 - |covered| / 2^l): mixture mass of negative draws whose heavy
   prefix the plan never touches */
dyadic undistinguished_mass( const query_plan& plan, int l );

struct coverage_report
{
  std::set<std::uint32_t> covered;
  dyadic mass;
};
coverage_report coverage( const query_plan& plan, int l );

/*! \brief Coupled draw: a negative-distribution function and the positive-
  distribution function that shares every non-heavy set, with the heavy set
  replaced by a fresh size-k/2 one.  The two agree everywhere outside the
  heavy-prefix subcube. */
struct coupled_pair
{
  character_family negative_family;
  character_family positive_family;
  std::uint32_t heavy_prefix_key = 0;
};

coupled_pair sample_coupled_pair( const distribution_params& params, std::uint64_t seed );

/* true iff the coupled functions agree on every plan point; guaranteed when
   the heavy prefix is uncovered */
bool coupled_views_equal( const query_plan& plan, const distribution_params& params,
                          std::uint64_t seed );

/* accept = true; the answer vector lists plan-point values in plan order */
using decision_rule = std::function<bool( const std::vector<int>& )>;

struct error_estimate
{
  std::uint64_t samples = 0;
  std::uint64_t errors = 0;
  double estimate = 0.0;
  dyadic analytic_floor; /* undistinguished mass of the plan */
  double sigma = 0.0;
  double ci95_low = 0.0;
  double ci95_high = 0.0;
  bool consistent_with_floor = false; /* estimate > floor - 3 sigma */
};

/* Monte Carlo error of the decision rule against the half/half mixture of
   the positive and negative distributions */
error_estimate estimate_tester_error( const query_plan& plan, const decision_rule& decision,
                                      const distribution_params& params,
                                      std::uint64_t samples, std::uint64_t seed );

} // namespace lowdeg
