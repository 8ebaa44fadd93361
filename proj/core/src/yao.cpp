#include "lowdeg/yao.hpp"

#include "lowdeg/errors.hpp"

#include <cmath>
#include <string>

namespace lowdeg
{

void query_plan::validate() const
{
  if ( n < 1 || n > boolean_function::max_arity )
  {
    throw invalid_argument( "query plan: arity out of range" );
  }
  for ( std::uint32_t p : points )
  {
    if ( p >> n )
    {
      throw invalid_argument( "query plan: point outside {0..2^n-1}" );
    }
  }
}

std::set<std::uint32_t> covered_prefixes( const query_plan& plan, int l )
{
  plan.validate();
  if ( l < 0 || l > plan.n )
  {
    throw invalid_argument( "covered_prefixes: l out of range" );
  }
  std::set<std::uint32_t> covered;
  for ( std::uint32_t p : plan.points )
  {
    covered.insert( prefix_key_of_point( p, l ) );
  }
  return covered;
}

dyadic undistinguished_mass( const query_plan& plan, int l )
{
  const auto covered = covered_prefixes( plan, l );
  const std::int64_t total = std::int64_t( 1 ) << l;
  /* (2^l - |covered|) / 2^{l+1} */
  return dyadic( total - std::int64_t( covered.size() ), unsigned( l ) + 1 );
}

coverage_report coverage( const query_plan& plan, int l )
{
  return { covered_prefixes( plan, l ), undistinguished_mass( plan, l ) };
}

coupled_pair sample_coupled_pair( const distribution_params& params, std::uint64_t seed )
{
  distribution_params negative = params;
  negative.mode = distribution_mode::negative;
  negative.seed = seed;
  negative.validate();

  splitmix64 rng( seed );
  coupled_pair pair;
  pair.negative_family.n = params.n;
  pair.negative_family.l = params.l;
  pair.negative_family.sets.resize( std::size_t( 1 ) << params.l );

  /* same stream layout as sample_family_draw, then one extra fresh set */
  pair.heavy_prefix_key =
      std::uint32_t( rng.below( pair.negative_family.prefix_count() ) );
  for ( std::uint32_t key = 0; key < pair.negative_family.prefix_count(); ++key )
  {
    const int size = key == pair.heavy_prefix_key ? params.n - params.k + 1 : params.k / 2;
    pair.negative_family.sets[key] = sample_subset_mask( rng, params.n, params.l, size );
  }
  pair.positive_family = pair.negative_family;
  pair.positive_family.sets[pair.heavy_prefix_key] =
      sample_subset_mask( rng, params.n, params.l, params.k / 2 );
  return pair;
}

bool coupled_views_equal( const query_plan& plan, const distribution_params& params,
                          std::uint64_t seed )
{
  plan.validate();
  if ( plan.n != params.n )
  {
    throw invalid_argument( "coupled views: plan and distribution arity differ" );
  }
  const auto pair = sample_coupled_pair( params, seed );
  for ( std::uint32_t p : plan.points )
  {
    if ( evaluate_block_function( pair.negative_family, p ) !=
         evaluate_block_function( pair.positive_family, p ) )
    {
      return false;
    }
  }
  return true;
}

error_estimate estimate_tester_error( const query_plan& plan, const decision_rule& decision,
                                      const distribution_params& params,
                                      std::uint64_t samples, std::uint64_t seed )
{
  plan.validate();
  if ( plan.n != params.n )
  {
    throw invalid_argument( "estimate: plan and distribution arity differ" );
  }
  if ( samples == 0 )
  {
    throw invalid_argument( "estimate: needs at least one sample" );
  }
  if ( !decision )
  {
    throw invalid_argument( "estimate: decision rule must be total (non-null)" );
  }

  error_estimate est;
  est.samples = samples;
  est.analytic_floor = undistinguished_mass( plan, params.l );

  splitmix64 rng( seed );
  std::vector<int> answers( plan.points.size() );
  for ( std::uint64_t i = 0; i < samples; ++i )
  {
    const bool draw_negative = rng.coin();
    distribution_params draw = params;
    draw.mode = draw_negative ? distribution_mode::negative : distribution_mode::positive;
    draw.seed = rng.next();
    const auto fam = sample_family_draw( draw ).family;
    for ( std::size_t j = 0; j < plan.points.size(); ++j )
    {
      answers[j] = evaluate_block_function( fam, plan.points[j] );
    }
    const bool accept = decision( answers );
    /* positive draws must be accepted, negative draws rejected */
    if ( accept == draw_negative )
    {
      est.errors += 1;
    }
  }

  const double p = double( est.errors ) / double( est.samples );
  est.estimate = p;
  est.sigma = std::sqrt( p * ( 1.0 - p ) / double( est.samples ) );
  est.ci95_low = std::max( 0.0, p - 1.96 * est.sigma );
  est.ci95_high = std::min( 1.0, p + 1.96 * est.sigma );
  est.consistent_with_floor = p > est.analytic_floor.to_double() - 3.0 * est.sigma;
  return est;
}

} // namespace lowdeg
