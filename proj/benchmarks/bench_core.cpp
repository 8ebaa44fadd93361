#include <benchmark/benchmark.h>

#include <lowdeg/boolfn.hpp>
#include <lowdeg/disj.hpp>
#include <lowdeg/distribution.hpp>
#include <lowdeg/enumeration.hpp>
#include <lowdeg/family.hpp>
#include <lowdeg/protocol.hpp>
#include <lowdeg/rng.hpp>
#include <lowdeg/spectrum.hpp>

using namespace lowdeg;

static void BM_WalshHadamard( benchmark::State& state )
{
  const int n = int( state.range( 0 ) );
  splitmix64 rng( 1 );
  const auto f = random_function( n, rng );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( walsh_hadamard( f ) );
  }
  state.SetItemsProcessed( state.iterations() * ( std::int64_t( 1 ) << n ) );
}
BENCHMARK( BM_WalshHadamard )->DenseRange( 8, 20, 4 );

static void BM_RoundTrip( benchmark::State& state )
{
  const int n = int( state.range( 0 ) );
  splitmix64 rng( 2 );
  const auto f = random_function( n, rng );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( inverse_walsh_hadamard( walsh_hadamard( f ) ) );
  }
}
BENCHMARK( BM_RoundTrip )->Arg( 12 )->Arg( 16 );

static void BM_BuildBlockFunction( benchmark::State& state )
{
  const int n = int( state.range( 0 ) );
  const int l = 3;
  splitmix64 rng( 3 );
  character_family fam{ n, l, {} };
  fam.sets.resize( 8 );
  for ( auto& mask : fam.sets )
  {
    mask = sample_subset_mask( rng, n, l, ( n - l ) / 2 );
  }
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( build_block_function( fam ) );
  }
}
BENCHMARK( BM_BuildBlockFunction )->Arg( 12 )->Arg( 16 )->Arg( 20 );

static void BM_BruteForceProfile( benchmark::State& state )
{
  splitmix64 rng( 4 );
  const auto f = random_function( 4, rng );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( brute_force_min_distance_profile( f ) );
  }
}
BENCHMARK( BM_BruteForceProfile );

static void BM_Padding( benchmark::State& state )
{
  const std::size_t l = 8, k = 4;
  splitmix64 rng( 5 );
  bitvec x( l * k ), y( l * k );
  for ( std::size_t i = 0; i < l; ++i )
  {
    const std::size_t pos = rng.below( k );
    x.set( i * k + pos );
    y.set( i * k + ( pos + 1 ) % k ); /* disjoint, promise holds */
  }
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( pad_to_balanced_blocks( x, y, l, k, 3 * k ) );
  }
}
BENCHMARK( BM_Padding );

static void BM_CompileAndRun( benchmark::State& state )
{
  splitmix64 rng( 6 );
  const auto f = random_function( 10, rng );
  const auto g = random_function( 10, rng );
  const derivative_tester t( 10, 4, 4 );
  std::uint64_t seed = 0;
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( compile_and_run( t, f, g, 2, seed++ ) );
  }
}
BENCHMARK( BM_CompileAndRun );

BENCHMARK_MAIN();
