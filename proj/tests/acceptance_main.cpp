#include <lowdeg/verify.hpp>

#include <chrono>
#include <cstdio>
#include <exception>

using namespace lowdeg;

namespace
{

struct criterion
{
  int number;
  const char* group;
  const char* title;
};

constexpr criterion criteria[] = {
  { 1, "transform", "transform exactness: bit-exact roundtrip and integer parseval" },
  { 2, "prop1", "degree ceiling m+l over exhaustive and sampled family grids" },
  { 3, "prop2", "heavy coefficients 2^-l prod b_i, tail >= 2^-l, oracle >= 2^-l-2" },
  { 4, "prop3", "tail >= 2^-2l above m+l-1, oracle >= 2^-2l-2" },
  { 5, "thm1", "embedding: classification equals the DISJ value with exact claims" },
  { 6, "lemma2", "padding: value preserved, balanced blocks, zero pad collisions" },
  { 7, "lemma1", "protocol compiler: 2 bits per query, compiled = direct verdict" },
  { 8, "thm2", "query plans: analytic floor >= 5/12, coupling, Monte Carlo" },
  { 9, "derivative", "derivative tester accepts every low-degree construction" },
};

} // namespace

int main()
{
  const auto cfg = grid_config::defaults();
  int failures = 0;

  for ( const auto& c : criteria )
  {
    const auto start = std::chrono::steady_clock::now();
    std::vector<check_row> rows;
    bool crashed = false;
    try
    {
      rows = run_check_group( c.group, cfg );
    }
    catch ( const std::exception& e )
    {
      crashed = true;
      std::printf( "[FAIL] criterion %d: %s -- exception: %s\n", c.number, c.title,
                   e.what() );
    }
    if ( crashed )
    {
      ++failures;
      continue;
    }

    std::size_t failed = 0, skipped = 0;
    for ( const auto& row : rows )
    {
      failed += row.status == check_status::fail ? 1 : 0;
      skipped += row.status == check_status::skip ? 1 : 0;
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start )
                             .count();

    if ( failed == 0 )
    {
      std::printf( "[PASS] criterion %d: %s (%zu rows, %zu skipped, %lld ms)\n",
                   c.number, c.title, rows.size(), skipped,
                   static_cast<long long>( elapsed ) );
    }
    else
    {
      ++failures;
      std::printf( "[FAIL] criterion %d: %s (%zu of %zu rows failed)\n", c.number,
                   c.title, failed, rows.size() );
      for ( const auto& row : rows )
      {
        if ( row.status == check_status::fail )
        {
          std::printf( "       %s [%s] expected: %s observed: %s\n",
                       row.check_id.c_str(), row.parameters.c_str(),
                       row.expected.c_str(), row.observed.c_str() );
        }
      }
    }
  }

  if ( failures == 0 )
  {
    std::printf( "all %zu criteria passed\n", std::size( criteria ) );
    return 0;
  }
  std::printf( "%d criteria failed\n", failures );
  return 1;
}
