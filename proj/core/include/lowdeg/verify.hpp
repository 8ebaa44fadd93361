#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace lowdeg
{

enum class check_status
{
  pass,
  fail,
  skip
};

struct check_row
{
  std::string check_id;
  std::string parameters;
  std::string expected;
  std::string observed;
  check_status status = check_status::pass;
};

struct verification_report
{
  std::vector<check_row> rows;

  std::size_t passed() const;
  std::size_t failed() const;
  std::size_t skipped() const;
  bool all_passed() const { return failed() == 0; }
};

/*! \brief Parameter grid for the verification harness.

  Defaults pin the full suite: exact transform checks for n = 1..12, the
  exhaustive and sampled construction grids, the embedding sweep, the
  padding enumeration, the protocol equivalence run, the query-plan
  experiment and the one-sided tester sweep.  Parsed from a flat
  key = value file; list values accept "a..b" ranges and comma lists.
*/
struct grid_config
{
  std::uint64_t seed = 0x5eed;
  std::vector<std::string> checks; /* group names, empty = none */

  std::vector<int> transform_arities;
  int transform_functions = 1000;

  std::vector<int> prop1_exhaustive_n;
  int prop1_exhaustive_l_max = 2;
  std::vector<int> prop1_sampled_n;
  int prop1_sampled_l_max = 3;
  int prop1_sampled_seeds = 1000;

  std::vector<int> farness_exhaustive_n;
  int farness_exhaustive_l_max = 2;
  std::vector<int> farness_sampled_n;
  int farness_sampled_l_max = 3;
  int farness_sampled_seeds = 1000;
  std::vector<int> farness_oracle_n; /* entries above 4 become skip rows */

  std::vector<int> thm1_sampled_n;
  int thm1_sampled_l_max = 2;
  int thm1_sampled_seeds = 1000;

  int lemma2_max_lk = 8;

  int lemma1_n = 8;
  int lemma1_seeds = 1000;

  std::vector<int> thm2_l_values;
  int thm2_plans = 1000;
  int thm2_coupled_draws = 10000;
  std::uint64_t thm2_mc_samples = 100000;
  double thm2_mc_tolerance = 0.02;

  std::vector<int> onesided_n;
  int onesided_l_max = 2;

  static grid_config defaults();
  static grid_config parse( std::istream& is );
  static grid_config load( const std::filesystem::path& path );
};

/* the nine check groups, in acceptance order */
const std::vector<std::string>& all_check_groups();

/* run one named group */
std::vector<check_row> run_check_group( const std::string& group, const grid_config& cfg );

/* run every configured group (concurrently); rows come back sorted by
   (check_id, parameters) so reports are deterministic */
verification_report run_verification( const grid_config& cfg );

void write_report_csv( std::ostream& os, const verification_report& report );
void write_report_json( std::ostream& os, const verification_report& report );

} // namespace lowdeg
