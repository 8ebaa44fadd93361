#pragma once

#include "lowdeg/boolfn.hpp"
#include "lowdeg/rng.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace lowdeg
{

/* answers a query point with the target value, -1 or +1 */
using query_oracle = std::function<int( std::uint32_t )>;

/*! \brief A query-based testing algorithm.

  A tester is deterministic given its random stream and the sequence of
  answers it has seen; adaptivity is allowed (the next query may depend on
  earlier answers).  It never issues more than query_budget() queries.
*/
class tester
{
public:
  virtual ~tester() = default;

  virtual int arity() const = 0;
  virtual std::uint64_t query_budget() const = 0;

  /* true = accept */
  virtual bool run( const query_oracle& answer, splitmix64& rng ) const = 0;
};

struct transcript
{
  std::uint64_t bits_exchanged = 0;
  std::uint64_t queries_made = 0;
  bool accepted = false;
  std::uint64_t seed = 0;
};

/* Compiles the tester into a two-party protocol: Alice holds f, Bob holds g,
   each query x costs exactly two bits (Alice sends f(x); Bob answers with
   h(x) = f(x) g(x) chi_{[n]\[l]}(x)).  Shared randomness is the seed.  The
   final verdict announcement is not counted, which realizes the 2t bound
   with equality. */
transcript compile_and_run( const tester& t, const boolean_function& f,
                            const boolean_function& g, int l, std::uint64_t seed );

/* the same tester run directly against a single function */
struct run_result
{
  std::uint64_t queries_made = 0;
  bool accepted = false;
};
run_result run_direct( const tester& t, const boolean_function& h, std::uint64_t seed );

/*! \brief One-sided baseline tester for Fourier degree <= k.

  Each round picks a uniformly random (k+1)-coordinate subcube and accepts
  iff the parity-signed sum of the function over it vanishes.  Degree <= k
  functions pass every round; a nonvanishing (k+1)-fold derivative on a
  sampled subcube is rejected.
*/
class derivative_tester : public tester
{
public:
  derivative_tester( int n, int k, std::uint64_t rounds );

  int arity() const override { return n_; }
  std::uint64_t query_budget() const override
  {
    return rounds_ * ( std::uint64_t( 1 ) << ( k_ + 1 ) );
  }
  bool run( const query_oracle& answer, splitmix64& rng ) const override;

  int degree_bound() const { return k_; }

  /* the signed subcube sum for explicit free coordinates and base point */
  static std::int64_t signed_subcube_sum( const query_oracle& answer,
                                          std::span<const int> free_coords,
                                          std::uint32_t base );

private:
  int n_;
  int k_;
  std::uint64_t rounds_;
};

/* true iff the signed sum vanishes on EVERY (k+1)-subcube at every base
   point: exhausts the tester's randomness (small n only) */
bool derivative_tester_always_accepts( const boolean_function& f, int k );

struct query_account_row
{
  std::uint64_t seed = 0;
  std::uint64_t queries = 0;
  bool accepted = false;
};

struct query_account_summary
{
  std::vector<query_account_row> rows;
  double acceptance_frequency = 0.0;
  double ci95_low = 0.0;
  double ci95_high = 0.0;
};

/* per-seed behavior of a tester on a fixed target */
query_account_summary query_account( const tester& t, const boolean_function& target,
                                     std::span<const std::uint64_t> seeds );

} // namespace lowdeg
