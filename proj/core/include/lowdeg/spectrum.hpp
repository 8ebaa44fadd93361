#pragma once

#include "lowdeg/boolfn.hpp"
#include "lowdeg/fraction.hpp"

#include <cstdint>
#include <vector>

namespace lowdeg
{

/*! \brief Integer-scaled Fourier spectrum of a Boolean function.

  coeff(S) = 2^n * f_hat(S) = sum_x f(x) chi_S(x), indexed by subset bitmask.
  For a +/-1 valued source function the squared coefficients sum to 2^{2n}
  exactly (integer Parseval), so everything here is integer arithmetic with
  no tolerance anywhere.
*/
class fourier_spectrum
{
public:
  fourier_spectrum( int n, std::vector<std::int64_t> coeffs );

  int arity() const { return n_; }
  std::uint32_t size() const { return std::uint32_t( 1 ) << n_; }

  std::int64_t coeff( std::uint32_t subset ) const { return coeffs_[subset]; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  /* f_hat(S) = coeff(S) / 2^n as an exact fraction */
  dyadic coefficient_fraction( std::uint32_t subset ) const;

  bool operator==( const fourier_spectrum& other ) const = default;

private:
  int n_;
  std::vector<std::int64_t> coeffs_;
};

/* exact fast transform, O(n 2^n) integer butterflies */
fourier_spectrum walsh_hadamard( const boolean_function& f );

/* exact inverse; throws not_boolean if any reconstructed value is not +/-1 */
boolean_function inverse_walsh_hadamard( const fourier_spectrum& spec );

/* max |S| with coeff(S) != 0; constants have degree 0; all-zero spectra are
   rejected (no +/-1 function has one) */
int fourier_degree( const fourier_spectrum& spec );

/* sum of squared coefficients; 2^{2n} exactly for a +/-1 source */
std::int64_t parseval_sum( const fourier_spectrum& spec );

/* sum_{|S| > d} f_hat(S)^2, exact */
dyadic parseval_tail( const fourier_spectrum& spec, int degree_threshold );

/* 1/4 * parseval_tail: a lower bound on the Hamming distance from the
   source function to every Boolean function of degree <= d */
dyadic lowdeg_distance_lower_bound( const fourier_spectrum& spec, int degree_threshold );

} // namespace lowdeg
