#pragma once

#include <stdexcept>

namespace lowdeg
{

struct error : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

/* bad parameter, arity mismatch, subset out of range, rejected input */
struct invalid_argument : error
{
  using error::error;
};

/* a DISJ promise does not hold on the given instance */
struct promise_violation : error
{
  using error::error;
};

/* inverse transform reconstructed a value outside {-1,+1} */
struct not_boolean : error
{
  using error::error;
};

/* no unique strict-maximum block in a character family */
struct ambiguous_heavy_block : error
{
  using error::error;
};

/* padding gadget would be invalid or could create pad-pad intersections */
struct formula_invalid : error
{
  using error::error;
};
struct unsafe_padding : error
{
  using error::error;
};

/* a tester exceeded its declared query budget */
struct protocol_abort : error
{
  using error::error;
};

/* malformed input file */
struct parse_error : error
{
  using error::error;
};

/* an identity that is re-checked internally failed; indicates a bug */
struct verification_failure : error
{
  using error::error;
};

} // namespace lowdeg
