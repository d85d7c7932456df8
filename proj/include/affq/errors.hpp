#pragma once

#include <stdexcept>
#include <string>

namespace affq {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* Malformed or out-of-contract input (JSON, CLI args, dimension mismatches). */
struct ParseError : Error {
  using Error::Error;
};

/* The underlying graph is not extended Dynkin / the operation needs affineness. */
struct NotAffine : Error {
  using Error::Error;
};

/* A randomized exact search exhausted its retry budget; a larger field or a
   different seed may succeed.  Never returned as a silently wrong answer. */
struct NeedsLargerField : Error {
  using Error::Error;
};

/* An enumeration would exceed the configured cap. */
struct CombinatorialExplosion : Error {
  using Error::Error;
};

/* A certified internal invariant failed; indicates a bug, not bad input. */
struct InternalError : Error {
  using Error::Error;
};

}  // namespace affq
