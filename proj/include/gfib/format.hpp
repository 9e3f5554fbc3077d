#pragma once

#include <string>

#include "gfib/interval.hpp"

namespace gfib {

/// Fixed-point decimal rendering of a Real with exactly `decimals` fraction
/// digits. The stored binary value is treated exactly (it is a dyadic
/// rational), so the result is deterministic down to the byte.
/// truncate = true chops toward zero (the convention used when reproducing
/// truncated reference tables); otherwise rounds half away from zero.
std::string decimal_fixed(const Real& x, int decimals, bool truncate);

/// Scientific-notation string carrying enough digits to recover the binary
/// value exactly at its own precision (round-trip safe).
std::string to_scientific(const Real& x);

/// Parses a decimal/scientific string into a Real at the given precision
/// (round to nearest). Throws std::invalid_argument on malformed input.
Real parse_real(const std::string& s, mpfr_prec_t prec);

}  // namespace gfib
