#pragma once

#include <stdexcept>
#include <string>

namespace gfib {

/// Default working precision for certified computations, in bits.
inline constexpr long kDefaultPrecisionBits = 128;

/// Hard default ceiling on any precision request (1 Mi bits). Overridable
/// through set_max_precision_bits / the GFIB_MAX_PRECISION_BITS variable.
inline constexpr long kDefaultMaxPrecisionBits = 1'048'576;

/// Current precision ceiling in bits.
long max_precision_bits();

/// Replaces the precision ceiling. Must be >= 8.
void set_max_precision_bits(long bits);

/// A computation needed more bits than the configured ceiling allows.
/// This signals a configuration problem, not a mathematical failure.
class PrecisionCeilingError : public std::runtime_error {
public:
    explicit PrecisionCeilingError(const std::string& what)
        : std::runtime_error(what) {}
};

/// An interval became too wide to decide a sign (e.g. a denominator
/// enclosing zero). Retry with a finer root enclosure.
class PrecisionRefinementNeeded : public std::runtime_error {
public:
    explicit PrecisionRefinementNeeded(const std::string& what)
        : std::runtime_error(what) {}
};

/// Guard against combinatorial explosion in exhaustive enumeration.
class EnumerationCapError : public std::runtime_error {
public:
    explicit EnumerationCapError(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace gfib
