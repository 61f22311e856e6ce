#pragma once

#include <stdexcept>
#include <string>

namespace cliffpoint {

/// Base class for all toolkit errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid mathematical input (nonpositive log argument, a <= 0 box, ...).
struct domain_error : error {
    using error::error;
};

/// A result cannot be certified at the working precision; raise digits/K/J.
struct precision_error : error {
    using error::error;
};

/// No candidate index satisfied the four crossing checks.
struct checks_failed : error {
    using error::error;
};

/// Request exceeds a hard feasibility guard (term counts, sequence length).
struct feasibility_error : error {
    using error::error;
};

/// Sieve cache file could not be read, written, or validated.
struct cache_error : error {
    using error::error;
};

/// Bad user-facing input (CLI arguments, residue not coprime, ...).
struct usage_error : error {
    using error::error;
};

} // namespace cliffpoint
