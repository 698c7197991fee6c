#pragma once

#include <stdexcept>
#include <string>

namespace qmusik {

/// Bad input data: non-finite samples, malformed or incomplete value
/// tables, unknown registry names.
class DataError : public std::runtime_error {
  public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// A reference integrator failed to reach the requested accuracy within
/// its evaluation budget. Never silently degraded into a wrong value.
class OracleError : public std::runtime_error {
  public:
    explicit OracleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qmusik
