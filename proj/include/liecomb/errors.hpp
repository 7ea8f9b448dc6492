// Error taxonomy shared across the library.  The CLI maps these to exit
// codes: ConfigError/PreconditionError -> 2, ResourceError -> 3.

#ifndef LIECOMB_ERRORS_HPP
#define LIECOMB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liecomb {

// invalid (series, rank) pair or malformed configuration
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// caller violated a documented precondition
class PreconditionError : public std::runtime_error {
public:
  explicit PreconditionError(const std::string& what)
      : std::runtime_error(what) {}
};

// a configured cap (crystal size, ...) was exceeded
class ResourceError : public std::runtime_error {
public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// input data failed an internal consistency check (e.g. a map that was
// claimed to be a character turned out not to be Weyl-symmetric)
class IntegrityError : public std::runtime_error {
public:
  explicit IntegrityError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace liecomb

#endif
