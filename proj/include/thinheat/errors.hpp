#pragma once

#include <stdexcept>
#include <string>

namespace thinheat {

/// A computation produced or received a non-finite value, or a numerical
/// certificate could not be met.
class numeric_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// File could not be read, written, or parsed.
class io_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace thinheat
