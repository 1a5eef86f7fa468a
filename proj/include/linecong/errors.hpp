#pragma once

#include <stdexcept>

namespace linecong {

// Raised when a randomized construction exhausts its retry budget because the
// input tensor (or a chosen center) is degenerate.
class genericity_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Raised when a projection center lies on the variety it should miss.
class center_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class parse_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace linecong
