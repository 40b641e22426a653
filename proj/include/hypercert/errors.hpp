#pragma once

#include <stdexcept>
#include <string>

namespace hypercert {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Division by an interval containing zero, log of a nonpositive interval, ...
struct interval_domain_error : error {
  using error::error;
};

// A determinant interval containing zero (or below the determinant floor):
// the invertible-derivative premise cannot be verified.
struct singular_matrix_error : error {
  using error::error;
};

struct unsupported_error : error {
  using error::error;
};

struct usage_error : error {
  using error::error;
};

// A loaded certificate document violates one of its invariants.
struct certificate_error : error {
  using error::error;
};

}  // namespace hypercert
