#pragma once

#include <stdexcept>
#include <string>

namespace zetalab {

// Base of every error the library raises. The CLI maps all of these to exit 2.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside a table or cap (sieve range, memory cap).
class bounds_error : public error {
 public:
  using error::error;
};

// Argument outside the region where an evaluator is defined or validated.
class domain_error : public error {
 public:
  using error::error;
};

class pole_error : public domain_error {
 public:
  using domain_error::domain_error;
};

// Evaluation is possible but ill-conditioned on this path; use another evaluator.
class conditioning_error : public domain_error {
 public:
  using domain_error::domain_error;
};

// Requested tolerance is below what double precision can deliver.
class precision_error : public domain_error {
 public:
  using domain_error::domain_error;
};

// Bisection lost its sign change or the refined point fails its residual check.
class refinement_error : public error {
 public:
  using error::error;
};

// Malformed request (bad grid, unknown claim, unparsable number).
class usage_error : public error {
 public:
  using error::error;
};

}  // namespace zetalab
