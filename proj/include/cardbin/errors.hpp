#pragma once

#include <stdexcept>
#include <string>

namespace cardbin {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameter outside the documented range (eps, delta, N, ell, k).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Text that does not conform to the instance/packing/trace formats.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A packing that references item indices outside the instance.
class MalformedPacking : public Error {
 public:
  using Error::Error;
};

/// Inputs that disagree with each other, e.g. a packing FF would not produce.
class InconsistentInput : public Error {
 public:
  using Error::Error;
};

/// Valid parameters for which an algorithm is deliberately not defined.
class UnsupportedParameter : public Error {
 public:
  using Error::Error;
};

/// Weight regimes whose bound is not instance-checkable.
class UnsupportedVerification : public Error {
 public:
  using Error::Error;
};

}  // namespace cardbin
