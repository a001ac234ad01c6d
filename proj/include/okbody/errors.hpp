#pragma once

#include <stdexcept>
#include <string>

namespace okb {

/// Malformed input: bad file, schema violation, precondition on user data.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The request is well formed but falls outside what the library computes
/// (e.g. base ideals of non-monomial levels).
class UnsupportedError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Always a bug or a violated
/// mathematical hypothesis, never a user error.
class InvariantError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace okb
