#pragma once

#include <stdexcept>
#include <string>

namespace qsigma {

/// Base of every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input: bad indices, unparsable text,
/// mismatched arities, a presheaf that fails its functoriality audit.
class InputError : public Error
{
public:
  enum class Kind {
    Parse,
    InvalidMorphism,
    IndexOutOfRange,
    CompositionMismatch,
    NotEpi,
    BadDimension,
    TruncationMismatch,
    InvalidPresheaf,
    SiteMismatch,
  };

  InputError(Kind kind, std::string const &what)
  : Error(what), _kind(kind)
  {}

  Kind kind() const { return _kind; }

private:
  Kind _kind;
};

/// A configured size limit would be exceeded.
class ResourceBound : public Error
{
public:
  using Error::Error;
};

} // namespace qsigma
