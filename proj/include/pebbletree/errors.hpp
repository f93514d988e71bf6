#ifndef PEBBLETREE_ERRORS_HPP
#define PEBBLETREE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pebbletree {

/** Base class for all errors raised by this library. */
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/** A requested computation exceeds the configured enumeration cap. */
class CapExceeded : public Error {
  public:
    using Error::Error;
};

/** Malformed serialized input. `offset` is the 0-based byte of the failure. */
class ParseError : public Error {
  public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what), offset(offset) {}
    std::size_t offset;
};

class NotUnbalanced : public Error {
  public:
    using Error::Error;
};
class ColorInUse : public Error {
  public:
    using Error::Error;
};
class UnbalancedInput : public Error {
  public:
    using Error::Error;
};
class PreconditionFailed : public Error {
  public:
    using Error::Error;
};
class WrongParams : public Error {
  public:
    using Error::Error;
};
class BadSignature : public Error {
  public:
    using Error::Error;
};
class BadPath : public Error {
  public:
    using Error::Error;
};
class NotMaximal : public Error {
  public:
    using Error::Error;
};
class NotAdjacent : public Error {
  public:
    using Error::Error;
};
class IndexOutOfRange : public Error {
  public:
    using Error::Error;
};
class HypothesisViolated : public Error {
  public:
    using Error::Error;
};
class SingularSystem : public Error {
  public:
    using Error::Error;
};
class CertificationFailed : public Error {
  public:
    using Error::Error;
};

}  // namespace pebbletree

#endif  // PEBBLETREE_ERRORS_HPP
