// errors.hpp — exception types thrown across the library.

#pragma once

#include <stdexcept>
#include <string>

namespace polyent {

class Error : public std::runtime_error {
  public:
    explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

// linalg
class NotHermitian : public Error {
  public:
    explicit NotHermitian(const std::string &msg) : Error(msg) {}
};
class NotPSD : public Error {
  public:
    explicit NotPSD(const std::string &msg) : Error(msg) {}
};
class NoConvergence : public Error {
  public:
    explicit NoConvergence(const std::string &msg) : Error(msg) {}
};
class BadIndex : public Error {
  public:
    explicit BadIndex(const std::string &msg) : Error(msg) {}
};
class WrongDimension : public Error {
  public:
    explicit WrongDimension(const std::string &msg) : Error(msg) {}
};

// states
class NotNormalized : public Error {
  public:
    explicit NotNormalized(const std::string &msg) : Error(msg) {}
};
class BadParameter : public Error {
  public:
    explicit BadParameter(const std::string &msg) : Error(msg) {}
};
class InvariantViolation : public Error {
  public:
    explicit InvariantViolation(const std::string &msg) : Error(msg) {}
};
class ParseError : public Error {
  public:
    explicit ParseError(const std::string &msg) : Error(msg) {}
};

// measures / exponents
class DomainError : public Error {
  public:
    explicit DomainError(const std::string &msg) : Error(msg) {}
};
class UnsupportedGlobalMeasure : public Error {
  public:
    explicit UnsupportedGlobalMeasure(const std::string &msg) : Error(msg) {}
};
class DegenerateGlobal : public Error {
  public:
    explicit DegenerateGlobal(const std::string &msg) : Error(msg) {}
};
class HypothesisNotMet : public Error {
  public:
    explicit HypothesisNotMet(const std::string &msg) : Error(msg) {}
};
class NoSignChange : public Error {
  public:
    explicit NoSignChange(const std::string &msg) : Error(msg) {}
};

// roof
class RankTooHigh : public Error {
  public:
    explicit RankTooHigh(const std::string &msg) : Error(msg) {}
};

} // namespace polyent
