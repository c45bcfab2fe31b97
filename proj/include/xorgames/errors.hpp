#ifndef XORGAMES_ERRORS_HPP
#define XORGAMES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace xorgames {

struct MalformedGame : std::runtime_error {
  explicit MalformedGame(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : std::runtime_error {
  explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct OverflowOrUnderflow : std::runtime_error {
  explicit OverflowOrUnderflow(const std::string& what) : std::runtime_error(what) {}
};

struct ToleranceNotReached : std::runtime_error {
  explicit ToleranceNotReached(const std::string& what) : std::runtime_error(what) {}
};

struct TooLarge : std::runtime_error {
  explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct DegeneratePolynomial : std::runtime_error {
  explicit DegeneratePolynomial(const std::string& what) : std::runtime_error(what) {}
};

struct PreconditionViolated : std::runtime_error {
  explicit PreconditionViolated(const std::string& what) : std::runtime_error(what) {}
};

struct MissingColumns : std::runtime_error {
  explicit MissingColumns(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace xorgames

#endif
