#pragma once

#include <stdexcept>
#include <string>

namespace gpd {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (GPD format).  Carries a 1-based location.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error(msg + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line(line),
        column(column) {}
  int line;
  int column;
};

/// A structure fails its axioms, or an operation's input fails validation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its stated preconditions.
class PreconditionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// An exhaustive search or construction was refused because the instance
/// exceeds the configured cap.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

/// Caps for the exponential parts of the library.  `max_arrows` bounds
/// exhaustive searches (isomorphisms, sections, natural transformations);
/// `max_built_arrows` bounds the arrow count of constructed groupoids
/// (square groupoids, holographs, fibred products), which routinely exceed
/// the search cap while remaining analyzable by the polynomial scans.
struct SizeGuard {
  int max_arrows = 64;
  int max_built_arrows = 2048;

  void check_search(long long arrows, const char* what) const {
    if (arrows > max_arrows)
      throw SizeGuardError(std::string(what) + " refused: " +
                           std::to_string(arrows) + " arrows exceeds cap " +
                           std::to_string(max_arrows));
  }
  void check_build(long long arrows, const char* what) const {
    if (arrows > max_built_arrows)
      throw SizeGuardError(std::string(what) + " refused: would build " +
                           std::to_string(arrows) + " arrows, cap " +
                           std::to_string(max_built_arrows));
  }
};

}  // namespace gpd
