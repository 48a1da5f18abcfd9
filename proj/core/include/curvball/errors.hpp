#pragma once

#include <stdexcept>
#include <string>

namespace curvball {

/// Base class for every error raised by the library.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegeneratePatch : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class InvalidParameter : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class InvalidRadius : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};

class NonpositiveRadius : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};

class NonRevolvable : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};

class SelfIntersecting : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};

class StitchMismatch : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class NotWatertight : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class OriginOnSurface : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class ProjectionUndefined : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class PatchBoundaryUnstitched : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class PreconditionFailed : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class GeometryOverlap : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class NoFeasibleStart : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// Malformed surface spec or config file; carries a 1-based location.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& message, int line, int column)
      : std::runtime_error(formatted(message, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string formatted(const std::string& message, int line, int column) {
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
  }

  int line_;
  int column_;
};

}  // namespace curvball
