#pragma once

#include <stdexcept>
#include <string>

namespace diskarea {

enum class ErrorKind {
  DegenerateLine,
  DegenerateSegment,
  InvalidNormal,
  ChordEndpointsOffCircle,
  CoincidentChordEndpoints,
  InvalidArgument,
  TooFewVertices,
  NotSimple,
  ParseError,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateLine: return "DegenerateLine";
    case ErrorKind::DegenerateSegment: return "DegenerateSegment";
    case ErrorKind::InvalidNormal: return "InvalidNormal";
    case ErrorKind::ChordEndpointsOffCircle: return "ChordEndpointsOffCircle";
    case ErrorKind::CoincidentChordEndpoints: return "CoincidentChordEndpoints";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::TooFewVertices: return "TooFewVertices";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace diskarea
