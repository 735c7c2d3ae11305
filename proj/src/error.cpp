#include "mapforge/error.hpp"

#include <sstream>

namespace mapforge {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidCoordinate: return "InvalidCoordinate";
    case ErrorCode::ProjectionDomain: return "ProjectionDomain";
    case ErrorCode::UnknownFormat: return "UnknownFormat";
    case ErrorCode::MissingField: return "MissingField";
    case ErrorCode::MalformedDocument: return "MalformedDocument";
    case ErrorCode::ImageMetaMismatch: return "ImageMetaMismatch";
    case ErrorCode::UnsupportedImageEncoding: return "UnsupportedImageEncoding";
    case ErrorCode::DuplicateNode: return "DuplicateNode";
    case ErrorCode::DanglingEdge: return "DanglingEdge";
    case ErrorCode::UnknownNodeInConnection: return "UnknownNodeInConnection";
    case ErrorCode::DanglingNodeRef: return "DanglingNodeRef";
    case ErrorCode::LaneIndexOutOfRange: return "LaneIndexOutOfRange";
    case ErrorCode::UnstyledReference: return "UnstyledReference";
    case ErrorCode::NoFence: return "NoFence";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::UnknownLevel: return "UnknownLevel";
    case ErrorCode::NoPlan: return "NoPlan";
    case ErrorCode::MissingInput: return "MissingInput";
    case ErrorCode::SampleTooSmall: return "SampleTooSmall";
    case ErrorCode::Contradiction: return "Contradiction";
    case ErrorCode::RootNotEmpty: return "RootNotEmpty";
    case ErrorCode::NotAPackage: return "NotAPackage";
    case ErrorCode::NetworkError: return "NetworkError";
    case ErrorCode::ZoomOutOfRange: return "ZoomOutOfRange";
  }
  return "UnknownError";
}

std::string DocPosition::describe() const {
  std::ostringstream out;
  bool have = false;
  if (!path.empty()) {
    out << path;
    have = true;
  }
  if (line >= 0) {
    if (have) out << ", ";
    out << "line " << (line + 1);
    if (column >= 0) out << ", column " << (column + 1);
    have = true;
  }
  return out.str();
}

namespace {

std::string compose(ErrorCode code, const std::string& message, const DocPosition* pos) {
  std::ostringstream out;
  out << to_string(code) << ": " << message;
  if (pos != nullptr) {
    const std::string where = pos->describe();
    if (!where.empty()) out << " (" << where << ")";
  }
  return out.str();
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(compose(code, message, nullptr)), code_(code) {}

Error::Error(ErrorCode code, const std::string& message, DocPosition position)
    : std::runtime_error(compose(code, message, &position)),
      code_(code),
      position_(std::move(position)) {}

}  // namespace mapforge
