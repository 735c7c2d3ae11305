#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace mapforge {

enum class ErrorCode {
  InvalidArgument,
  InvalidCoordinate,
  ProjectionDomain,
  UnknownFormat,
  MissingField,
  MalformedDocument,
  ImageMetaMismatch,
  UnsupportedImageEncoding,
  DuplicateNode,
  DanglingEdge,
  UnknownNodeInConnection,
  DanglingNodeRef,
  LaneIndexOutOfRange,
  UnstyledReference,
  NoFence,
  EmptyGraph,
  UnknownLevel,
  NoPlan,
  MissingInput,
  SampleTooSmall,
  Contradiction,
  RootNotEmpty,
  NotAPackage,
  NetworkError,
  ZoomOutOfRange,
};

const char* to_string(ErrorCode code);

/// Location of the offending element within a source document.
/// Lines and columns are 0-based; -1 means unknown. `path` is a
/// slash-joined key path such as "nodes/2/node/name".
struct DocPosition {
  int line = -1;
  int column = -1;
  std::string path;

  std::string describe() const;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  Error(ErrorCode code, const std::string& message, DocPosition position);

  ErrorCode code() const noexcept { return code_; }
  const std::optional<DocPosition>& position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<DocPosition> position_;
};

}  // namespace mapforge
