#include "edam/error.h"

#include <utility>

namespace edam {
namespace {

std::string Located(const std::string &message, const std::string &path,
                    size_t line, const std::string &field) {
  std::string out = path;
  if (line > 0) out += ":" + std::to_string(line);
  if (!out.empty()) out += ": ";
  if (!field.empty()) out += "field '" + field + "': ";
  return out + message;
}

}  // namespace

const char *ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUsage: return "usage";
    case ErrorKind::kData: return "data";
    case ErrorKind::kIo: return "io";
    case ErrorKind::kInvariant: return "invariant";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(message), kind_(kind) {}

Error::Error(ErrorKind kind, const std::string &message, std::string path,
             size_t line, std::string field)
    : std::runtime_error(Located(message, path, line, field)),
      kind_(kind),
      path_(std::move(path)),
      line_(line),
      field_(std::move(field)) {}

}  // namespace edam
