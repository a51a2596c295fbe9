#ifndef EDAM_ERROR_H_
#define EDAM_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edam {

// Broad classes of failure. The CLI maps kUsage to exit status 1 and
// everything else to exit status 2.
enum class ErrorKind {
  kUsage,      // bad flags, bad config, missing paths
  kData,       // malformed or inconsistent input data
  kIo,         // unreadable or unwritable file
  kInvariant,  // internal contract breach (e.g. explanation without evidence)
};

const char *ErrorKindName(ErrorKind kind);

// Structured error carrying an optional source location inside a data file.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &message);
  Error(ErrorKind kind, const std::string &message, std::string path,
        size_t line, std::string field = {});

  ErrorKind kind() const { return kind_; }
  const std::string &path() const { return path_; }
  size_t line() const { return line_; }
  const std::string &field() const { return field_; }

 private:
  ErrorKind kind_;
  std::string path_;
  size_t line_ = 0;
  std::string field_;
};

inline Error UsageError(const std::string &message) {
  return Error(ErrorKind::kUsage, message);
}
inline Error DataError(const std::string &message) {
  return Error(ErrorKind::kData, message);
}
inline Error IoError(const std::string &message) {
  return Error(ErrorKind::kIo, message);
}
inline Error InvariantError(const std::string &message) {
  return Error(ErrorKind::kInvariant, message);
}

}  // namespace edam

#endif  // EDAM_ERROR_H_
