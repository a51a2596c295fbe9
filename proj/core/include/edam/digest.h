#ifndef EDAM_DIGEST_H_
#define EDAM_DIGEST_H_

#include <string>
#include <string_view>

namespace edam {

// Lowercase hex SHA-256.
std::string Sha256Hex(std::string_view data);
// Streams the file; throws Error(kIo) if it cannot be read.
std::string Sha256File(const std::string &path);

}  // namespace edam

#endif  // EDAM_DIGEST_H_
