#ifndef EDAM_CSV_H_
#define EDAM_CSV_H_

#include <string>
#include <string_view>
#include <vector>

namespace edam {

// RFC 4180 style field splitting for a single line (quoted fields may contain
// commas and doubled quotes, not newlines). Fields are not trimmed.
std::vector<std::string> SplitCsvLine(std::string_view line);

// Quotes the field when it contains a comma, quote or leading/trailing space.
std::string CsvField(std::string_view field);

}  // namespace edam

#endif  // EDAM_CSV_H_
