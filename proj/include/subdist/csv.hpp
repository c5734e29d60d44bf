#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "subdist/subspace.hpp"

namespace subdist::io {

/// Unreadable file, malformed CSV, ragged rows or non-finite entries.
class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One row per ambient coordinate, one column per spanning vector, decimal
/// floating point, comma separated, no header. Blank lines are skipped.
Matrix parse_matrix_csv(std::string_view text, std::string_view source = "<input>");
Matrix read_matrix_csv(const std::filesystem::path& path);

/// Reads a matrix and orthonormalizes its columns.
Subspace read_subspace_csv(const std::filesystem::path& path);

/// %.17g, so every double survives a write/read cycle unchanged.
std::string format_double(double value);

void write_matrix_csv(std::ostream& out, const Matrix& m);
void write_matrix_csv(const std::filesystem::path& path, const Matrix& m);

}  // namespace subdist::io
