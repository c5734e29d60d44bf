#include "subdist/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace subdist::io {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string where(std::string_view source, std::size_t line) {
  return std::string(source) + ":" + std::to_string(line);
}

double parse_cell(std::string_view cell, std::string_view source, std::size_t line) {
  cell = trim(cell);
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size()) {
    throw FileError(where(source, line) + ": cannot parse '" + std::string(cell) +
                    "' as a number");
  }
  if (!std::isfinite(value)) {
    throw FileError(where(source, line) + ": non-finite entry '" + std::string(cell) + "'");
  }
  return value;
}

}  // namespace

Matrix parse_matrix_csv(std::string_view text, std::string_view source) {
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;

    std::vector<double> row;
    for (;;) {
      const auto comma = line.find(',');
      row.push_back(parse_cell(line.substr(0, comma), source, line_no));
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw FileError(where(source, line_no) + ": expected " +
                      std::to_string(rows.front().size()) + " columns, found " +
                      std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw FileError(std::string(source) + ": no data");

  Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows[0].size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  return m;
}

Matrix read_matrix_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError(path.string() + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix_csv(buffer.str(), path.string());
}

Subspace read_subspace_csv(const std::filesystem::path& path) {
  return orthonormal_basis(read_matrix_csv(path));
}

std::string format_double(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value + 0.0);  // no "-0"
  return buf;
}

void write_matrix_csv(std::ostream& out, const Matrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ',';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
}

void write_matrix_csv(const std::filesystem::path& path, const Matrix& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError(path.string() + ": cannot open for writing");
  write_matrix_csv(out, m);
  if (!out) throw FileError(path.string() + ": write failed");
}

}  // namespace subdist::io
