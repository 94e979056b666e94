#include "sparsebss/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

namespace sparsebss {

std::string format_double(double value) {
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

namespace {

bool parse_double(const std::string& token, double& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  // tolerate surrounding spaces
  while (first < last && (*first == ' ' || *first == '\t')) ++first;
  while (last > first && (last[-1] == ' ' || last[-1] == '\t' || last[-1] == '\r')) --last;
  if (first == last) return false;
  const auto result = std::from_chars(first, last, out);
  return result.ec == std::errc{} && result.ptr == last;
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> tokens;
  std::string token;
  std::istringstream stream(line);
  while (std::getline(stream, token, ',')) tokens.push_back(token);
  if (!line.empty() && line.back() == ',') tokens.emplace_back();
  return tokens;
}

// All data rows of the file, rectangular; a non-numeric first line is
// treated as the header and skipped.
std::vector<std::vector<double>> read_rows(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) {
    throw Error(ErrorCode::io_error, "cannot open " + path.string());
  }
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_number = 0;
  bool first_content_line = true;
  while (std::getline(file, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> tokens = split_line(line);
    std::vector<double> row(tokens.size());
    bool ok = true;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (!parse_double(tokens[i], row[i])) {
        ok = false;
        break;
      }
    }
    if (!ok) {
      if (first_content_line) {
        first_content_line = false;
        continue;  // header row
      }
      throw Error(ErrorCode::malformed_csv, "line " + std::to_string(line_number) + " of " +
                                                path.string(),
                  line_number);
    }
    first_content_line = false;
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw Error(ErrorCode::non_rectangular,
                  "line " + std::to_string(line_number) + " has " + std::to_string(row.size()) +
                      " columns, expected " + std::to_string(rows.front().size()),
                  line_number);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw Error(ErrorCode::empty_file, path.string() + " has no data rows");
  }
  return rows;
}

void write_rows(const Eigen::MatrixXd& matrix, const std::filesystem::path& path,
                const std::vector<std::string>& header) {
  std::ofstream file(path, std::ios::trunc);
  if (!file) {
    throw Error(ErrorCode::io_error, "cannot write " + path.string());
  }
  if (!header.empty()) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) file << ',';
      file << header[i];
    }
    file << '\n';
  }
  for (Eigen::Index r = 0; r < matrix.rows(); ++r) {
    for (Eigen::Index c = 0; c < matrix.cols(); ++c) {
      if (c) file << ',';
      file << format_double(matrix(r, c));
    }
    file << '\n';
  }
  if (!file) {
    throw Error(ErrorCode::io_error, "write failed for " + path.string());
  }
}

}  // namespace

SignalMatrix load_csv(const std::filesystem::path& path, SignalRole role) {
  const std::vector<std::vector<double>> rows = read_rows(path);
  const auto n_samples = static_cast<Eigen::Index>(rows.size());
  const auto n_channels = static_cast<Eigen::Index>(rows.front().size());

  SignalMatrix matrix;
  matrix.role = role;
  matrix.data.resize(n_channels, n_samples);  // one file row per sample
  for (Eigen::Index n = 0; n < n_samples; ++n) {
    for (Eigen::Index i = 0; i < n_channels; ++i) {
      matrix.data(i, n) = rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
    }
  }
  return matrix;
}

void save_csv(const SignalMatrix& matrix, const std::filesystem::path& path) {
  std::vector<std::string> header(static_cast<std::size_t>(matrix.channels()));
  for (std::size_t i = 0; i < header.size(); ++i) header[i] = "ch" + std::to_string(i);
  write_rows(matrix.data.transpose(), path, header);
}

void save_matrix_csv(const Eigen::MatrixXd& matrix, const std::filesystem::path& path,
                     const std::vector<std::string>& header) {
  write_rows(matrix, path, header);
}

Eigen::MatrixXd load_matrix_csv(const std::filesystem::path& path) {
  const std::vector<std::vector<double>> rows = read_rows(path);
  Eigen::MatrixXd matrix(static_cast<Eigen::Index>(rows.size()),
                         static_cast<Eigen::Index>(rows.front().size()));
  for (Eigen::Index r = 0; r < matrix.rows(); ++r) {
    for (Eigen::Index c = 0; c < matrix.cols(); ++c) {
      matrix(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
  }
  return matrix;
}

}  // namespace sparsebss
