#ifndef SPARSEBSS_CSV_HPP
#define SPARSEBSS_CSV_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "sparsebss/types.hpp"

namespace sparsebss {

/// Signal CSV layout: header row `ch0,ch1,...`, then one sample per line,
/// one column per channel, '.' decimal point. load(save(x)) reproduces the
/// values exactly (shortest round-trip formatting).
///
/// load throws Error{empty_file | malformed_csv(line) | non_rectangular |
/// io_error}; a leading row that does not parse as numbers is taken as the
/// header.
SignalMatrix load_csv(const std::filesystem::path& path, SignalRole role = SignalRole::mixtures);

void save_csv(const SignalMatrix& matrix, const std::filesystem::path& path);

/// Raw matrix helpers for non-signal tables (mixing matrices, traces):
/// one CSV row per matrix row, optional header.
void save_matrix_csv(const Eigen::MatrixXd& matrix, const std::filesystem::path& path,
                     const std::vector<std::string>& header = {});

Eigen::MatrixXd load_matrix_csv(const std::filesystem::path& path);

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double value);

}  // namespace sparsebss

#endif
