#ifndef SPARSEBSS_ERROR_HPP
#define SPARSEBSS_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace sparsebss {

enum class ErrorCode {
  // model
  non_finite,
  too_few_samples,
  empty_channels,
  // preprocess
  rank_deficient,
  all_rejected,
  empty_heading_set,
  // detectors
  too_few_headings,
  no_cluster_found,
  zero_average,
  no_defined_difference,
  // deflation / mixing
  dimension_mismatch,
  singular_mixing,
  // fastica
  not_converged,
  // evaluation
  zero_signal,
  degenerate_row,
  // generators
  overlapping_windows,
  no_solo_window,
  bad_scenario,
  // csv / io
  malformed_csv,
  non_rectangular,
  empty_file,
  io_error,
};

const char* to_string(ErrorCode code) noexcept;

/// Library-wide exception. `index()` carries the offending sample, channel,
/// component or line number where the error code calls for one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  Error(ErrorCode code, const std::string& message, std::size_t index)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

}  // namespace sparsebss

#endif
