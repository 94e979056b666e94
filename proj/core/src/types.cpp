#include "sparsebss/types.hpp"

#include <cmath>
#include <string>

namespace sparsebss {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::non_finite: return "NonFinite";
    case ErrorCode::too_few_samples: return "TooFewSamples";
    case ErrorCode::empty_channels: return "EmptyChannels";
    case ErrorCode::rank_deficient: return "RankDeficient";
    case ErrorCode::all_rejected: return "AllRejected";
    case ErrorCode::empty_heading_set: return "EmptyHeadingSet";
    case ErrorCode::too_few_headings: return "TooFewHeadings";
    case ErrorCode::no_cluster_found: return "NoClusterFound";
    case ErrorCode::zero_average: return "ZeroAverage";
    case ErrorCode::no_defined_difference: return "NoDefinedE";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::singular_mixing: return "SingularMixing";
    case ErrorCode::not_converged: return "NotConverged";
    case ErrorCode::zero_signal: return "ZeroSignal";
    case ErrorCode::degenerate_row: return "DegenerateRow";
    case ErrorCode::overlapping_windows: return "OverlappingWindows";
    case ErrorCode::no_solo_window: return "NoSoloWindow";
    case ErrorCode::bad_scenario: return "BadScenario";
    case ErrorCode::malformed_csv: return "MalformedCsv";
    case ErrorCode::non_rectangular: return "NonRectangular";
    case ErrorCode::empty_file: return "EmptyFile";
    case ErrorCode::io_error: return "IoError";
  }
  return "UnknownError";
}

const char* to_string(SignalRole role) noexcept {
  switch (role) {
    case SignalRole::sources: return "sources";
    case SignalRole::mixtures: return "mixtures";
    case SignalRole::whitened: return "whitened";
    case SignalRole::estimates: return "estimates";
  }
  return "unknown";
}

const char* to_string(Detector detector) noexcept {
  switch (detector) {
    case Detector::mhc: return "mhc";
    case Detector::global1: return "global1";
    case Detector::global2: return "global2";
  }
  return "unknown";
}

void validate(const SignalMatrix& matrix) {
  if (matrix.channels() < 1) {
    throw Error(ErrorCode::empty_channels, "signal matrix has no channels");
  }
  if (matrix.samples() < 2) {
    throw Error(ErrorCode::too_few_samples,
                "need at least 2 samples, got " + std::to_string(matrix.samples()));
  }
  for (Eigen::Index n = 0; n < matrix.samples(); ++n) {
    for (Eigen::Index i = 0; i < matrix.channels(); ++i) {
      if (!std::isfinite(matrix.data(i, n))) {
        throw Error(ErrorCode::non_finite,
                    "channel " + std::to_string(i) + " sample " + std::to_string(n),
                    static_cast<std::size_t>(n));
      }
    }
  }
}

}  // namespace sparsebss
