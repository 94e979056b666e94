#ifndef SPARSEBSS_TYPES_HPP
#define SPARSEBSS_TYPES_HPP

#include <Eigen/Dense>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sparsebss/error.hpp"

namespace sparsebss {

/// Provenance of a SignalMatrix within the separation pipeline.
enum class SignalRole { sources, mixtures, whitened, estimates };

const char* to_string(SignalRole role) noexcept;

/// N channels by M samples of real-valued time series. Channels are rows
/// everywhere in this library. Construction is unchecked; call validate()
/// at pipeline boundaries.
struct SignalMatrix {
  Eigen::MatrixXd data;  // channels x samples
  SignalRole role = SignalRole::mixtures;

  Eigen::Index channels() const { return data.rows(); }
  Eigen::Index samples() const { return data.cols(); }
};

/// Throws Error{non_finite | too_few_samples | empty_channels} unless all
/// SignalMatrix invariants hold (finite values, N >= 1, M >= 2).
void validate(const SignalMatrix& matrix);

/// Square mixing coefficients A_ij. Must be nonsingular when used to mix;
/// |det| <= 1e-12 counts as singular.
struct MixingMatrix {
  Eigen::MatrixXd entries;
};

/// Linear transform relating whitened channels to the matrix they were
/// whitened from (E = entries * Z).
struct WhiteningMatrix {
  Eigen::MatrixXd entries;
};

/// Per-sample difference vectors of a whitened matrix plus the acceptance
/// mask from thresholding. One column per sample step: column n holds
/// e[n+1] - e[n], so an M-sample signal yields M-1 columns.
struct VelocityField {
  Eigen::MatrixXd vectors;     // channels x (M-1)
  std::vector<bool> accepted;  // one flag per column
  double vth = 0.0;            // threshold fraction in [0, 1)
  double vmax = 0.0;           // max |v[n]| over all steps
  std::size_t signal_samples = 0;  // M of the originating signal

  Eigen::Index steps() const { return vectors.cols(); }
};

/// One unit heading vector with the velocity-sample index it came from.
struct Heading {
  std::size_t index = 0;
  Eigen::VectorXd direction;
};

/// Unit heading vectors at accepted sample indices, ascending by index.
struct HeadingSet {
  std::vector<Heading> entries;

  std::size_t size() const { return entries.size(); }
  const Heading& operator[](std::size_t position) const { return entries[position]; }
};

enum class Detector { mhc, global1, global2 };

const char* to_string(Detector detector) noexcept;

/// A detected principal direction in phase space plus its provenance.
/// `weight` is the summed cluster magnitude for averaging detectors and 0
/// for single-heading detectors.
struct PrincipalHeading {
  Eigen::VectorXd direction;  // unit norm
  Detector detector = Detector::mhc;
  std::vector<std::size_t> support;  // contributing velocity-sample indices
  double weight = 0.0;
};

/// Output of a deflationary separation run.
///
/// `estimates` always has one row per input channel, in extraction order;
/// rows past the last completed iteration are zero. `residual_energy[0]`
/// is the Frobenius norm of the whitened matrix before any extraction and
/// each later entry is the norm after one subtraction. `halted_at` is set
/// only when a detector failed at that iteration; `halt_reason` carries
/// the message.
struct SeparationResult {
  SignalMatrix estimates;
  std::vector<PrincipalHeading> headings;
  std::vector<double> residual_energy;
  std::size_t extracted = 0;
  std::optional<std::size_t> halted_at;
  std::string halt_reason;
};

}  // namespace sparsebss

#endif
