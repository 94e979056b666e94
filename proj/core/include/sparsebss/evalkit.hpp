#ifndef SPARSEBSS_EVALKIT_HPP
#define SPARSEBSS_EVALKIT_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "sparsebss/datagen.hpp"
#include "sparsebss/fastica.hpp"
#include "sparsebss/types.hpp"

namespace sparsebss {

/// x / sqrt(sum x^2): unit energy, not unit rms.
/// Throws Error{zero_signal} on an all-zero input.
Eigen::RowVectorXd unit_normalize(const Eigen::RowVectorXd& signal);

/// Source-to-estimate pairing. assignment[r] is the estimate index matched
/// to source r, signs[r] the inversion correction, correlations[r] the
/// inner product of the unit-normalised rows that won the pairing.
struct MatchReport {
  std::vector<std::size_t> assignment;
  std::vector<int> signs;
  std::vector<double> correlations;
};

/// Correlates every unit-normalised source row against every estimate row
/// and assigns greedily by descending |c|, each source and estimate used
/// once. The sign of the winning correlation detects inversion.
///
/// Throws Error{dimension_mismatch} on shape mismatch and
/// Error{degenerate_row} when a row cannot be normalised.
MatchReport match_sources(const SignalMatrix& truth, const SignalMatrix& estimates);

/// RMS[n] = sqrt(mean over runs of errors(q, n)^2); rows are runs.
Eigen::RowVectorXd rms_curve(const Eigen::MatrixXd& errors);

/// Separation method under evaluation (the three phase-space detectors plus
/// the FastICA baseline).
enum class Method { mhc, global1, global2, fastica };

const char* to_string(Method method) noexcept;

struct MethodConfig {
  Method method = Method::global2;
  double vth = 0.1;
  double alpha = 1.0;
  Nonlinearity nonlinearity = Nonlinearity::gauss;
};

/// Monte Carlo RMS curves for one method: rms[source][n]. Failed runs are
/// excluded from the average and tallied (count plus per-run messages);
/// they are never silently dropped.
struct RmsReport {
  std::string scenario;
  Method method = Method::global2;
  std::uint64_t master_seed = 0;
  std::size_t runs = 0;      // attempted
  std::size_t failures = 0;  // excluded from the mean
  std::vector<std::vector<double>> rms;
  std::vector<std::pair<std::size_t, std::string>> failure_log;  // (run, message)
  std::string rng_algorithm;
};

/// Runs `runs` noisy realisations of the scenario. Per run the noise stream
/// derives deterministically from (master_seed, run), every method sees the
/// same noisy mixtures, estimates are matched to the clean sources and the
/// sign-corrected errors of the unit-normalised rows accumulate per
/// Eq-style RMS. Bit-exact for fixed inputs.
std::vector<RmsReport> monte_carlo(const Scenario& scenario,
                                   const std::vector<MethodConfig>& methods, std::size_t runs,
                                   std::uint64_t master_seed);

/// One row per sample: `sample` column, then one RMS column per
/// method x source (named like `global2_s0`).
void write_rms_csv(const std::vector<RmsReport>& reports, const std::filesystem::path& path);

}  // namespace sparsebss

#endif
