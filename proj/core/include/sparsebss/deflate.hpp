#ifndef SPARSEBSS_DEFLATE_HPP
#define SPARSEBSS_DEFLATE_HPP

#include "sparsebss/types.hpp"

namespace sparsebss {

struct SeparationConfig {
  double vth = 0.1;   // velocity acceptance threshold, re-applied per iteration
  double alpha = 1.0; // global1 cluster threshold scale
};

/// Component of the whitened data along a principal direction,
/// s[n] = direction . e[n].
Eigen::RowVectorXd project_source(const SignalMatrix& whitened, const PrincipalHeading& heading);

/// Remove the detected source's contribution:
/// e'[n] = e[n] - (direction . e[n]) direction. The result is orthogonal to
/// the direction at every sample.
SignalMatrix subtract_source(const SignalMatrix& whitened, const PrincipalHeading& heading);

/// Deflationary extraction: whiten once, then per iteration rebuild the
/// velocity field and headings from the current residual (so the threshold
/// tracks the shrinking amplitudes), detect one principal heading, project
/// the estimate out and subtract it. Runs N iterations unless the residual
/// energy falls below 1e-12 of its initial value first; remaining estimate
/// rows stay zero. A detector failure stops the loop and returns the
/// partial result with halted_at/halt_reason set instead of throwing.
SeparationResult separate(const SignalMatrix& mixtures, Detector detector,
                          const SeparationConfig& config = {});

}  // namespace sparsebss

#endif
