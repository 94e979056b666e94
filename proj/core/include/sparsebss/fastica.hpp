#ifndef SPARSEBSS_FASTICA_HPP
#define SPARSEBSS_FASTICA_HPP

#include <cstdint>

#include "sparsebss/types.hpp"

namespace sparsebss {

enum class Nonlinearity { gauss, tanh, pow3 };

const char* to_string(Nonlinearity nonlinearity) noexcept;

struct FastIcaConfig {
  Nonlinearity nonlinearity = Nonlinearity::gauss;
  std::uint64_t seed = 1;
  int max_iter = 200;
  double tol = 1e-6;
};

/// Deflationary FastICA baseline. Subtracts the per-channel mean (kept on
/// purpose: it is what introduces correlation between sparse sources),
/// whitens via an eigendecomposition of the covariance, then extracts N
/// components by fixed-point iteration, each decorrelated against the
/// previously accepted weight vectors and accepted once successive weights
/// differ by less than tol modulo sign. Deterministic for a fixed seed.
///
/// The result carries no phase-space headings or residual trace; only
/// `estimates` and `extracted` are populated.
///
/// Throws Error{not_converged} with the component index after max_iter, and
/// Error{rank_deficient} for covariance eigenvalues below 1e-12 of the
/// largest.
SeparationResult fastica_separate(const SignalMatrix& mixtures, const FastIcaConfig& config = {});

}  // namespace sparsebss

#endif
