#ifndef SPARSEBSS_DATAGEN_HPP
#define SPARSEBSS_DATAGEN_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sparsebss/types.hpp"

namespace sparsebss {

/// Half-open sample range [first, last).
struct IndexRange {
  std::size_t first = 0;
  std::size_t last = 0;

  std::size_t length() const { return last > first ? last - first : 0; }
};

/// One raised-cosine bump: zero at the window edges, peak `amplitude` at the
/// centre.
struct Pulse {
  IndexRange window;
  double amplitude = 1.0;
};

/// Sources that are non-zero only inside their own windows; windows are
/// pairwise disjoint across all sources, so every source has segments where
/// it is active alone. `amplitude_jitter` scales each pulse by a seeded
/// uniform factor in [1-j, 1+j].
///
/// Throws Error{overlapping_windows} when any two windows intersect.
SignalMatrix gen_completely_sparse(std::size_t samples,
                                   const std::vector<std::vector<Pulse>>& source_pulses,
                                   std::uint64_t seed, double amplitude_jitter = 0.0);

/// Two-source layout with one shared overlap region plus solo pulses.
/// Inside the overlap the second source's pulse is inset by a fraction of
/// the window so the two sources are not proportional there. A zero-length
/// overlap degenerates to the completely sparse case.
struct PartialSparseLayout {
  IndexRange overlap;
  double overlap_amplitude_first = 1.0;
  double overlap_amplitude_second = 1.0;
  double overlap_inset = 0.2;  // fraction of the overlap trimmed from each side
  std::vector<Pulse> solo_first;
  std::vector<Pulse> solo_second;
};

/// Throws Error{no_solo_window} when either source would never appear
/// alone, and Error{overlapping_windows} when solo windows collide with
/// each other or the overlap region.
SignalMatrix gen_partially_sparse(std::size_t samples, const PartialSparseLayout& layout,
                                  std::uint64_t seed, double amplitude_jitter = 0.0);

/// Z = A * S. Throws Error{dimension_mismatch} and Error{singular_mixing}
/// (|det A| <= 1e-12).
SignalMatrix mix(const SignalMatrix& sources, const MixingMatrix& mixing);

/// Adds independent zero-mean Gaussian noise of standard deviation sd to
/// every entry; sd = 0 returns the input unchanged. Deterministic per seed.
SignalMatrix add_noise(const SignalMatrix& input, double sd, std::uint64_t seed);

/// A named evaluation setup: clean sources, mixing matrix, noise level.
struct Scenario {
  std::string name;
  SignalMatrix sources;
  MixingMatrix mixing;
  double noise_sd = 0.0;
};

/// Preset scenarios addressable by name: "sparse-pure" (two disjoint-support
/// sources, mixing [[1.3,2],[1,3]], sd 0.005) and "sparse-partial" (shared
/// first peak plus solo pulses, mixing [[6.5,1],[3,1]], sd 0.05).
///
/// Throws Error{bad_scenario} for unknown names.
Scenario scenario_by_name(std::string_view name, std::size_t samples = 400);

std::vector<std::string> scenario_names();

}  // namespace sparsebss

#endif
