#ifndef SPARSEBSS_DETECT_GLOBAL2_HPP
#define SPARSEBSS_DETECT_GLOBAL2_HPP

#include <optional>
#include <vector>

#include "sparsebss/types.hpp"

namespace sparsebss {

/// Time-reordered sorted-neighbour differences. deltas[i][n] is empty for
/// the heading whose component i sits at sorted row 0 (no predecessor);
/// magnitude[n] is the root-sum-square over components, empty when any
/// component is. Indices are positions within the heading set.
struct Global2Trace {
  std::vector<std::vector<std::optional<double>>> deltas;
  std::vector<std::optional<double>> magnitude;
  std::size_t chosen = 0;
};

struct Global2Result {
  PrincipalHeading heading;
  Global2Trace trace;
};

/// Threshold-free detector: sort |r_i[n]| per component, take adjacent
/// sorted differences, reorder them to time, and pick the heading with the
/// smallest difference magnitude. Undefined entries are excluded from the
/// argmin; ties go to the lowest position.
///
/// Throws Error{too_few_headings} for sets smaller than 2 and
/// Error{no_defined_difference} when every heading has an undefined
/// component.
Global2Result global2_detect(const HeadingSet& set);

}  // namespace sparsebss

#endif
