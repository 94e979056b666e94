#ifndef SPARSEBSS_DETECT_MHC_HPP
#define SPARSEBSS_DETECT_MHC_HPP

#include <optional>
#include <vector>

#include "sparsebss/types.hpp"

namespace sparsebss {

/// Per-position neighbour differences of the minimum-heading-change scan.
/// epsilon[k] compares set entries k-1 and k; epsilon[0] has no predecessor
/// and stays empty. `chosen` is a position within the heading set.
struct MhcTrace {
  std::vector<std::optional<double>> epsilon;
  std::size_t chosen = 0;
};

struct MhcResult {
  PrincipalHeading heading;
  MhcTrace trace;
};

/// Minimum heading change: for consecutive set entries compute
/// eps = min(|r[k] + r[k-1]|, |r[k] - r[k-1]|) (the sum term absorbs sign
/// inversion) and return the later heading of the minimising pair. Ties go
/// to the lowest position. Entries are compared by set position even when
/// their sample indices are not adjacent.
///
/// Throws Error{too_few_headings} for sets smaller than 2.
MhcResult mhc_detect(const HeadingSet& set);

}  // namespace sparsebss

#endif
