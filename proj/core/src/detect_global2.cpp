#include "sparsebss/detect_global2.hpp"

#include <cmath>
#include <limits>

#include "sparsebss/detect_global1.hpp"

namespace sparsebss {

Global2Result global2_detect(const HeadingSet& set) {
  const std::size_t n_headings = set.size();
  if (n_headings < 2) {
    throw Error(ErrorCode::too_few_headings, "global2 needs at least 2 headings");
  }
  const SortedComponents sorted = sort_components(set);
  const std::size_t n_components = sorted.values.size();

  Global2Trace trace;
  trace.deltas.assign(n_components, std::vector<std::optional<double>>(n_headings));
  for (std::size_t i = 0; i < n_components; ++i) {
    // sorted row 0 has no predecessor; the heading that landed there keeps
    // an empty delta for this component
    for (std::size_t m = 1; m < n_headings; ++m) {
      trace.deltas[i][sorted.order[i][m]] = sorted.values[i][m] - sorted.values[i][m - 1];
    }
  }

  trace.magnitude.assign(n_headings, std::nullopt);
  double best = std::numeric_limits<double>::infinity();
  std::size_t best_position = 0;
  bool any_defined = false;
  for (std::size_t n = 0; n < n_headings; ++n) {
    double sum_sq = 0.0;
    bool defined = true;
    for (std::size_t i = 0; i < n_components; ++i) {
      if (!trace.deltas[i][n]) {
        defined = false;
        break;
      }
      sum_sq += *trace.deltas[i][n] * *trace.deltas[i][n];
    }
    if (!defined) continue;
    const double magnitude = std::sqrt(sum_sq);
    trace.magnitude[n] = magnitude;
    if (!any_defined || magnitude < best) {
      any_defined = true;
      best = magnitude;
      best_position = n;
    }
  }
  if (!any_defined) {
    throw Error(ErrorCode::no_defined_difference,
                "every heading has an undefined sorted-neighbour difference");
  }
  trace.chosen = best_position;

  PrincipalHeading heading;
  heading.direction = set[best_position].direction;
  heading.detector = Detector::global2;
  heading.support = {set[best_position].index};
  heading.weight = 0.0;
  return Global2Result{std::move(heading), std::move(trace)};
}

}  // namespace sparsebss
