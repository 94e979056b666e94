#include "sparsebss/detect_mhc.hpp"

#include <limits>

namespace sparsebss {

MhcResult mhc_detect(const HeadingSet& set) {
  if (set.size() < 2) {
    throw Error(ErrorCode::too_few_headings, "minimum heading change needs at least 2 headings");
  }

  MhcTrace trace;
  trace.epsilon.resize(set.size());  // [0] stays empty

  double best = std::numeric_limits<double>::infinity();
  std::size_t best_position = 1;
  for (std::size_t k = 1; k < set.size(); ++k) {
    const Eigen::VectorXd& current = set[k].direction;
    const Eigen::VectorXd& previous = set[k - 1].direction;
    const double d_plus = (current + previous).norm();   // absorbs sign inversion
    const double d_minus = (current - previous).norm();
    const double eps = std::min(d_plus, d_minus);
    trace.epsilon[k] = eps;
    if (eps < best) {
      best = eps;
      best_position = k;
    }
  }
  trace.chosen = best_position;

  PrincipalHeading heading;
  heading.direction = set[best_position].direction;  // later heading of the pair
  heading.detector = Detector::mhc;
  heading.support = {set[best_position].index};
  heading.weight = 0.0;
  return MhcResult{std::move(heading), std::move(trace)};
}

}  // namespace sparsebss
