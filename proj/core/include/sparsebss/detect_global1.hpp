#ifndef SPARSEBSS_DETECT_GLOBAL1_HPP
#define SPARSEBSS_DETECT_GLOBAL1_HPP

#include <cstdint>
#include <vector>

#include "sparsebss/types.hpp"

namespace sparsebss {

/// Ascending sort of |r_i[n]| per component, with the permutation back to
/// heading positions. order[i][m] is the set position whose component i
/// landed at sorted row m. Sorting is stable on value then original
/// position, so ties reproduce deterministically.
struct SortedComponents {
  std::vector<std::vector<double>> values;      // [component][row]
  std::vector<std::vector<std::size_t>> order;  // [component][row] -> position
};

SortedComponents sort_components(const HeadingSet& set);

/// Binary cluster bookkeeping of the sorted-component method.
/// c[i][m] flags sorted rows closer than epsilon to their predecessor
/// (row 0 is always 0). cu[i][n] is the time-ordered membership after
/// mapping the chosen run back through the permutation, and d[n] is the
/// across-component AND.
struct ClusterMatrices {
  std::vector<std::vector<std::uint8_t>> c;
  std::vector<std::vector<std::uint8_t>> cu;
  std::vector<std::uint8_t> d;
};

struct Global1Result {
  PrincipalHeading heading;
  ClusterMatrices matrices;
};

/// Maximum-likelihood average of clustered velocity vectors: members are
/// sign-aligned to the first entry, then V_i = sum_j M[j] v_i[j] / sum_j M[j]^2
/// with M[j] = |v[j]|, and the result is normalised. With equal magnitudes
/// this reduces to a straight heading average. `weight` is sum_j M[j].
///
/// Throws Error{zero_average} when the aligned members cancel below 1e-12.
PrincipalHeading weighted_average(const std::vector<Eigen::VectorXd>& cluster_velocities);

/// Sorted-component clustering with an explicit threshold. Finds the
/// longest run of 1's over all c columns (ties: lowest component, then
/// lowest starting row), clusters the run rows plus the row preceding the
/// first 1, maps the members back to time order, ANDs across components
/// (a 0 that sits immediately before a run of 1's counts as a member of
/// that run), and ML-averages the surviving headings' velocities.
///
/// Throws Error{no_cluster_found} when no run of 1's exists or the AND
/// leaves no member, and Error{too_few_headings} for sets smaller than 2.
Global1Result global1_detect_with_epsilon(const HeadingSet& set, const VelocityField& field,
                                          double epsilon);

/// Same with the record-length threshold epsilon = alpha / M, M being the
/// sample count of the signal the field was built from. Requires
/// 0 < alpha <= 1.
Global1Result global1_detect(const HeadingSet& set, const VelocityField& field, double alpha);

}  // namespace sparsebss

#endif
