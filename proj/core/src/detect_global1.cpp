#include "sparsebss/detect_global1.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sparsebss {

SortedComponents sort_components(const HeadingSet& set) {
  const std::size_t n_headings = set.size();
  const auto n_components = static_cast<std::size_t>(set[0].direction.size());

  SortedComponents sorted;
  sorted.values.resize(n_components);
  sorted.order.resize(n_components);
  for (std::size_t i = 0; i < n_components; ++i) {
    std::vector<std::size_t>& order = sorted.order[i];
    order.resize(n_headings);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::abs(set[a].direction(static_cast<Eigen::Index>(i))) <
             std::abs(set[b].direction(static_cast<Eigen::Index>(i)));
    });
    sorted.values[i].resize(n_headings);
    for (std::size_t m = 0; m < n_headings; ++m) {
      sorted.values[i][m] = std::abs(set[order[m]].direction(static_cast<Eigen::Index>(i)));
    }
  }
  return sorted;
}

PrincipalHeading weighted_average(const std::vector<Eigen::VectorXd>& cluster_velocities) {
  if (cluster_velocities.empty()) {
    throw std::invalid_argument("weighted_average needs at least one velocity");
  }
  const Eigen::VectorXd& reference = cluster_velocities.front();

  Eigen::VectorXd accumulator = Eigen::VectorXd::Zero(reference.size());
  double magnitude_sum = 0.0;
  double magnitude_sq_sum = 0.0;
  for (const Eigen::VectorXd& velocity : cluster_velocities) {
    if (velocity.size() != reference.size()) {
      throw Error(ErrorCode::dimension_mismatch, "cluster velocities differ in dimension");
    }
    const double sign = velocity.dot(reference) < 0.0 ? -1.0 : 1.0;
    const double magnitude = velocity.norm();
    accumulator += magnitude * sign * velocity;
    magnitude_sum += magnitude;
    magnitude_sq_sum += magnitude * magnitude;
  }
  if (magnitude_sq_sum == 0.0) {
    throw Error(ErrorCode::zero_average, "cluster contains only zero velocities");
  }

  const Eigen::VectorXd estimate = accumulator / magnitude_sq_sum;
  const double norm = estimate.norm();
  if (norm < 1e-12) {
    throw Error(ErrorCode::zero_average, "aligned cluster members cancel out");
  }

  PrincipalHeading heading;
  heading.direction = estimate / norm;
  heading.detector = Detector::global1;
  heading.support.resize(cluster_velocities.size());
  std::iota(heading.support.begin(), heading.support.end(), std::size_t{0});
  heading.weight = magnitude_sum;
  return heading;
}

namespace {

struct Run {
  std::size_t length = 0;
  std::size_t component = 0;
  std::size_t first_one = 0;  // row of the run's first 1
};

// Longest run of adjacent 1's over all columns; ties prefer the lowest
// component, then the lowest starting row.
Run longest_run(const std::vector<std::vector<std::uint8_t>>& c) {
  Run best;
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::size_t m = 0;
    while (m < c[i].size()) {
      if (c[i][m] == 0) {
        ++m;
        continue;
      }
      std::size_t end = m;
      while (end + 1 < c[i].size() && c[i][end + 1] == 1) ++end;
      const std::size_t length = end - m + 1;
      if (length > best.length) {
        best = Run{length, i, m};
      }
      m = end + 1;
    }
  }
  return best;
}

}  // namespace

Global1Result global1_detect_with_epsilon(const HeadingSet& set, const VelocityField& field,
                                          double epsilon) {
  const std::size_t n_headings = set.size();
  if (n_headings < 2) {
    throw Error(ErrorCode::too_few_headings, "clustering needs at least 2 headings");
  }
  const SortedComponents sorted = sort_components(set);
  const std::size_t n_components = sorted.values.size();

  ClusterMatrices matrices;
  matrices.c.assign(n_components, std::vector<std::uint8_t>(n_headings, 0));
  for (std::size_t i = 0; i < n_components; ++i) {
    for (std::size_t m = 1; m < n_headings; ++m) {
      matrices.c[i][m] =
          std::abs(sorted.values[i][m] - sorted.values[i][m - 1]) < epsilon ? 1 : 0;
    }
  }

  const Run run = longest_run(matrices.c);
  if (run.length == 0) {
    throw Error(ErrorCode::no_cluster_found, "no sorted components fall within epsilon");
  }

  // The run's flags compare rows (first_one-1, first_one) .. so the entry
  // preceding the first 1 belongs to the cluster as well.
  std::vector<std::uint8_t> in_cluster(n_headings, 0);
  for (std::size_t m = run.first_one - 1; m < run.first_one + run.length; ++m) {
    in_cluster[sorted.order[run.component][m]] = 1;
  }

  // Time-ordered membership per component. A 0 that sits immediately before
  // a run of 1's is the boundary entry of that run and counts as a member.
  matrices.cu.assign(n_components, std::vector<std::uint8_t>(n_headings, 0));
  for (std::size_t i = 0; i < n_components; ++i) {
    std::vector<std::size_t> row_of(n_headings, 0);
    for (std::size_t m = 0; m < n_headings; ++m) row_of[sorted.order[i][m]] = m;
    for (std::size_t n = 0; n < n_headings; ++n) {
      if (!in_cluster[n]) continue;
      const std::size_t m = row_of[n];
      matrices.cu[i][n] =
          (matrices.c[i][m] == 1 || (m + 1 < n_headings && matrices.c[i][m + 1] == 1)) ? 1 : 0;
    }
  }

  matrices.d.assign(n_headings, 1);
  for (std::size_t n = 0; n < n_headings; ++n) {
    for (std::size_t i = 0; i < n_components; ++i) {
      matrices.d[n] = matrices.d[n] && matrices.cu[i][n];
    }
  }

  std::vector<Eigen::VectorXd> velocities;
  std::vector<std::size_t> support;
  for (std::size_t n = 0; n < n_headings; ++n) {
    if (!matrices.d[n]) continue;
    velocities.push_back(field.vectors.col(static_cast<Eigen::Index>(set[n].index)));
    support.push_back(set[n].index);
  }
  if (velocities.empty()) {
    throw Error(ErrorCode::no_cluster_found, "no heading clusters across all components");
  }

  PrincipalHeading heading = weighted_average(velocities);
  heading.support = std::move(support);
  return Global1Result{std::move(heading), std::move(matrices)};
}

Global1Result global1_detect(const HeadingSet& set, const VelocityField& field, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1]");
  }
  if (field.signal_samples == 0) {
    throw std::invalid_argument("velocity field does not know its record length");
  }
  return global1_detect_with_epsilon(set, field,
                                     alpha / static_cast<double>(field.signal_samples));
}

}  // namespace sparsebss
