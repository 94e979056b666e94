#include "sparsebss/preprocess.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sparsebss {

WhitenResult gram_schmidt_whiten(const SignalMatrix& input) {
  validate(input);
  const Eigen::Index n_channels = input.channels();
  const Eigen::Index n_samples = input.samples();

  Eigen::MatrixXd whitened(n_channels, n_samples);
  Eigen::MatrixXd transform = Eigen::MatrixXd::Zero(n_channels, n_channels);

  for (Eigen::Index i = 0; i < n_channels; ++i) {
    const double pre_norm = input.data.row(i).norm();
    Eigen::RowVectorXd residual = input.data.row(i);
    Eigen::RowVectorXd coeffs = Eigen::RowVectorXd::Zero(n_channels);
    coeffs(i) = 1.0;
    // classical projection against the already-orthonormal rows
    for (Eigen::Index j = 0; j < i; ++j) {
      const double proj = whitened.row(j).dot(input.data.row(i));
      residual -= proj * whitened.row(j);
      coeffs -= proj * transform.row(j);
    }
    const double res_norm = residual.norm();
    if (pre_norm == 0.0 || res_norm < 1e-10 * pre_norm) {
      throw Error(ErrorCode::rank_deficient,
                  "channel " + std::to_string(i) + " is linearly dependent",
                  static_cast<std::size_t>(i));
    }
    whitened.row(i) = residual / res_norm;
    transform.row(i) = coeffs / res_norm;
  }

  return WhitenResult{SignalMatrix{std::move(whitened), SignalRole::whitened},
                      WhiteningMatrix{std::move(transform)}};
}

VelocityField velocity_field(const SignalMatrix& whitened, double vth) {
  validate(whitened);
  if (!(vth >= 0.0 && vth < 1.0)) {
    throw std::invalid_argument("vth must lie in [0, 1)");
  }
  const Eigen::Index n_steps = whitened.samples() - 1;

  VelocityField field;
  field.vectors = whitened.data.rightCols(n_steps) - whitened.data.leftCols(n_steps);
  field.vth = vth;
  field.vmax = 0.0;
  field.signal_samples = static_cast<std::size_t>(whitened.samples());
  for (Eigen::Index n = 0; n < n_steps; ++n) {
    field.vmax = std::max(field.vmax, field.vectors.col(n).norm());
  }

  if (field.vmax == 0.0 && vth > 0.0) {
    throw Error(ErrorCode::all_rejected, "all velocities are zero; lower vth");
  }

  field.accepted.resize(static_cast<std::size_t>(n_steps));
  const double cutoff = vth * field.vmax;
  bool any = false;
  for (Eigen::Index n = 0; n < n_steps; ++n) {
    const double component_max = field.vectors.col(n).cwiseAbs().maxCoeff();
    const bool keep = component_max >= cutoff;
    field.accepted[static_cast<std::size_t>(n)] = keep;
    any = any || keep;
  }
  if (!any) {
    throw Error(ErrorCode::all_rejected, "no velocity passed the threshold; lower vth");
  }
  return field;
}

HeadingSet headings(const VelocityField& field) {
  HeadingSet set;
  bool any_accepted = false;
  for (Eigen::Index n = 0; n < field.steps(); ++n) {
    if (!field.accepted[static_cast<std::size_t>(n)]) continue;
    any_accepted = true;
    const double magnitude = field.vectors.col(n).norm();
    if (magnitude == 0.0) continue;  // no direction information
    set.entries.push_back(Heading{static_cast<std::size_t>(n), field.vectors.col(n) / magnitude});
  }
  if (set.entries.empty()) {
    throw Error(ErrorCode::empty_heading_set,
                any_accepted ? "every accepted velocity has zero magnitude"
                             : "velocity field has no accepted samples");
  }
  return set;
}

}  // namespace sparsebss
