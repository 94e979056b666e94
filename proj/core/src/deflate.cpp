#include "sparsebss/deflate.hpp"

#include <string>
#include <utility>

#include "sparsebss/detect_global1.hpp"
#include "sparsebss/detect_global2.hpp"
#include "sparsebss/detect_mhc.hpp"
#include "sparsebss/preprocess.hpp"

namespace sparsebss {

namespace {

void check_dimension(const SignalMatrix& whitened, const PrincipalHeading& heading) {
  if (heading.direction.size() != whitened.channels()) {
    throw Error(ErrorCode::dimension_mismatch,
                "heading has " + std::to_string(heading.direction.size()) +
                    " components for " + std::to_string(whitened.channels()) + " channels");
  }
}

PrincipalHeading detect(Detector detector, const HeadingSet& set, const VelocityField& field,
                        const SeparationConfig& config) {
  switch (detector) {
    case Detector::mhc: return mhc_detect(set).heading;
    case Detector::global1: return global1_detect(set, field, config.alpha).heading;
    case Detector::global2: return global2_detect(set).heading;
  }
  throw std::invalid_argument("unknown detector");
}

}  // namespace

Eigen::RowVectorXd project_source(const SignalMatrix& whitened, const PrincipalHeading& heading) {
  check_dimension(whitened, heading);
  return heading.direction.transpose() * whitened.data;
}

SignalMatrix subtract_source(const SignalMatrix& whitened, const PrincipalHeading& heading) {
  check_dimension(whitened, heading);
  SignalMatrix deflated;
  deflated.data =
      whitened.data - heading.direction * (heading.direction.transpose() * whitened.data);
  deflated.role = SignalRole::whitened;
  return deflated;
}

SeparationResult separate(const SignalMatrix& mixtures, Detector detector,
                          const SeparationConfig& config) {
  validate(mixtures);
  WhitenResult white = gram_schmidt_whiten(mixtures);

  const Eigen::Index n_channels = mixtures.channels();
  const Eigen::Index n_samples = mixtures.samples();

  SeparationResult result;
  result.estimates.data = Eigen::MatrixXd::Zero(n_channels, n_samples);
  result.estimates.role = SignalRole::estimates;

  const double initial_energy = white.whitened.data.norm();
  result.residual_energy.push_back(initial_energy);

  if (n_channels == 1) {
    // nothing to deflate: the whitened channel is the estimate, up to the
    // sign a detector would otherwise pick arbitrarily
    result.estimates.data.row(0) = white.whitened.data.row(0);
    PrincipalHeading heading;
    heading.direction = Eigen::VectorXd::Ones(1);
    heading.detector = detector;
    heading.support = {0};
    result.headings.push_back(std::move(heading));
    result.residual_energy.push_back(0.0);
    result.extracted = 1;
    return result;
  }

  SignalMatrix residual = std::move(white.whitened);
  for (Eigen::Index k = 0; k < n_channels; ++k) {
    if (residual.data.norm() <= 1e-12 * initial_energy) {
      break;  // nothing left; remaining estimates stay zero
    }
    PrincipalHeading heading;
    try {
      const VelocityField field = velocity_field(residual, config.vth);
      const HeadingSet set = headings(field);
      heading = detect(detector, set, field, config);
    } catch (const Error& e) {
      result.halted_at = static_cast<std::size_t>(k);
      result.halt_reason = "iteration " + std::to_string(k) + ": " + e.what();
      break;
    }
    result.estimates.data.row(k) = project_source(residual, heading);
    residual = subtract_source(residual, heading);
    result.headings.push_back(std::move(heading));
    result.residual_energy.push_back(residual.data.norm());
    result.extracted = static_cast<std::size_t>(k) + 1;
  }
  return result;
}

}  // namespace sparsebss
