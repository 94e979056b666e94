#include "sparsebss/fastica.hpp"

#include <cmath>
#include <string>

#include "sparsebss/rng.hpp"

namespace sparsebss {

const char* to_string(Nonlinearity nonlinearity) noexcept {
  switch (nonlinearity) {
    case Nonlinearity::gauss: return "gauss";
    case Nonlinearity::tanh: return "tanh";
    case Nonlinearity::pow3: return "pow3";
  }
  return "unknown";
}

namespace {

// g(u) and g'(u) evaluated elementwise over the projected row.
void apply_nonlinearity(Nonlinearity kind, const Eigen::RowVectorXd& u, Eigen::RowVectorXd& g,
                        Eigen::RowVectorXd& g_prime) {
  switch (kind) {
    case Nonlinearity::gauss: {
      const Eigen::RowVectorXd bell = (-0.5 * u.array().square()).exp();
      g = u.array() * bell.array();
      g_prime = (1.0 - u.array().square()) * bell.array();
      return;
    }
    case Nonlinearity::tanh: {
      g = u.array().tanh();
      g_prime = 1.0 - g.array().square();
      return;
    }
    case Nonlinearity::pow3: {
      g = u.array().cube();
      g_prime = 3.0 * u.array().square();
      return;
    }
  }
}

Eigen::VectorXd random_unit_vector(Rng& rng, Eigen::Index dimension) {
  Eigen::VectorXd w(dimension);
  do {
    for (Eigen::Index i = 0; i < dimension; ++i) w(i) = rng.gaussian();
  } while (w.norm() == 0.0);
  return w / w.norm();
}

}  // namespace

SeparationResult fastica_separate(const SignalMatrix& mixtures, const FastIcaConfig& config) {
  validate(mixtures);
  const Eigen::Index n_channels = mixtures.channels();
  const Eigen::Index n_samples = mixtures.samples();
  const double m = static_cast<double>(n_samples);

  // centre, then whiten from the covariance eigendecomposition
  Eigen::MatrixXd centered = mixtures.data;
  centered.colwise() -= mixtures.data.rowwise().mean();
  const Eigen::MatrixXd covariance = centered * centered.transpose() / (m - 1.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eigen(covariance);
  const Eigen::VectorXd eigenvalues = eigen.eigenvalues();
  for (Eigen::Index i = 0; i < n_channels; ++i) {
    if (eigenvalues(i) < 1e-12 * eigenvalues(n_channels - 1)) {
      throw Error(ErrorCode::rank_deficient,
                  "covariance eigenvalue " + std::to_string(i) + " is negligible",
                  static_cast<std::size_t>(i));
    }
  }
  const Eigen::MatrixXd whitened = eigenvalues.cwiseSqrt().cwiseInverse().asDiagonal() *
                                   eigen.eigenvectors().transpose() * centered;

  Rng rng(config.seed);
  Eigen::MatrixXd weights(n_channels, n_channels);  // accepted rows
  Eigen::RowVectorXd g(n_samples);
  Eigen::RowVectorXd g_prime(n_samples);

  for (Eigen::Index p = 0; p < n_channels; ++p) {
    Eigen::VectorXd w = random_unit_vector(rng, n_channels);
    bool converged = false;
    for (int iteration = 0; iteration < config.max_iter; ++iteration) {
      const Eigen::RowVectorXd projected = w.transpose() * whitened;
      apply_nonlinearity(config.nonlinearity, projected, g, g_prime);
      Eigen::VectorXd next = whitened * g.transpose() / m - g_prime.mean() * w;
      // decorrelate against previously accepted components (deflation)
      for (Eigen::Index j = 0; j < p; ++j) {
        next -= next.dot(weights.row(j)) * weights.row(j).transpose();
      }
      const double norm = next.norm();
      if (norm < 1e-12) {
        w = random_unit_vector(rng, n_channels);  // restart this component
        continue;
      }
      next /= norm;
      const double change = std::min((next - w).norm(), (next + w).norm());
      w = next;
      if (change < config.tol) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw Error(ErrorCode::not_converged,
                  "component " + std::to_string(p) + " after " +
                      std::to_string(config.max_iter) + " iterations; retry with a new seed",
                  static_cast<std::size_t>(p));
    }
    weights.row(p) = w.transpose();
  }

  SeparationResult result;
  result.estimates.data = weights * whitened;
  result.estimates.role = SignalRole::estimates;
  result.extracted = static_cast<std::size_t>(n_channels);
  return result;
}

}  // namespace sparsebss
