#include "sparsebss/evalkit.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "sparsebss/csv.hpp"
#include "sparsebss/deflate.hpp"
#include "sparsebss/rng.hpp"

namespace sparsebss {

const char* to_string(Method method) noexcept {
  switch (method) {
    case Method::mhc: return "mhc";
    case Method::global1: return "global1";
    case Method::global2: return "global2";
    case Method::fastica: return "fastica";
  }
  return "unknown";
}

Eigen::RowVectorXd unit_normalize(const Eigen::RowVectorXd& signal) {
  const double norm = signal.norm();
  if (norm == 0.0) {
    throw Error(ErrorCode::zero_signal, "cannot normalise an all-zero signal");
  }
  return signal / norm;
}

MatchReport match_sources(const SignalMatrix& truth, const SignalMatrix& estimates) {
  if (truth.channels() != estimates.channels() || truth.samples() != estimates.samples()) {
    throw Error(ErrorCode::dimension_mismatch, "source and estimate shapes differ");
  }
  const Eigen::Index n = truth.channels();

  const auto normalized_rows = [](const SignalMatrix& matrix) {
    Eigen::MatrixXd rows(matrix.channels(), matrix.samples());
    for (Eigen::Index r = 0; r < matrix.channels(); ++r) {
      const double norm = matrix.data.row(r).norm();
      if (norm == 0.0) {
        throw Error(ErrorCode::degenerate_row, "row " + std::to_string(r) + " is all zero",
                    static_cast<std::size_t>(r));
      }
      rows.row(r) = matrix.data.row(r) / norm;
    }
    return rows;
  };
  const Eigen::MatrixXd sources = normalized_rows(truth);
  const Eigen::MatrixXd candidates = normalized_rows(estimates);
  const Eigen::MatrixXd correlation = sources * candidates.transpose();

  // greedy unique pairing by descending |c|; ties resolved by (row, column)
  // for determinism
  struct Entry {
    double magnitude;
    Eigen::Index row;
    Eigen::Index col;
  };
  std::vector<Entry> entries;
  entries.reserve(static_cast<std::size_t>(n * n));
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      entries.push_back({std::abs(correlation(r, c)), r, c});
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.magnitude != b.magnitude) return a.magnitude > b.magnitude;
    if (a.row != b.row) return a.row < b.row;
    return a.col < b.col;
  });

  MatchReport report;
  report.assignment.assign(static_cast<std::size_t>(n), 0);
  report.signs.assign(static_cast<std::size_t>(n), 1);
  report.correlations.assign(static_cast<std::size_t>(n), 0.0);
  std::vector<bool> row_used(static_cast<std::size_t>(n), false);
  std::vector<bool> col_used(static_cast<std::size_t>(n), false);
  for (const Entry& entry : entries) {
    const auto r = static_cast<std::size_t>(entry.row);
    const auto c = static_cast<std::size_t>(entry.col);
    if (row_used[r] || col_used[c]) continue;
    row_used[r] = true;
    col_used[c] = true;
    report.assignment[r] = c;
    report.correlations[r] = correlation(entry.row, entry.col);
    report.signs[r] = correlation(entry.row, entry.col) < 0.0 ? -1 : 1;
  }
  return report;
}

Eigen::RowVectorXd rms_curve(const Eigen::MatrixXd& errors) {
  if (errors.rows() < 1) {
    throw std::invalid_argument("rms_curve needs at least one run");
  }
  Eigen::RowVectorXd sum_sq = Eigen::RowVectorXd::Zero(errors.cols());
  for (Eigen::Index q = 0; q < errors.rows(); ++q) {  // run-index order, bit-exact
    sum_sq += errors.row(q).cwiseAbs2();
  }
  return (sum_sq / static_cast<double>(errors.rows())).cwiseSqrt();
}

namespace {

SeparationResult run_method(const MethodConfig& config, const SignalMatrix& noisy,
                            std::uint64_t master_seed, std::size_t run, std::size_t method_index) {
  if (config.method == Method::fastica) {
    FastIcaConfig fastica;
    fastica.nonlinearity = config.nonlinearity;
    // per-run init stream, salted by the method slot
    fastica.seed = splitmix64(splitmix64(master_seed ^ 0xf4571caull) + run * 64 + method_index);
    return fastica_separate(noisy, fastica);
  }
  Detector detector = Detector::global2;
  if (config.method == Method::mhc) detector = Detector::mhc;
  if (config.method == Method::global1) detector = Detector::global1;
  return separate(noisy, detector, SeparationConfig{config.vth, config.alpha});
}

}  // namespace

std::vector<RmsReport> monte_carlo(const Scenario& scenario,
                                   const std::vector<MethodConfig>& methods, std::size_t runs,
                                   std::uint64_t master_seed) {
  validate(scenario.sources);
  const Eigen::Index n_sources = scenario.sources.channels();
  const Eigen::Index n_samples = scenario.sources.samples();
  const SignalMatrix clean_mixtures = mix(scenario.sources, scenario.mixing);

  Eigen::MatrixXd normalized_sources(n_sources, n_samples);
  for (Eigen::Index r = 0; r < n_sources; ++r) {
    normalized_sources.row(r) = unit_normalize(scenario.sources.data.row(r));
  }

  std::vector<RmsReport> reports(methods.size());
  std::vector<Eigen::MatrixXd> sum_sq(methods.size(),
                                      Eigen::MatrixXd::Zero(n_sources, n_samples));
  std::vector<std::size_t> completed(methods.size(), 0);
  for (std::size_t mi = 0; mi < methods.size(); ++mi) {
    reports[mi].scenario = scenario.name;
    reports[mi].method = methods[mi].method;
    reports[mi].master_seed = master_seed;
    reports[mi].runs = runs;
    reports[mi].rng_algorithm = kRngAlgorithm;
  }

  for (std::size_t q = 0; q < runs; ++q) {
    // one noisy realisation per run, shared by every method
    Rng stream = Rng::stream(master_seed, q);
    SignalMatrix noisy = clean_mixtures;
    if (scenario.noise_sd > 0.0) {
      for (Eigen::Index n = 0; n < noisy.samples(); ++n) {
        for (Eigen::Index i = 0; i < noisy.channels(); ++i) {
          noisy.data(i, n) += scenario.noise_sd * stream.gaussian();
        }
      }
    }

    for (std::size_t mi = 0; mi < methods.size(); ++mi) {
      try {
        const SeparationResult result = run_method(methods[mi], noisy, master_seed, q, mi);
        if (result.halted_at) {
          throw Error(ErrorCode::no_cluster_found, result.halt_reason);
        }
        const MatchReport match = match_sources(scenario.sources, result.estimates);
        Eigen::MatrixXd run_sq(n_sources, n_samples);  // commit only complete runs
        for (Eigen::Index r = 0; r < n_sources; ++r) {
          const auto rs = static_cast<std::size_t>(r);
          const Eigen::RowVectorXd estimate = unit_normalize(
              result.estimates.data.row(static_cast<Eigen::Index>(match.assignment[rs])));
          const Eigen::RowVectorXd error =
              match.signs[rs] > 0 ? (normalized_sources.row(r) - estimate).eval()
                                  : (normalized_sources.row(r) + estimate).eval();
          run_sq.row(r) = error.cwiseAbs2();
        }
        sum_sq[mi] += run_sq;
        ++completed[mi];
      } catch (const Error& e) {
        ++reports[mi].failures;
        reports[mi].failure_log.emplace_back(q, e.what());
      }
    }
  }

  for (std::size_t mi = 0; mi < methods.size(); ++mi) {
    reports[mi].rms.assign(static_cast<std::size_t>(n_sources),
                           std::vector<double>(static_cast<std::size_t>(n_samples), 0.0));
    if (completed[mi] == 0) continue;  // all runs failed; zero curves, failures tell the story
    for (Eigen::Index r = 0; r < n_sources; ++r) {
      for (Eigen::Index n = 0; n < n_samples; ++n) {
        reports[mi].rms[static_cast<std::size_t>(r)][static_cast<std::size_t>(n)] =
            std::sqrt(sum_sq[mi](r, n) / static_cast<double>(completed[mi]));
      }
    }
  }
  return reports;
}

void write_rms_csv(const std::vector<RmsReport>& reports, const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::trunc);
  if (!file) {
    throw Error(ErrorCode::io_error, "cannot write " + path.string());
  }
  file << "sample";
  for (const RmsReport& report : reports) {
    for (std::size_t r = 0; r < report.rms.size(); ++r) {
      file << ',' << to_string(report.method) << "_s" << r;
    }
  }
  file << '\n';
  const std::size_t n_samples =
      reports.empty() || reports.front().rms.empty() ? 0 : reports.front().rms.front().size();
  for (std::size_t n = 0; n < n_samples; ++n) {
    file << n;
    for (const RmsReport& report : reports) {
      for (const auto& curve : report.rms) {
        file << ',' << format_double(curve[n]);
      }
    }
    file << '\n';
  }
  if (!file) {
    throw Error(ErrorCode::io_error, "write failed for " + path.string());
  }
}

}  // namespace sparsebss
