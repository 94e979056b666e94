#include "sparsebss/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sparsebss/rng.hpp"

namespace sparsebss {

namespace {

void check_window(const IndexRange& window, std::size_t samples) {
  if (window.last > samples || window.first >= window.last) {
    throw Error(ErrorCode::overlapping_windows,
                "window [" + std::to_string(window.first) + ", " + std::to_string(window.last) +
                    ") does not fit a " + std::to_string(samples) + "-sample record");
  }
}

bool intersects(const IndexRange& a, const IndexRange& b) {
  return a.first < b.last && b.first < a.last;
}

// Raised-cosine bump over [first, last): zero at both edges, peak in the
// middle.
void add_pulse(Eigen::Ref<Eigen::RowVectorXd> row, const IndexRange& window, double amplitude) {
  const std::size_t length = window.length();
  if (length < 3) return;  // no interior samples to raise
  for (std::size_t t = 0; t < length; ++t) {
    const double phase = static_cast<double>(t) / static_cast<double>(length - 1);
    row(static_cast<Eigen::Index>(window.first + t)) +=
        amplitude * 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * phase));
  }
}

double jittered(double amplitude, double jitter, Rng& rng) {
  if (jitter == 0.0) return amplitude;
  return amplitude * (1.0 + jitter * (2.0 * rng.uniform() - 1.0));
}

}  // namespace

SignalMatrix gen_completely_sparse(std::size_t samples,
                                   const std::vector<std::vector<Pulse>>& source_pulses,
                                   std::uint64_t seed, double amplitude_jitter) {
  std::vector<IndexRange> all_windows;
  for (const auto& pulses : source_pulses) {
    for (const Pulse& pulse : pulses) {
      check_window(pulse.window, samples);
      for (const IndexRange& other : all_windows) {
        if (intersects(pulse.window, other)) {
          throw Error(ErrorCode::overlapping_windows,
                      "windows [" + std::to_string(pulse.window.first) + ", " +
                          std::to_string(pulse.window.last) + ") and [" +
                          std::to_string(other.first) + ", " + std::to_string(other.last) +
                          ") intersect");
        }
      }
      all_windows.push_back(pulse.window);
    }
  }

  Rng rng(seed);
  SignalMatrix sources;
  sources.role = SignalRole::sources;
  sources.data = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(source_pulses.size()),
                                       static_cast<Eigen::Index>(samples));
  for (std::size_t s = 0; s < source_pulses.size(); ++s) {
    for (const Pulse& pulse : source_pulses[s]) {
      add_pulse(sources.data.row(static_cast<Eigen::Index>(s)), pulse.window,
                jittered(pulse.amplitude, amplitude_jitter, rng));
    }
  }
  return sources;
}

SignalMatrix gen_partially_sparse(std::size_t samples, const PartialSparseLayout& layout,
                                  std::uint64_t seed, double amplitude_jitter) {
  if (layout.solo_first.empty() || layout.solo_second.empty()) {
    throw Error(ErrorCode::no_solo_window, "each source needs at least one solo window");
  }

  std::vector<IndexRange> claimed;
  if (layout.overlap.length() > 0) {
    check_window(layout.overlap, samples);
    claimed.push_back(layout.overlap);
  }
  for (const auto* solos : {&layout.solo_first, &layout.solo_second}) {
    for (const Pulse& pulse : *solos) {
      check_window(pulse.window, samples);
      for (const IndexRange& other : claimed) {
        if (intersects(pulse.window, other)) {
          throw Error(ErrorCode::overlapping_windows, "solo window collides with another region");
        }
      }
      claimed.push_back(pulse.window);
    }
  }

  Rng rng(seed);
  SignalMatrix sources;
  sources.role = SignalRole::sources;
  sources.data = Eigen::MatrixXd::Zero(2, static_cast<Eigen::Index>(samples));

  if (layout.overlap.length() > 0) {
    add_pulse(sources.data.row(0), layout.overlap,
              jittered(layout.overlap_amplitude_first, amplitude_jitter, rng));
    // inset the second pulse so the pair is not proportional inside the
    // overlap; a proportional overlap would look like one straight source
    const auto trim = static_cast<std::size_t>(
        std::round(layout.overlap_inset * static_cast<double>(layout.overlap.length())));
    IndexRange inner{layout.overlap.first + trim, layout.overlap.last - trim};
    if (inner.length() < 3) inner = layout.overlap;
    add_pulse(sources.data.row(1), inner,
              jittered(layout.overlap_amplitude_second, amplitude_jitter, rng));
  }
  for (const Pulse& pulse : layout.solo_first) {
    add_pulse(sources.data.row(0), pulse.window, jittered(pulse.amplitude, amplitude_jitter, rng));
  }
  for (const Pulse& pulse : layout.solo_second) {
    add_pulse(sources.data.row(1), pulse.window, jittered(pulse.amplitude, amplitude_jitter, rng));
  }
  return sources;
}

SignalMatrix mix(const SignalMatrix& sources, const MixingMatrix& mixing) {
  if (mixing.entries.rows() != mixing.entries.cols() ||
      mixing.entries.cols() != sources.channels()) {
    throw Error(ErrorCode::dimension_mismatch,
                "mixing matrix is " + std::to_string(mixing.entries.rows()) + "x" +
                    std::to_string(mixing.entries.cols()) + " for " +
                    std::to_string(sources.channels()) + " sources");
  }
  if (std::abs(mixing.entries.determinant()) <= 1e-12) {
    throw Error(ErrorCode::singular_mixing, "|det| <= 1e-12");
  }
  SignalMatrix mixtures;
  mixtures.data = mixing.entries * sources.data;
  mixtures.role = SignalRole::mixtures;
  return mixtures;
}

SignalMatrix add_noise(const SignalMatrix& input, double sd, std::uint64_t seed) {
  if (sd < 0.0) {
    throw std::invalid_argument("noise sd must be non-negative");
  }
  SignalMatrix noisy = input;
  if (sd == 0.0) return noisy;
  Rng rng(seed);
  for (Eigen::Index n = 0; n < noisy.samples(); ++n) {
    for (Eigen::Index i = 0; i < noisy.channels(); ++i) {
      noisy.data(i, n) += sd * rng.gaussian();
    }
  }
  return noisy;
}

std::vector<std::string> scenario_names() { return {"sparse-pure", "sparse-partial"}; }

Scenario scenario_by_name(std::string_view name, std::size_t samples) {
  const auto scale = [samples](std::size_t index) {
    // presets are laid out on a 400-sample grid and rescale with the record
    return static_cast<std::size_t>(index * samples / 400);
  };

  if (name == "sparse-pure") {
    Scenario scenario;
    scenario.name = "sparse-pure";
    scenario.sources = gen_completely_sparse(
        samples,
        {{Pulse{{scale(30), scale(80)}, 1.0}, Pulse{{scale(290), scale(345)}, 0.8}},
         {Pulse{{scale(120), scale(170)}, 0.2}, Pulse{{scale(215), scale(260)}, 0.16}}},
        /*seed=*/0);
    scenario.mixing.entries = Eigen::MatrixXd{{1.3, 2.0}, {1.0, 3.0}};
    scenario.noise_sd = 0.005;
    return scenario;
  }
  if (name == "sparse-partial") {
    Scenario scenario;
    scenario.name = "sparse-partial";
    PartialSparseLayout layout;
    layout.overlap = {scale(10), scale(55)};
    layout.overlap_amplitude_first = 1.0;
    layout.overlap_amplitude_second = 0.9;
    layout.solo_first = {Pulse{{scale(255), scale(300)}, 0.9}};
    layout.solo_second = {Pulse{{scale(180), scale(220)}, 0.8}};
    scenario.sources = gen_partially_sparse(samples, layout, /*seed=*/0);
    scenario.mixing.entries = Eigen::MatrixXd{{6.5, 1.0}, {3.0, 1.0}};
    scenario.noise_sd = 0.05;
    return scenario;
  }
  throw Error(ErrorCode::bad_scenario,
              std::string(name) + " (known: sparse-pure, sparse-partial)");
}

}  // namespace sparsebss
