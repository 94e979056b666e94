#ifndef SPARSEBSS_RNG_HPP
#define SPARSEBSS_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace sparsebss {

/// Algorithm identifier recorded in Monte Carlo reports.
inline constexpr const char* kRngAlgorithm = "mt19937-64/box-muller";

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Seeded generator with fixed uniform/gaussian transforms. std::mt19937_64
/// is specified exactly by the standard and the transforms below avoid the
/// implementation-defined std::*_distribution classes, so streams are
/// reproducible across compilers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent substream q of a master seed; used so Monte Carlo runs can
  /// execute in any order (or concurrently) without changing results.
  static Rng stream(std::uint64_t master_seed, std::uint64_t stream_index) {
    return Rng(splitmix64(splitmix64(master_seed) ^ (stream_index + 1)));
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller; draws two uniforms per pair.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;  // log(0) guard
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace sparsebss

#endif
