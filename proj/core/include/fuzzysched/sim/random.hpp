#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

namespace fuzzysched::sim {

/// Reproducible named random stream.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. Uniforms take the top 53 bits; normals use Box-Muller. Both
/// transforms are written out here rather than taken from <random>, whose
/// distributions differ between standard libraries.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  /// Stream for `name` under run seed `seed`:
  /// engine seed = splitmix64(seed XOR fnv1a64(name)).
  static RandomStream named(std::uint64_t seed, std::string_view name);

  /// Uniform in [0, 1).
  double uniform();
  /// Uniform in (0, 1].
  double uniform_open_low() { return 1.0 - uniform(); }
  double normal();
  double normal(double stddev) { return stddev == 0.0 ? 0.0 : stddev * normal(); }

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;
std::uint64_t fnv1a64(std::string_view text) noexcept;

}  // namespace fuzzysched::sim
