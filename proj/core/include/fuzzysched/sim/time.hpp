#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>

namespace fuzzysched::sim {

/// Simulation time. Integer nanoseconds keep event ordering exact and replay
/// bit-identical; continuous parameters (periods, execution means) stay in
/// double seconds and are rounded when they become event times.
using Nanos = std::chrono::duration<std::int64_t, std::nano>;

inline Nanos from_seconds(double seconds) {
  return Nanos(static_cast<std::int64_t>(std::llround(seconds * 1e9)));
}

inline double to_seconds(Nanos t) { return static_cast<double>(t.count()) * 1e-9; }

}  // namespace fuzzysched::sim
