#pragma once

namespace fuzzysched::control {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Half circle from `start` to `end` at constant angular speed, swept
/// clockwise about their midpoint. For the default endpoints (0,0) -> (2,0)
/// this is the upper arc of the unit circle centred at (1,0).
struct ReferencePath {
  Point start{0.0, 0.0};
  Point end{2.0, 0.0};
  double duration = 4.0;  // seconds

  Point centre() const noexcept;
  double radius() const noexcept;

  /// Times outside [0, duration] clamp to the endpoints, which are returned
  /// exactly.
  Point at(double t) const noexcept;

  friend bool operator==(const ReferencePath&, const ReferencePath&) = default;
};

/// Euclidean distance between robot and target.
double tracking_error(Point actual, Point reference) noexcept;

}  // namespace fuzzysched::control
