#include "fuzzysched/control/reference.hpp"

#include <cmath>
#include <numbers>

namespace fuzzysched::control {

Point ReferencePath::centre() const noexcept {
  return {(start.x + end.x) / 2.0, (start.y + end.y) / 2.0};
}

double ReferencePath::radius() const noexcept {
  return std::hypot(end.x - start.x, end.y - start.y) / 2.0;
}

Point ReferencePath::at(double t) const noexcept {
  if (!(t > 0.0)) return start;
  if (t >= duration) return end;
  const Point c = centre();
  const double r = radius();
  const double phase0 = std::atan2(start.y - c.y, start.x - c.x);
  const double angle = phase0 - std::numbers::pi * (t / duration);
  return {c.x + r * std::cos(angle), c.y + r * std::sin(angle)};
}

double tracking_error(Point actual, Point reference) noexcept {
  return std::hypot(actual.x - reference.x, actual.y - reference.y);
}

}  // namespace fuzzysched::control
