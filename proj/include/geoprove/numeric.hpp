#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <utility>

#include "geoprove/algebraizer.hpp"
#include "geoprove/division.hpp"
#include "geoprove/protocol.hpp"

namespace geoprove {

using RationalPoint = std::pair<Rational, Rational>;

/// A concrete rational instance of a construction.
struct NumericInstance {
  std::map<Label, RationalPoint> points;
  /// Values of every coordinate variable of the assignment.
  Assignment values;
};

/// Draws random rational instances by the constructions' numeric semantics.
/// Points on circles are placed by intersecting a random rational line
/// through a known point of the circle, so every instance stays rational.
class InstanceSampler {
 public:
  explicit InstanceSampler(std::uint64_t seed, int magnitude = 20);

  /// nullopt when the draw is degenerate (parallel lines, collapsed
  /// directions, collinear circle points) or disagrees with a pinned or
  /// shared coordinate.
  std::optional<NumericInstance> sample(const ConstructionProtocol& p, const CoordinateAssignment& a);

  /// Numerator in [-magnitude, magnitude], denominator in [1, 7].
  Rational random_rational();
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  int magnitude_;
};

}  // namespace geoprove
