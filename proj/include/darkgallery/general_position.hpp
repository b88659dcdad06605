#pragma once

#include "darkgallery/darkness.hpp"

#include <memory>

namespace darkgallery {

// Guards added so far plus every guard-pair line. A new guard is admitted
// only if it is off all those lines (no three collinear) and none of its new
// dark rays meets two old dark rays at one point (no three concurrent rays).
// Checks run over the whole plane, not just a region.
class DarkRayArrangement {
public:
  DarkRayArrangement();
  ~DarkRayArrangement();
  DarkRayArrangement(DarkRayArrangement&&) noexcept;
  DarkRayArrangement& operator=(DarkRayArrangement&&) noexcept;

  bool admits(const Point2& z) const;
  // Throws InvalidInput when !admits(z).
  void add(const Point2& z);
  const GuardSet& guards() const;

private:
  struct State;
  std::unique_ptr<State> state_;
};

// True iff no three guards are collinear and no three dark rays share a point.
bool in_general_position(const GuardSet& guards);

// Rational point on the circle of the given radius; indices enumerate
// distinct points spread around the circle.
Point2 circle_point(const Point2& center, const Rat& radius, std::size_t index);

// Largest power of two r with r^2 < distance^2 from center to every line.
Rat inscribed_power_of_two(std::span<const Halfplane> hs, const Point2& center);

}  // namespace darkgallery
