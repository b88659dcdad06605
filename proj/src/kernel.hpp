#pragma once

// Integer-homogeneous helpers shared by the verifier and the placer.
// A point is (X, Y, W) with W > 0 standing for (X/W, Y/W); a line is
// a*X + b*Y + c*W = 0. Crossings become cross products with no gcds.

#include "darkgallery/geometry.hpp"

namespace darkgallery::kernel {

struct HPoint {
  BigInt x, y, w;
};

struct IntLine {
  BigInt a, b, c;
};

// Primitive integer multiple of a nonzero rational vector, same direction.
std::pair<BigInt, BigInt> primitive(const Vec2& v);
// Same, with sign fixed so the result does not depend on the orientation of v.
std::pair<BigInt, BigInt> undirected(const Vec2& v);

HPoint homogenize(const Point2& p);
Point2 dehomogenize(const HPoint& p);

// Line through two distinct points.
IntLine line_through(const Point2& p, const Point2& q);

// Returns false for parallel lines; otherwise out holds the crossing with w > 0.
bool meet(const IntLine& l1, const IntLine& l2, HPoint& out);

// sign(F/W - r) for W > 0.
int compare(const BigInt& f, const BigInt& w, const Rat& r, BigInt& scratch1, BigInt& scratch2);

}  // namespace darkgallery::kernel
