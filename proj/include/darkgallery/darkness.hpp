#pragma once

#include "darkgallery/geometry.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace darkgallery {

class GuardSet {
public:
  GuardSet() = default;
  // Throws InvalidInput on co-located guards.
  explicit GuardSet(std::vector<Point2> guards);

  std::span<const Point2> points() const { return guards_; }
  std::size_t size() const { return guards_.size(); }
  bool empty() const { return guards_.empty(); }
  const Point2& operator[](std::size_t i) const { return guards_[i]; }
  void add(Point2 p);
  std::optional<std::size_t> find(const Point2& p) const;

private:
  std::vector<Point2> guards_;
};

// Members are guard indices, ordered along anchor + t*direction with
// params[0] = 0 and params.back() = 1.
struct GuardLine {
  std::vector<std::size_t> members;
  Point2 anchor;
  Vec2 direction;
  std::vector<Rat> params;

  std::size_t size() const { return members.size(); }
  Point2 at(const Rat& t) const { return anchor + t * direction; }
  Line carrier() const { return {anchor, anchor + direction}; }
};

// Builds the line through the given guards (at least two, all collinear).
GuardLine make_guard_line(const GuardSet& guards, std::vector<std::size_t> members);

// Open parameter interval on a guard line; a missing bound is unbounded.
struct DarkPortion {
  std::size_t line = 0;
  std::optional<Rat> lo, hi;
  int blocked_count = 0;
};

struct LineContribution {
  GuardLine line;
  int blocked_count = 0;
};

struct DarknessWitness {
  Point2 point;
  int darkness = 0;
  std::vector<LineContribution> contributing_lines;
};

struct DepthCertificate {
  std::size_t guard_count = 0;
  int min_depth = 0;
  int max_darkness = 0;
  DarknessWitness witness;
};

struct JDarkResult {
  bool found = false;
  std::optional<DarknessWitness> witness;
};

struct BoundaryCensus {
  std::vector<Rat> edge_weights;   // g(e) for edge v_i v_{i+1}
  std::vector<bool> darkened;      // per vertex
  int darkened_vertices = 0;       // d
  Rat boundary_guards;             // g^P
  bool shrunken = false;           // every edge has an interior guard or both endpoints guarded
  bool two_dark_free = false;
  bool applicable = false;
  std::string reason;              // why not applicable
  bool equation_holds = false;     // g^P == n + d/2
};

std::vector<GuardLine> collinear_groups(const GuardSet& guards);
// All m+1 portions, in order along the line (zero-count gaps included).
std::vector<DarkPortion> dark_portions(const GuardLine& line, std::size_t line_index = 0);

// Counts guards blocked from p by another guard. A guard at p sees itself.
DarknessWitness darkness_at(const GuardSet& guards, const Point2& p);
DarknessWitness darkness_at(const ConvexRegion& region, const GuardSet& guards, const Point2& p);

DarknessWitness max_darkness(const ConvexRegion& region, const GuardSet& guards);
DepthCertificate min_depth(const ConvexRegion& region, const GuardSet& guards);
JDarkResult has_j_dark(const ConvexRegion& region, const GuardSet& guards, int j);

BoundaryCensus boundary_census(const ConvexPolygon& polygon, const GuardSet& guards);

}  // namespace darkgallery
